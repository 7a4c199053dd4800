//! Complexes of finite-dimensional spaces, their homology, shifts and
//! totalization, plus resolutions over the rings of [`crate::ring`].
//!
//! Everything is homologically graded internally; a cochain complex `Cⁿ` is
//! stored as `C_{−n}` and read back through [`ChainComplex::cohomology`].

pub mod bar;
pub mod lift;
pub mod module_complex;
pub mod resolution;

use serde::{Deserialize, Serialize};

use crate::algebra::{matrix_from_json, matrix_to_json};
use crate::error::{Error, Result};
use crate::qlinalg::{kernel, q, Matrix, QuotientSpace, Subspace, Q};

/// `C_n` for `n` in `start .. start + dims.len()`, with `d_n : C_n → C_{n−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    start: i64,
    dims: Vec<usize>,
    /// `diffs[k]` is `d_{start+k+1}`.
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(start: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::Invalid("need one differential between consecutive degrees".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != dims[k] || d.cols() != dims[k + 1] {
                return Err(Error::Invalid(format!("differential in degree {} has the wrong shape", start + k as i64 + 1)));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k - 1].mul(&diffs[k]).is_zero() {
                return Err(Error::Invalid(format!("d∘d ≠ 0 in degree {}", start + k as i64 + 1)));
            }
        }
        Ok(ChainComplex { start, dims, diffs })
    }

    /// `C⁰ → C¹ → ⋯` with `maps[n] : Cⁿ → Cⁿ⁺¹`, reindexed as `C_{−n}`.
    pub fn from_cochain(dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let top = dims.len() as i64 - 1;
        let mut d = dims.clone();
        d.reverse();
        let mut m = maps;
        m.reverse();
        ChainComplex::new(-top, d, m)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, n: i64) -> usize {
        if n < self.start || n > self.end() {
            0
        } else {
            self.dims[(n - self.start) as usize]
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_n : C_n → C_{n−1}`, zero outside the stored range.
    pub fn diff(&self, n: i64) -> Matrix {
        if n > self.start && n <= self.end() {
            self.diffs[(n - self.start - 1) as usize].clone()
        } else {
            Matrix::zeros(self.dim(n - 1), self.dim(n))
        }
    }

    pub fn homology(&self, n: i64) -> Homology {
        Homology::new(&self.diff(n), &self.diff(n + 1), self.dim(n))
    }

    pub fn cohomology(&self, n: i64) -> Homology {
        self.homology(-n)
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.start..=self.end()).map(|n| if n.rem_euclid(2) == 0 { 1 } else { -1 } * self.dim(n) as i64).sum()
    }

    /// `(T^m C)_n = C_{n−m}` with differentials multiplied by `(−1)^m`.
    pub fn shift(&self, m: i64) -> ChainComplex {
        let sign = if m.rem_euclid(2) == 0 { q(1) } else { q(-1) };
        ChainComplex {
            start: self.start + m,
            dims: self.dims.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { start: self.start, dims: self.dims.clone(), diffs: self.diffs.iter().map(matrix_to_json).collect() }
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self> {
        let diffs = j
            .diffs
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let mut mat = matrix_from_json(m, j.dims[k + 1])?;
                if m.is_empty() {
                    mat = Matrix::zeros(j.dims[k], j.dims[k + 1]);
                }
                Ok(mat)
            })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(j.start, j.dims.clone(), diffs)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub start: i64,
    pub dims: Vec<usize>,
    pub diffs: Vec<Vec<Vec<String>>>,
}

/// `ker d_n / im d_{n+1}` with canonical representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    cycles: Subspace,
    quotient: QuotientSpace,
    boundaries: Subspace,
}

impl Homology {
    /// `d_out : C_n → C_{n−1}`, `d_in : C_{n+1} → C_n`.
    pub fn new(d_out: &Matrix, d_in: &Matrix, dim: usize) -> Self {
        let cycles = if d_out.rows() == 0 { Subspace::full(dim) } else { kernel(d_out) };
        let boundaries = Subspace::from_vectors(dim, &(0..d_in.cols()).map(|j| d_in.col(j)).collect::<Vec<_>>());
        let rel: Vec<Vec<Q>> =
            boundaries.basis_vecs().iter().map(|b| cycles.coords(b).expect("boundaries are cycles")).collect();
        let quotient = crate::qlinalg::quotient(cycles.dim(), &rel);
        Homology { cycles, quotient, boundaries }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    pub fn is_cycle(&self, z: &[Q]) -> bool {
        self.cycles.contains(z)
    }

    pub fn is_boundary(&self, z: &[Q]) -> bool {
        self.boundaries.contains(z)
    }

    /// Coordinates of the class of a cycle in the canonical class basis.
    pub fn class_of(&self, z: &[Q]) -> Result<Vec<Q>> {
        let c = self.cycles.coords(z).ok_or_else(|| Error::Invalid("not a cycle".into()))?;
        Ok(self.quotient.project(&c))
    }

    pub fn representative(&self, class: &[Q]) -> Vec<Q> {
        self.cycles.from_coords(&self.quotient.lift(class))
    }

    pub fn representatives(&self) -> Vec<Vec<Q>> {
        (0..self.dim()).map(|i| self.representative(&crate::qlinalg::unit_vec(self.dim(), i))).collect()
    }

    /// Matrix of the map induced on homology by a chain-level map `f` into `target`.
    pub fn induced(&self, f: &Matrix, target: &Homology) -> Result<Matrix> {
        let cols = self
            .representatives()
            .iter()
            .map(|z| target.class_of(&f.mul_vec(z)))
            .collect::<Result<Vec<_>>>()?;
        if cols.is_empty() {
            return Ok(Matrix::zeros(target.dim(), 0));
        }
        Ok(Matrix::from_cols(target.dim(), &cols))
    }
}

/// `C_{i,j}` for `0 ≤ i < cols`, `0 ≤ j < rows`, with `d_h : C_{i,j} → C_{i−1,j}`
/// and `d_v : C_{i,j} → C_{i,j−1}` commuting.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    dims: Vec<Vec<usize>>,
    /// `dh[i][j] : C_{i,j} → C_{i−1,j}` for `i ≥ 1`, index `i−1`.
    dh: Vec<Vec<Matrix>>,
    /// `dv[i][j] : C_{i,j} → C_{i,j−1}` for `j ≥ 1`, index `j−1`.
    dv: Vec<Vec<Matrix>>,
}

impl DoubleComplex {
    pub fn new(dims: Vec<Vec<usize>>, dh: Vec<Vec<Matrix>>, dv: Vec<Vec<Matrix>>) -> Result<Self> {
        let c = DoubleComplex { dims, dh, dv };
        let (ni, nj) = (c.cols(), c.rows());
        for i in 0..ni {
            for j in 0..nj {
                if i >= 2 && !c.h(i - 1, j).mul(&c.h(i, j)).is_zero() {
                    return Err(Error::Invalid(format!("d_h∘d_h ≠ 0 at ({i},{j})")));
                }
                if j >= 2 && !c.v(i, j - 1).mul(&c.v(i, j)).is_zero() {
                    return Err(Error::Invalid(format!("d_v∘d_v ≠ 0 at ({i},{j})")));
                }
                if i >= 1 && j >= 1 && c.h(i, j - 1).mul(&c.v(i, j)) != c.v(i - 1, j).mul(&c.h(i, j)) {
                    return Err(Error::Invalid(format!("squares do not commute at ({i},{j})")));
                }
            }
        }
        Ok(c)
    }

    pub fn cols(&self) -> usize {
        self.dims.len()
    }

    pub fn rows(&self) -> usize {
        self.dims.first().map_or(0, |c| c.len())
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.dims[i][j]
    }

    fn h(&self, i: usize, j: usize) -> Matrix {
        self.dh[i - 1][j].clone()
    }

    fn v(&self, i: usize, j: usize) -> Matrix {
        self.dv[i][j - 1].clone()
    }

    /// Offsets of the summands `C_{i,n−i}` inside `Tot_n`, by increasing `i`.
    pub fn tot_layout(&self, n: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut off = 0;
        for i in 0..self.cols() {
            if n >= i && n - i < self.rows() {
                out.push((i, n - i, off));
                off += self.dims[i][n - i];
            }
        }
        out
    }

    /// `Tot_n = ⊕ C_{i,n−i}` with `d = d_h + (−1)^i d_v`.
    pub fn totalize(&self) -> ChainComplex {
        let top = self.cols() + self.rows() - 2;
        let dims: Vec<usize> = (0..=top).map(|n| self.tot_layout(n).iter().map(|&(i, j, _)| self.dims[i][j]).sum()).collect();
        let mut diffs = Vec::new();
        for n in 1..=top {
            let src = self.tot_layout(n);
            let tgt = self.tot_layout(n - 1);
            let off = |i: usize, j: usize| tgt.iter().find(|&&(a, b, _)| a == i && b == j).map(|t| t.2);
            let mut d = Matrix::zeros(dims[n - 1], dims[n]);
            for &(i, j, c0) in &src {
                if i >= 1 {
                    if let Some(r0) = off(i - 1, j) {
                        d.add_block(r0, c0, &self.h(i, j));
                    }
                }
                if j >= 1 {
                    if let Some(r0) = off(i, j - 1) {
                        let s = if i % 2 == 0 { q(1) } else { q(-1) };
                        d.add_block(r0, c0, &self.v(i, j).scale(&s));
                    }
                }
            }
            diffs.push(d);
        }
        ChainComplex::new(0, dims, diffs).expect("totalization squares to zero")
    }

    pub fn transpose(&self) -> DoubleComplex {
        let (ni, nj) = (self.cols(), self.rows());
        let dims = (0..nj).map(|j| (0..ni).map(|i| self.dims[i][j]).collect()).collect();
        let dh = (1..nj).map(|j| (0..ni).map(|i| self.v(i, j)).collect()).collect();
        let dv = (0..nj).map(|j| (1..ni).map(|i| self.h(i, j)).collect()).collect();
        DoubleComplex { dims, dh, dv }
    }

    /// The isomorphism `Tot(C) → Tot(Cᵀ)`, `(−1)^{ij}` on `C_{i,j}`.
    pub fn transpose_iso(&self, n: usize) -> Matrix {
        let t = self.transpose();
        let src = self.tot_layout(n);
        let tgt = t.tot_layout(n);
        let total: usize = src.iter().map(|&(i, j, _)| self.dims[i][j]).sum();
        let mut m = Matrix::zeros(total, total);
        for &(i, j, c0) in &src {
            let r0 = tgt.iter().find(|&&(a, b, _)| a == j && b == i).expect("transposed summand").2;
            let s = if (i * j) % 2 == 0 { q(1) } else { q(-1) };
            m.set_block(r0, c0, &Matrix::identity(self.dims[i][j]).scale(&s));
        }
        m
    }
}

/// Sign helper `(−1)^k`.
pub fn sign(k: usize) -> Q {
    if k % 2 == 0 {
        q(1)
    } else {
        q(-1)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::Matrix;

    #[test]
    fn identity_differential_is_acyclic() {
        let c = ChainComplex::new(0, vec![1, 1], vec![Matrix::identity(1)]).unwrap();
        assert_eq!(c.homology(0).dim(), 0);
        assert_eq!(c.homology(1).dim(), 0);
    }

    #[test]
    fn zero_differentials_give_the_spaces() {
        let c = ChainComplex::new(0, vec![2, 3], vec![Matrix::zeros(2, 3)]).unwrap();
        assert_eq!((c.homology(0).dim(), c.homology(1).dim()), (2, 3));
        assert_eq!(c.homology(5).dim(), 0);
    }

    #[test]
    fn truncated_koszul_of_x() {
        // multiplication by x from Q[x]_{<N-1} into Q[x]_{<N}
        let n = 5;
        let mut d = Matrix::zeros(n, n - 1);
        for k in 0..n - 1 {
            d.set(k + 1, k, q(1));
        }
        let c = ChainComplex::new(0, vec![n, n - 1], vec![d]).unwrap();
        assert_eq!(c.homology(0).dim(), 1);
        assert_eq!(c.homology(1).dim(), 0);
        let h = c.homology(0);
        let rep = h.representative(&[q(1)]);
        assert_eq!(h.class_of(&rep).unwrap(), vec![q(1)]);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d = Matrix::identity(1);
        assert!(ChainComplex::new(0, vec![1, 1, 1], vec![d.clone(), d]).is_err());
    }

    #[test]
    fn shift_signs_and_inverse() {
        let d = Matrix::from_i64(&[&[1, 2]]);
        let c = ChainComplex::new(0, vec![1, 2], vec![d.clone()]).unwrap();
        assert_eq!(c.shift(0), c);
        assert_eq!(c.shift(1).diff(2), d.scale(&q(-1)));
        assert_eq!(c.shift(1).start(), 1);
        assert_eq!(c.shift(1).shift(-1), c);
    }

    #[test]
    fn cochain_reindexing() {
        let c = ChainComplex::from_cochain(vec![1, 1], vec![Matrix::zeros(1, 1)]).unwrap();
        assert_eq!(c.cohomology(0).dim(), 1);
        assert_eq!(c.cohomology(1).dim(), 1);
        assert_eq!(c.start(), -1);
    }

    #[test]
    fn json_round_trip() {
        let c = ChainComplex::new(0, vec![1, 2], vec![Matrix::from_i64(&[&[1, -1]])]).unwrap();
        let j = serde_json::to_string(&c.to_json()).unwrap();
        let back = ChainComplex::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    fn square() -> DoubleComplex {
        // C_{1,1} → C_{0,1}, C_{1,0}, both → C_{0,0}; all Q with identity maps
        let i = Matrix::identity(1);
        DoubleComplex::new(vec![vec![1, 1], vec![1, 1]], vec![vec![i.clone(), i.clone()]], vec![vec![i.clone()], vec![i]]).unwrap()
    }

    #[test]
    fn commuting_square_totalizes() {
        let t = square().totalize();
        assert_eq!(t.dims(), &[1, 2, 1]);
        assert_eq!(t.euler_characteristic(), 0);
        for n in 0..3 {
            assert_eq!(t.homology(n).dim(), 0);
        }
    }

    #[test]
    fn one_column_is_its_column() {
        let d = Matrix::from_i64(&[&[2]]);
        let dc = DoubleComplex::new(vec![vec![1, 1]], vec![], vec![vec![d.clone()]]).unwrap();
        assert_eq!(dc.totalize(), ChainComplex::new(0, vec![1, 1], vec![d]).unwrap());
    }

    #[test]
    fn transpose_iso_is_a_chain_map() {
        let dc = square();
        let (a, b) = (dc.totalize(), dc.transpose().totalize());
        for n in 1..3 {
            let lhs = dc.transpose_iso(n - 1).mul(&a.diff(n as i64));
            let rhs = b.diff(n as i64).mul(&dc.transpose_iso(n));
            assert_eq!(lhs, rhs);
        }
    }
}
