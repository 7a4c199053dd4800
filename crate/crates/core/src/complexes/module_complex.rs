//! Complexes of finite-dimensional left modules given by explicit matrices,
//! and the totalized tensor square `Tot(P ⊗ P)` of a resolution.

use std::sync::OnceLock;

use crate::algebra::{ModuleRep, Side};
use crate::complexes::resolution::FreeResolution;
use crate::complexes::{sign, ChainComplex};
use crate::error::{Error, Result};
use crate::qlinalg::{induced_map, LinearSolver, Matrix, QuotientSpace, Q};
use crate::ring::{FdRing, Ring, TensorModule};

/// `… → C_1 → C_0 → A` with `U`-linear differentials.
#[derive(Debug)]
pub struct ModuleComplex {
    terms: Vec<ModuleRep>,
    /// `diffs[n − 1] = d_n`.
    diffs: Vec<Matrix>,
    augmentation: Matrix,
    solvers: Vec<OnceLock<LinearSolver>>,
    aug_solver: OnceLock<LinearSolver>,
}

impl ModuleComplex {
    pub fn new(terms: Vec<ModuleRep>, diffs: Vec<Matrix>, augmentation: Matrix) -> Result<Self> {
        if terms.is_empty() || diffs.len() + 1 != terms.len() {
            return Err(Error::Invalid("module complex needs one differential per positive degree".into()));
        }
        if augmentation.cols() != terms[0].dim() {
            return Err(Error::Invalid("augmentation has the wrong shape".into()));
        }
        for (n, d) in diffs.iter().enumerate() {
            let (src, tgt) = (&terms[n + 1], &terms[n]);
            if d.rows() != tgt.dim() || d.cols() != src.dim() {
                return Err(Error::Invalid(format!("d_{} has the wrong shape", n + 1)));
            }
            for k in 0..src.algebra().dim() {
                if tgt.action()[k].mul(d) != d.mul(&src.action()[k]) {
                    return Err(Error::Invalid(format!("d_{} is not U-linear", n + 1)));
                }
            }
        }
        if !diffs.is_empty() && !augmentation.mul(&diffs[0]).is_zero() {
            return Err(Error::Invalid("ε∘d_1 ≠ 0".into()));
        }
        for n in 1..diffs.len() {
            if !diffs[n - 1].mul(&diffs[n]).is_zero() {
                return Err(Error::Invalid(format!("d∘d ≠ 0 in degree {}", n + 1)));
            }
        }
        let solvers = (0..diffs.len()).map(|_| OnceLock::new()).collect();
        Ok(ModuleComplex { terms, diffs, augmentation, solvers, aug_solver: OnceLock::new() })
    }

    pub fn top(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &ModuleRep {
        &self.terms[n]
    }

    pub fn diff(&self, n: usize) -> &Matrix {
        &self.diffs[n - 1]
    }

    pub fn augmentation(&self) -> &Matrix {
        &self.augmentation
    }

    /// Augmented complex with `A` in degree −1.
    pub fn augmented(&self) -> ChainComplex {
        let mut dims = vec![self.augmentation.rows()];
        dims.extend(self.terms.iter().map(|t| t.dim()));
        let mut diffs = vec![self.augmentation.clone()];
        diffs.extend(self.diffs.iter().cloned());
        ChainComplex::new(-1, dims, diffs).expect("validated at construction")
    }

    /// Zero homology of the augmented complex in degrees `−1 ..= top − 1`.
    pub fn check_exact(&self) -> Result<()> {
        let c = self.augmented();
        for n in -1..self.top() as i64 {
            let h = c.homology(n).dim();
            if h != 0 {
                return Err(Error::Invalid(format!("homology of dimension {h} in degree {n}")));
            }
        }
        Ok(())
    }

    /// Some `x ∈ C_n` with `d_n x = y`.
    pub fn solve_boundary(&self, n: usize, y: &[Q]) -> Option<Vec<Q>> {
        self.solvers[n - 1].get_or_init(|| LinearSolver::new(&self.diffs[n - 1])).solve(y)
    }

    pub fn solve_augment(&self, a: &[Q]) -> Option<Vec<Q>> {
        self.aug_solver.get_or_init(|| LinearSolver::new(&self.augmentation)).solve(a)
    }
}

/// The free module `U^r` with coordinates `(generator, basis element)`.
pub fn free_module(ring: &FdRing, rank: usize) -> ModuleRep {
    let u = ring.algebra();
    let nu = u.dim();
    let action = (0..nu)
        .map(|k| Matrix::identity(rank).kron(&u.left_mul_matrix(&u.basis(k))))
        .collect();
    ModuleRep::new(u.clone(), Side::Left, rank * nu, action).expect("free modules are modules")
}

/// One summand `P_i ⊗_A P_j` of `Tot_n(P ⊗ P)`.
#[derive(Clone, Debug)]
pub struct TotPiece {
    pub i: usize,
    pub j: usize,
    pub offset: usize,
    pub tensor: TensorModule<ModuleRep>,
}

/// `Tot(P ⊗ P)` with diagonal `U`-action, augmented by `A ⊗ A ≅ A`.
#[derive(Debug)]
pub struct TensorResolution {
    pub complex: ModuleComplex,
    pub layout: Vec<Vec<TotPiece>>,
}

/// Builds `Tot_n(P ⊗ P)` for `n ≤ max_degree`, with `d = d_h + (−1)^i d_v`.
pub fn tensor_resolution(p: &FreeResolution<FdRing>, max_degree: usize) -> Result<TensorResolution> {
    if p.side() != Side::Left {
        return Err(Error::Invalid("tensor_resolution needs a left resolution".into()));
    }
    if max_degree > p.top() {
        return Err(Error::WindowExceeded { requested: max_degree, window: p.top() });
    }
    let ring = p.ring();
    let frees: Vec<ModuleRep> = (0..=max_degree).map(|i| free_module(ring, p.rank(i))).collect();
    let d: Vec<Matrix> = (1..=max_degree).map(|i| p.realize_diff(i, 0)).collect::<Result<_>>()?;
    let mut layout: Vec<Vec<TotPiece>> = Vec::new();
    let mut terms = Vec::new();
    for n in 0..=max_degree {
        let mut pieces = Vec::new();
        let mut off = 0;
        for i in 0..=n {
            let tensor = ring.tensor_left(&frees[i], &frees[n - i])?;
            let dim = tensor.dim();
            pieces.push(TotPiece { i, j: n - i, offset: off, tensor });
            off += dim;
        }
        let u = ring.algebra();
        let action = (0..u.dim())
            .map(|k| {
                let mut m = Matrix::zeros(off, off);
                for pc in &pieces {
                    m.set_block(pc.offset, pc.offset, &pc.tensor.module.action()[k]);
                }
                m
            })
            .collect();
        terms.push(ModuleRep::new(u.clone(), Side::Left, off, action)?);
        layout.push(pieces);
    }
    let mut diffs = Vec::new();
    for n in 1..=max_degree {
        let mut m = Matrix::zeros(terms[n - 1].dim(), terms[n].dim());
        for pc in &layout[n] {
            let (i, j) = (pc.i, pc.j);
            if i >= 1 {
                let tgt = &layout[n - 1][i - 1];
                let f = d[i - 1].kron(&Matrix::identity(frees[j].dim()));
                m.add_block(tgt.offset, pc.offset, &induced_map(&f, &pc.tensor.quotient, &tgt.tensor.quotient)?);
            }
            if j >= 1 {
                let tgt = &layout[n - 1][i];
                let f = Matrix::identity(frees[i].dim()).kron(&d[j - 1]).scale(&sign(i));
                m.add_block(tgt.offset, pc.offset, &induced_map(&f, &pc.tensor.quotient, &tgt.tensor.quotient)?);
            }
        }
        diffs.push(m);
    }
    // ε ⊗ ε into A ⊗ A, then A ⊗ A ≅ A
    let base = ring.base_module();
    let aa = ring.tensor_left(&base, &base)?;
    let unit = ring.left_unit(&base, &aa)?;
    let eps0 = p.realize_augmentation(0);
    let pc = &layout[0][0];
    let ee = induced_map(&eps0.kron(&eps0), &pc.tensor.quotient, &aa.quotient)?;
    let augmentation = unit.mul(&ee);
    let complex = ModuleComplex::new(terms, diffs, augmentation)?;
    Ok(TensorResolution { complex, layout })
}

impl TensorResolution {
    /// Splits a vector of `Tot_n` into its pieces, lifted to `P_i ⊗_k P_j`.
    pub fn split(&self, n: usize, x: &[Q]) -> Vec<(usize, usize, Vec<Q>)> {
        self.layout[n]
            .iter()
            .map(|pc| (pc.i, pc.j, pc.tensor.quotient.lift(&x[pc.offset..pc.offset + pc.tensor.dim()])))
            .collect()
    }
}

/// `QuotientSpace` of a tensor piece, for callers projecting pure tensors.
pub fn piece_quotient(pc: &TotPiece) -> &QuotientSpace {
    &pc.tensor.quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::galois_map;
    use crate::complexes::bar::bar_resolution;
    use crate::instances::fd::*;

    #[test]
    fn tensor_square_of_dual_numbers_bar_is_exact() {
        let d = enveloping_bialgebroid(dual_numbers()).unwrap();
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 4).unwrap();
        let t = tensor_resolution(&p, 3).unwrap();
        t.complex.check_exact().unwrap();
    }

    #[test]
    fn semisimple_group_tensor_square() {
        let d = group_bialgebra(&FiniteGroup::cyclic(2));
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 2).unwrap();
        let t = tensor_resolution(&p, 1).unwrap();
        assert_eq!(t.complex.term(0).dim(), 4);
        t.complex.check_exact().unwrap();
    }
}
