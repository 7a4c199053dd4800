//! Exact linear algebra over the rationals.
//!
//! Everything else in the crate reduces to the operations here: reduced
//! row-echelon forms, kernels, canonical subspaces and quotients, and maps
//! induced on quotients. There is no tolerance anywhere; equality is
//! equality of rationals.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serializes rationals as strings (`"3/4"`), for `#[serde(serialize_with)]`.
pub fn ser_qvec<S: serde::Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_q))
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_assign_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn vec_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_q).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries.length must equal rows*cols");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; an empty list gives a `0 x cols` matrix.
    pub fn from_rows(cols: usize, rows: &[Vec<Q>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Q] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Q) {
        self.data[r * self.cols + c] = x;
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: &Q) {
        if !x.is_zero() {
            self.data[r * self.cols + c] += x;
        }
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: vec_scale(c, &self.data) }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        add_assign_scaled(&mut self.data, c, &other.data);
    }

    /// Kronecker product; row index `i * b.rows + k`, column `j * b.cols + l`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let x = b.get(k, l);
                        if !x.is_zero() {
                            out.set(i * b.rows + k, j * b.cols + l, a * x);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                let x = block.get(r, c);
                if !x.is_zero() {
                    self.data[(r0 + r) * self.cols + c0 + c] += x;
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.data[r * cols + c] = self.get(r0 + r, c0 + c).clone();
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

fn eliminate(rows: &mut [Vec<Q>], ncols: usize, stop_col: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols.min(stop_col) {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form and pivot columns. Pivots are chosen as the
/// leftmost nonzero column and the topmost available row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.row_vecs();
    let pivots = eliminate(&mut rows, m.cols, m.cols);
    (Matrix::from_rows(m.cols, &rows), pivots)
}

/// Canonical basis of `{v : m v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vec<Q>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vec(n, f);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect();
    Subspace::from_vectors(n, &vecs)
}

/// Image (column space) of `m` as a subspace of the codomain.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_matrix_rows(&m.transpose())
}

/// Some `v` with `m v = b`; free variables in rref coordinates are set to
/// zero. `None` exactly when `b` is not in the image.
pub fn solve(m: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(m.rows, b.len());
    let mut rows: Vec<Vec<Q>> = (0..m.rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut rows, m.cols + 1, m.cols);
    let rank = pivots.len();
    if rows[rank..].iter().any(|r| !r[m.cols].is_zero()) {
        return None;
    }
    let mut v = zero_vec(m.cols);
    for (i, &p) in pivots.iter().enumerate() {
        v[p] = rows[i][m.cols].clone();
    }
    Some(v)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if m.rows != m.cols {
        return None;
    }
    let s = LinearSolver::new(m);
    if s.rank() != m.rows {
        return None;
    }
    let cols: Vec<Vec<Q>> = (0..m.rows).map(|i| s.solve(&unit_vec(m.rows, i)).expect("full rank")).collect();
    Some(Matrix::from_cols(m.rows, &cols))
}

/// Reusable factorization for repeated solves against one matrix.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    cols: usize,
    pivots: Vec<usize>,
    /// Row operations taking `m` to its rref, as a `rows x rows` matrix.
    transform: Matrix,
}

impl LinearSolver {
    pub fn new(m: &Matrix) -> Self {
        let n = m.rows;
        let mut rows: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut r = m.row(i).to_vec();
                r.extend(unit_vec(n, i));
                r
            })
            .collect();
        let pivots = eliminate(&mut rows, m.cols + n, m.cols);
        let t: Vec<Vec<Q>> = rows.into_iter().map(|r| r[m.cols..].to_vec()).collect();
        LinearSolver { cols: m.cols, pivots, transform: Matrix::from_rows(n, &t) }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let c = self.transform.mul_vec(b);
        if !is_zero_vec(&c[self.rank()..]) {
            return None;
        }
        let mut v = zero_vec(self.cols);
        for (i, &p) in self.pivots.iter().enumerate() {
            v[p] = c[i].clone();
        }
        Some(v)
    }
}

/// A subspace stored by its unique reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n), pivots: vec![] }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    pub fn from_vectors(n: usize, vecs: &[Vec<Q>]) -> Self {
        Self::from_matrix_rows(&Matrix::from_rows(n, vecs))
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = rref(m);
        let basis = r.block(0, 0, pivots.len(), m.cols);
        Subspace { ambient_dim: m.cols, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Q>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the rref rows; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                add_assign_scaled(&mut out, &c, self.basis.row(i));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the rref basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn from_coords(&self, c: &[Q]) -> Vec<Q> {
        let mut v = zero_vec(self.ambient_dim);
        for (i, x) in c.iter().enumerate() {
            add_assign_scaled(&mut v, x, self.basis.row(i));
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_matrix_rows(&self.basis.vstack(&other.basis))
    }
}

/// `ambient / relations`, with canonical representatives: the standard basis
/// vectors at the non-pivot columns of the relation rref.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    representatives: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let n = relations.ambient_dim();
        let mut is_pivot = vec![false; n];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let representatives = (0..n).filter(|&i| !is_pivot[i]).collect();
        QuotientSpace { relations, representatives }
    }

    pub fn trivial(n: usize) -> Self {
        Self::new(Subspace::zero(n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient indices of the representative basis vectors.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn project(&self, v: &[Q]) -> Vec<Q> {
        let r = self.relations.reduce(v);
        self.representatives.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn lift(&self, coords: &[Q]) -> Vec<Q> {
        let mut v = zero_vec(self.ambient_dim());
        for (c, &i) in coords.iter().zip(&self.representatives) {
            v[i] = c.clone();
        }
        v
    }

    pub fn projection_matrix(&self) -> Matrix {
        let n = self.ambient_dim();
        let cols: Vec<Vec<Q>> = (0..n).map(|i| self.project(&unit_vec(n, i))).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    pub fn lift_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.ambient_dim(), self.dim());
        for (j, &i) in self.representatives.iter().enumerate() {
            m.set(i, j, Q::one());
        }
        m
    }
}

pub fn quotient(ambient_dim: usize, relations: &[Vec<Q>]) -> QuotientSpace {
    QuotientSpace::new(Subspace::from_vectors(ambient_dim, relations))
}

/// Matrix of the map induced by `f` on quotient coordinates, or
/// `NotWellDefined` when `f` does not carry source relations into target
/// relations.
pub fn induced_map(f: &Matrix, source: &QuotientSpace, target: &QuotientSpace) -> Result<Matrix> {
    if f.cols() != source.ambient_dim() || f.rows() != target.ambient_dim() {
        return Err(Error::Invalid(format!(
            "induced_map: {}x{} matrix between ambients {} -> {}",
            f.rows(),
            f.cols(),
            source.ambient_dim(),
            target.ambient_dim()
        )));
    }
    for (i, r) in source.relations().basis_vecs().iter().enumerate() {
        if !target.relations().contains(&f.mul_vec(r)) {
            return Err(Error::NotWellDefined(format!("relation {i} leaves the target relation space")));
        }
    }
    let cols: Vec<Vec<Q>> = source
        .representatives()
        .iter()
        .map(|&j| target.project(&f.col(j)))
        .collect();
    Ok(Matrix::from_cols(target.dim(), &cols))
}

pub fn abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_zero_and_rank_one() {
        let (r, p) = rref(&Matrix::zeros(2, 2));
        assert!(r.is_zero());
        assert!(p.is_empty());
        let (r, p) = rref(&Matrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(2, 3)).dim(), 3);
        let k = kernel(&Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[q(1), q(-1), q(1)]));
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), qr(1, 2)];
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b));
        assert_eq!(solve(&Matrix::from_i64(&[&[1, 1]]), &[q(2)]), Some(vec![q(2), q(0)]));
        assert_eq!(solve(&Matrix::from_i64(&[&[1], &[1]]), &[q(1), q(2)]), None);
    }

    #[test]
    fn quotient_examples() {
        let qs = quotient(3, &[]);
        assert_eq!(qs.dim(), 3);
        assert_eq!(qs.project(&[q(1), q(2), q(3)]), vec![q(1), q(2), q(3)]);
        let qs = quotient(2, &[vec![q(1), q(-1)]]);
        assert_eq!(qs.dim(), 1);
        assert_eq!(qs.project(&[q(1), q(0)]), qs.project(&[q(0), q(1)]));
    }

    #[test]
    fn induced_map_identity_and_failure() {
        let qs = quotient(2, &[vec![q(1), q(-1)]]);
        assert_eq!(induced_map(&Matrix::identity(2), &qs, &qs).unwrap(), Matrix::identity(1));
        let swapish = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(matches!(induced_map(&swapish, &qs, &qs), Err(Error::NotWellDefined(_))));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(fmt_q(&qr(-6, 4)), "-3/2");
        assert_eq!(fmt_q(&q(5)), "5");
        assert_eq!(parse_q("-3/2").unwrap(), qr(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inverse(&Matrix::from_i64(&[&[1, 2], &[2, 4]])).is_none());
    }
}
