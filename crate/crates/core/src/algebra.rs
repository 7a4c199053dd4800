//! Finite-dimensional algebras given by structure constants, and their modules.

use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlinalg::{
    add_assign_scaled, fmt_q, induced_map, kernel, parse_q, unit_vec, zero_vec, Matrix, QuotientSpace, Subspace, Q,
};

/// An associative unital algebra with a fixed basis `b_0..b_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    labels: Vec<String>,
    /// `mult[i * dim + j]` holds the coordinates of `b_i b_j`.
    mult: Vec<Vec<Q>>,
    unit: Vec<Q>,
}

impl FinDimAlgebra {
    /// `mult[i][j][k]` is the coefficient of `b_k` in `b_i b_j`.
    pub fn new(labels: Vec<String>, mult: Vec<Vec<Vec<Q>>>, unit: Vec<Q>) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n || mult.len() != n {
            return Err(Error::Invalid(format!("algebra of dimension {n} has malformed tables")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in mult {
            if row.len() != n {
                return Err(Error::Invalid("structure constants are not square".into()));
            }
            for v in row {
                if v.len() != n {
                    return Err(Error::Invalid("structure constant vector has wrong length".into()));
                }
                flat.push(v);
            }
        }
        let a = FinDimAlgebra { labels, mult: flat, unit };
        a.validate()?;
        Ok(a)
    }

    /// Algebra whose basis is closed under multiplication, e.g. a monoid
    /// algebra: `table[i][j] = Some(k)` means `b_i b_j = b_k`, `None` means zero.
    pub fn from_basis_table(labels: Vec<String>, table: &[Vec<Option<usize>>], unit: usize) -> Result<Self> {
        let n = labels.len();
        let mult = table
            .iter()
            .map(|row| row.iter().map(|e| e.map_or_else(|| zero_vec(n), |k| unit_vec(n, k))).collect())
            .collect();
        Self::new(labels, mult, unit_vec(n, unit))
    }

    pub fn ground_field() -> Self {
        FinDimAlgebra { labels: vec!["1".into()], mult: vec![vec![Q::one()]], unit: vec![Q::one()] }
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let b = unit_vec(n, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::Invalid(format!("unit does not act as identity on {}", self.labels[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for l in 0..n {
                    let left = self.mul(&ij, &unit_vec(n, l));
                    let right = self.mul(&unit_vec(n, i), self.basis_product(j, l));
                    if left != right {
                        return Err(Error::Invalid(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[l]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Q] {
        &self.mult[i * self.dim() + j]
    }

    pub fn basis(&self, i: usize) -> Vec<Q> {
        unit_vec(self.dim(), i)
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_assign_scaled(&mut out, &(a * b), self.basis_product(i, j));
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Q>> = (0..n).map(|j| self.mul(x, &unit_vec(n, j))).collect();
        Matrix::from_cols(n, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Q>> = (0..n).map(|j| self.mul(&unit_vec(n, j), x)).collect();
        Matrix::from_cols(n, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<Q>>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.basis_product(i, j).to_vec()).collect()).collect()
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            dim: self.dim(),
            labels: self.labels.clone(),
            unit: self.unit.iter().map(fmt_q).collect(),
            mult: self
                .structure_constants()
                .iter()
                .map(|r| r.iter().map(|v| v.iter().map(fmt_q).collect()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        if j.labels.len() != j.dim {
            return Err(Error::Parse(format!("expected {} labels, found {}", j.dim, j.labels.len())));
        }
        let unit = j.unit.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()?;
        let mult = j
            .mult
            .iter()
            .map(|r| r.iter().map(|v| v.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::new(j.labels.clone(), mult, unit)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
}

pub fn opposite(a: &FinDimAlgebra) -> FinDimAlgebra {
    let n = a.dim();
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mult.push(a.basis_product(j, i).to_vec());
        }
    }
    FinDimAlgebra { labels: a.labels.clone(), mult, unit: a.unit.clone() }
}

/// `a ⊗ b` with componentwise product; basis index `i * dim(b) + j`.
pub fn tensor_algebras(a: &FinDimAlgebra, b: &FinDimAlgebra) -> FinDimAlgebra {
    let (n, m) = (a.dim(), b.dim());
    let mut labels = Vec::with_capacity(n * m);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(format!("{la}⊗{lb}"));
        }
    }
    let mut mult = Vec::with_capacity(n * n * m * m);
    for i in 0..n {
        for j in 0..m {
            for k in 0..n {
                for l in 0..m {
                    mult.push(kron_vec(a.basis_product(i, k), b.basis_product(j, l)));
                }
            }
        }
    }
    FinDimAlgebra { labels, mult, unit: kron_vec(a.unit(), b.unit()) }
}

/// `A^e = A ⊗ A^op`: `(x⊗y)(x'⊗y') = xx' ⊗ y'y`.
pub fn enveloping(a: &FinDimAlgebra) -> FinDimAlgebra {
    tensor_algebras(a, &opposite(a))
}

pub fn kron_vec(x: &[Q], y: &[Q]) -> Vec<Q> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(if a.is_zero() || b.is_zero() { Q::zero() } else { a * b });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A finite-dimensional module. Elements are column vectors; for a right
/// module `m·u` is `act(u) m`, so `act(uv) = act(v) act(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    algebra: Arc<FinDimAlgebra>,
    side: Side,
    dim: usize,
    action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(algebra: Arc<FinDimAlgebra>, side: Side, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Invalid(format!(
                "module needs {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Invalid(format!("action matrices must be {dim}x{dim}")));
        }
        let m = ModuleRep { algebra, side, dim, action };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        if !self.act(self.algebra.unit()).is_identity() {
            return Err(Error::Invalid("unit does not act as identity".into()));
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = match self.side {
                    Side::Left => self.action[i].mul(&self.action[j]),
                    Side::Right => self.action[j].mul(&self.action[i]),
                };
                if lhs != self.act(self.algebra.basis_product(i, j)) {
                    return Err(Error::Invalid(format!(
                        "action is not multiplicative on ({}, {})",
                        self.algebra.labels()[i],
                        self.algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn left_regular(a: &Arc<FinDimAlgebra>) -> Self {
        let action = (0..a.dim()).map(|i| a.left_mul_matrix(&a.basis(i))).collect();
        ModuleRep { algebra: a.clone(), side: Side::Left, dim: a.dim(), action }
    }

    pub fn right_regular(a: &Arc<FinDimAlgebra>) -> Self {
        let action = (0..a.dim()).map(|i| a.right_mul_matrix(&a.basis(i))).collect();
        ModuleRep { algebra: a.clone(), side: Side::Right, dim: a.dim(), action }
    }

    /// The linear dual `Hom_k(M, k)` on the opposite side, acting by transposes.
    pub fn dual(&self) -> Self {
        ModuleRep {
            algebra: self.algebra.clone(),
            side: self.side.flip(),
            dim: self.dim,
            action: self.action.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn act(&self, x: &[Q]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            out.add_scaled(c, m);
        }
        out
    }

    /// Restriction along an algebra map given by its matrix (columns are images of basis elements).
    pub fn pullback(&self, source: &Arc<FinDimAlgebra>, f: &Matrix) -> Result<Self> {
        let action = (0..source.dim()).map(|i| self.act(&f.col(i))).collect();
        ModuleRep::new(source.clone(), self.side, self.dim, action)
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson { dim: self.dim, side: self.side, action: self.action.iter().map(matrix_to_json).collect() }
    }

    pub fn from_json(algebra: &Arc<FinDimAlgebra>, j: &ModuleJson) -> Result<Self> {
        let action = j.action.iter().map(|m| matrix_from_json(m, j.dim)).collect::<Result<Vec<_>>>()?;
        ModuleRep::new(algebra.clone(), j.side, j.dim, action)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dim: usize,
    pub side: Side,
    pub action: Vec<Vec<Vec<String>>>,
}

pub fn matrix_to_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(fmt_q).collect()).collect()
}

pub fn matrix_from_json(rows: &[Vec<String>], cols: usize) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != cols {
                return Err(Error::Parse(format!("matrix row of length {} where {cols} expected", r.len())));
            }
            r.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(cols, &parsed))
}

/// A space with commuting left and right module structures.
#[derive(Clone, Debug)]
pub struct BimoduleRep {
    pub left: ModuleRep,
    pub right: ModuleRep,
}

impl BimoduleRep {
    pub fn new(left: ModuleRep, right: ModuleRep) -> Result<Self> {
        if left.side() != Side::Left || right.side() != Side::Right || left.dim() != right.dim() {
            return Err(Error::Invalid("bimodule needs a left and a right action on one space".into()));
        }
        for l in left.action() {
            for r in right.action() {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::Invalid("left and right actions do not commute".into()));
                }
            }
        }
        Ok(BimoduleRep { left, right })
    }

    pub fn regular(a: &Arc<FinDimAlgebra>) -> Self {
        BimoduleRep { left: ModuleRep::left_regular(a), right: ModuleRep::right_regular(a) }
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }
}

/// `M ⊗_a N` for `M` a right and `N` a left module, as a quotient of `M ⊗_k N`.
#[derive(Clone, Debug)]
pub struct TensorOver {
    pub quotient: QuotientSpace,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl TensorOver {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project_pure(&self, m: &[Q], n: &[Q]) -> Vec<Q> {
        self.quotient.project(&kron_vec(m, n))
    }

    /// The map `f ⊗ g` descended to the quotients.
    pub fn induce(&self, target: &TensorOver, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        induced_map(&f.kron(g), &self.quotient, &target.quotient)
    }

    pub fn induce_self(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        self.induce(self, f, g)
    }
}

/// Relations `act_m(x_i) ⊗ 1 − 1 ⊗ act_n(x_i)` spanning the kernel of `M ⊗_k N → M ⊗_B N`.
pub fn balanced_quotient(left_ops: &[Matrix], right_ops: &[Matrix], dm: usize, dn: usize) -> QuotientSpace {
    let mut rows = Vec::new();
    for (f, g) in left_ops.iter().zip(right_ops) {
        let rel = f.kron(&Matrix::identity(dn)).sub(&Matrix::identity(dm).kron(g));
        rows.extend(rel.transpose().row_vecs());
    }
    QuotientSpace::new(Subspace::from_vectors(dm * dn, &rows))
}

pub fn tensor_over(m: &ModuleRep, n: &ModuleRep) -> Result<TensorOver> {
    if m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::Invalid("tensor_over needs a right module and a left module".into()));
    }
    if m.algebra() != n.algebra() {
        return Err(Error::Invalid("tensor_over: modules over different algebras".into()));
    }
    Ok(TensorOver {
        quotient: balanced_quotient(m.action(), n.action(), m.dim(), n.dim()),
        left_dim: m.dim(),
        right_dim: n.dim(),
    })
}

/// `Hom_a(M, N)` as a subspace of `dim(N) x dim(M)` matrices, vectorized row-major.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub space: Subspace,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn to_matrix(&self, coords: &[Q]) -> Matrix {
        Matrix::from_data(self.target_dim, self.source_dim, self.space.from_coords(coords))
    }

    pub fn basis_matrix(&self, i: usize) -> Matrix {
        Matrix::from_data(self.target_dim, self.source_dim, self.space.basis().row(i).to_vec())
    }

    pub fn coords(&self, f: &Matrix) -> Option<Vec<Q>> {
        self.space.coords(f.data())
    }

    /// Matrix, in subspace coordinates, of `X ↦ post · X · pre` into `target`.
    pub fn outer(&self, target: &HomSpace, post: &Matrix, pre: &Matrix) -> Result<Matrix> {
        let cols = (0..self.dim())
            .map(|i| {
                let x = post.mul(&self.basis_matrix(i)).mul(pre);
                target.coords(&x).ok_or_else(|| Error::NotWellDefined("outer action leaves the Hom space".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(target.dim(), &cols))
    }
}

pub fn hom_over(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    if m.side() != n.side() {
        return Err(Error::Invalid("hom_over needs modules on the same side".into()));
    }
    if m.algebra() != n.algebra() {
        return Err(Error::Invalid("hom_over: modules over different algebras".into()));
    }
    Ok(hom_from_ops(m.action(), n.action(), m.dim(), n.dim()))
}

/// Matrices `X` with `X f_i = g_i X` for all `i`.
pub fn hom_from_ops(source_ops: &[Matrix], target_ops: &[Matrix], dm: usize, dn: usize) -> HomSpace {
    let mut eqs = Matrix::zeros(0, dm * dn);
    for (f, g) in source_ops.iter().zip(target_ops) {
        let e = Matrix::identity(dn).kron(&f.transpose()).sub(&g.kron(&Matrix::identity(dm)));
        eqs = eqs.vstack(&e);
    }
    HomSpace { space: kernel(&eqs), source_dim: dm, target_dim: dn }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::q;

    fn dual_numbers() -> FinDimAlgebra {
        // basis 1, e with e^2 = 0
        FinDimAlgebra::from_basis_table(
            vec!["1".into(), "e".into()],
            &[vec![Some(0), Some(1)], vec![Some(1), None]],
            0,
        )
        .unwrap()
    }

    fn upper_triangular() -> FinDimAlgebra {
        // e11, e12, e22
        let t = |i: usize, j: usize| -> Option<usize> {
            match (i, j) {
                (0, 0) => Some(0),
                (0, 1) => Some(1),
                (1, 2) => Some(1),
                (2, 2) => Some(2),
                _ => None,
            }
        };
        let table: Vec<Vec<Option<usize>>> = (0..3).map(|i| (0..3).map(|j| t(i, j)).collect()).collect();
        let n = 3;
        let mult = table
            .iter()
            .map(|r| r.iter().map(|e| e.map_or_else(|| zero_vec(n), |k| unit_vec(n, k))).collect())
            .collect();
        FinDimAlgebra::new(
            vec!["e11".into(), "e12".into(), "e22".into()],
            mult,
            vec![q(1), q(0), q(1)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_invalid_tables() {
        // x·x = y, x·y = x, everything else involving x, y zero: (xx)y = 0 but x(xy) = y
        let nonassoc = FinDimAlgebra::from_basis_table(
            vec!["1".into(), "x".into(), "y".into()],
            &[
                vec![Some(0), Some(1), Some(2)],
                vec![Some(1), Some(2), Some(1)],
                vec![Some(2), None, None],
            ],
            0,
        );
        assert!(nonassoc.is_err());
        let bad_unit = FinDimAlgebra::from_basis_table(
            vec!["1".into(), "x".into()],
            &[vec![Some(0), Some(1)], vec![Some(0), None]],
            0,
        );
        assert!(bad_unit.is_err());
    }

    #[test]
    fn opposite_of_commutative_is_itself() {
        let a = dual_numbers();
        assert_eq!(opposite(&a), a);
        let u = upper_triangular();
        assert_eq!(opposite(&opposite(&u)), u);
        let o = opposite(&u);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(o.basis_product(i, j), u.basis_product(j, i));
            }
        }
    }

    #[test]
    fn enveloping_dimensions() {
        assert_eq!(enveloping(&FinDimAlgebra::ground_field()).dim(), 1);
        let e = enveloping(&dual_numbers());
        assert_eq!(e.dim(), 4);
        let e = enveloping(&upper_triangular());
        assert_eq!(e.dim(), 9);
        assert!(FinDimAlgebra::new(e.labels().to_vec(), e.structure_constants(), e.unit().to_vec()).is_ok());
    }

    #[test]
    fn tensor_over_unit_isomorphism() {
        let a = Arc::new(dual_numbers());
        let t = tensor_over(&ModuleRep::right_regular(&a), &ModuleRep::left_regular(&a)).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.quotient.relations().dim(), 2);
        let k = Arc::new(FinDimAlgebra::ground_field());
        let m = ModuleRep::new(k.clone(), Side::Right, 2, vec![Matrix::identity(2)]).unwrap();
        let n = ModuleRep::new(k, Side::Left, 3, vec![Matrix::identity(3)]).unwrap();
        assert_eq!(tensor_over(&m, &n).unwrap().dim(), 6);
    }

    #[test]
    fn hom_over_free_module() {
        let a = Arc::new(upper_triangular());
        let reg = ModuleRep::left_regular(&a);
        let h = hom_over(&reg, &reg).unwrap();
        assert_eq!(h.dim(), 3);
        let k = Arc::new(FinDimAlgebra::ground_field());
        let m = ModuleRep::new(k.clone(), Side::Left, 2, vec![Matrix::identity(2)]).unwrap();
        let n = ModuleRep::new(k, Side::Left, 3, vec![Matrix::identity(3)]).unwrap();
        assert_eq!(hom_over(&m, &n).unwrap().dim(), 6);
    }

    #[test]
    fn module_validation() {
        let a = Arc::new(dual_numbers());
        let bad = ModuleRep::new(a.clone(), Side::Left, 1, vec![Matrix::identity(1), Matrix::identity(1)]);
        assert!(bad.is_err());
        let ok = ModuleRep::new(a, Side::Left, 1, vec![Matrix::identity(1), Matrix::zeros(1, 1)]);
        assert!(ok.is_ok());
    }
}
