//! Finite-dimensional ×_A-bialgebras: group algebras, Sweedler's algebra,
//! enveloping algebras and a non-Hopf monoid algebra.

use std::sync::Arc;

use num::{One, Zero};

use crate::algebra::{enveloping, kron_vec, FinDimAlgebra, ModuleRep, Side};
use crate::bialgebroid::BialgebroidData;
use crate::error::Result;
use crate::qlinalg::{q, unit_vec, zero_vec, Matrix, Q};

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup { labels, table }
    }

    /// Permutations of {0,1,2} in lexicographic order; `(στ)(i) = σ(τ(i))`.
    pub fn s3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
        let labels = perms.iter().map(|p| format!("[{}{}{}]", p[0], p[1], p[2])).collect();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        FiniteGroup { labels, table }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == 0).expect("group element without inverse")
    }

    pub fn algebra(&self) -> FinDimAlgebra {
        let table: Vec<Vec<Option<usize>>> = self.table.iter().map(|r| r.iter().map(|&k| Some(k)).collect()).collect();
        FinDimAlgebra::from_basis_table(self.labels.clone(), &table, 0).expect("group tables are associative")
    }
}

/// `k[M]` for a monoid with basis closed under products, `Δm = m⊗m`, `ε(m) = 1`.
pub fn monoid_bialgebra(u: FinDimAlgebra) -> Result<BialgebroidData> {
    let n = u.dim();
    let u = Arc::new(u);
    let k = Arc::new(FinDimAlgebra::ground_field());
    let eta = Matrix::from_cols(n, &[u.unit().to_vec()]);
    let cols: Vec<Vec<Q>> = (0..n).map(|i| kron_vec(&unit_vec(n, i), &unit_vec(n, i))).collect();
    let delta = Matrix::from_cols(n * n, &cols);
    let eps = vec![Matrix::identity(1); n];
    BialgebroidData::new(u, k, eta, delta, eps)
}

pub fn group_bialgebra(g: &FiniteGroup) -> BialgebroidData {
    monoid_bialgebra(g.algebra()).expect("group algebras are bialgebras")
}

/// The multiplicative monoid {1, 0}; a bialgebra that is not Hopf.
pub fn monoid01() -> BialgebroidData {
    let u = FinDimAlgebra::from_basis_table(
        vec!["1".into(), "0".into()],
        &[vec![Some(0), Some(1)], vec![Some(1), Some(1)]],
        0,
    )
    .expect("monoid table is associative");
    monoid_bialgebra(u).expect("monoid algebras are bialgebras")
}

/// Sweedler's Hopf algebra with basis 1, g, x, gx: g² = 1, x² = 0, xg = −gx,
/// Δg = g⊗g, Δx = x⊗1 + g⊗x.
pub fn sweedler_algebra() -> FinDimAlgebra {
    let n = 4;
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = vec![vec![zero_vec(n); n]; n];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b + d < 2 {
                        let sign = if b * c == 1 { q(-1) } else { q(1) };
                        let mut v = zero_vec(n);
                        v[idx((a + c) % 2, b + d)] = sign;
                        mult[idx(a, b)][idx(c, d)] = v;
                    }
                }
            }
        }
    }
    FinDimAlgebra::new(vec!["1".into(), "g".into(), "x".into(), "gx".into()], mult, unit_vec(n, 0))
        .expect("Sweedler's algebra is associative")
}

pub fn sweedler() -> BialgebroidData {
    let u = Arc::new(sweedler_algebra());
    let n = 4;
    let e = |i| unit_vec(n, i);
    let t = |i: usize, j: usize| kron_vec(&e(i), &e(j));
    let delta_cols = vec![t(0, 0), t(1, 1), crate::qlinalg::vec_add(&t(2, 0), &t(1, 2)), crate::qlinalg::vec_add(&t(3, 1), &t(0, 3))];
    let delta = Matrix::from_cols(n * n, &delta_cols);
    let eps = vec![Matrix::identity(1), Matrix::identity(1), Matrix::zeros(1, 1), Matrix::zeros(1, 1)];
    let eta = Matrix::from_cols(n, &[e(0)]);
    BialgebroidData::new(u, Arc::new(FinDimAlgebra::ground_field()), eta, delta, eps).expect("Sweedler data is valid")
}

/// `U = A^e` over `A` with `η = id`, `Δ(a⊗b) = (a⊗1)⊗_A(1⊗b)`, `ε̂(a⊗b)(c) = acb`.
pub fn enveloping_bialgebroid(a: FinDimAlgebra) -> Result<BialgebroidData> {
    let na = a.dim();
    let ue = Arc::new(enveloping(&a));
    let nu = ue.dim();
    let one = a.unit().to_vec();
    let mut delta_cols = Vec::with_capacity(nu);
    let mut eps = Vec::with_capacity(nu);
    for i in 0..na {
        for j in 0..na {
            let left = kron_vec(&unit_vec(na, i), &one);
            let right = kron_vec(&one, &unit_vec(na, j));
            delta_cols.push(kron_vec(&left, &right));
            eps.push(a.left_mul_matrix(&a.basis(i)).mul(&a.right_mul_matrix(&a.basis(j))));
        }
    }
    let delta = Matrix::from_cols(nu * nu, &delta_cols);
    BialgebroidData::new(ue, Arc::new(a), Matrix::identity(nu), delta, eps)
}

/// `Q[ε]/(ε²)` with basis 1, ε.
pub fn dual_numbers() -> FinDimAlgebra {
    FinDimAlgebra::from_basis_table(vec!["1".into(), "ε".into()], &[vec![Some(0), Some(1)], vec![Some(1), None]], 0)
        .expect("dual numbers are associative")
}

/// `Q × Q` with idempotent basis e1, e2.
pub fn q_times_q() -> FinDimAlgebra {
    let n = 2;
    let mut mult = vec![vec![zero_vec(n); n]; n];
    mult[0][0] = unit_vec(n, 0);
    mult[1][1] = unit_vec(n, 1);
    FinDimAlgebra::new(vec!["e1".into(), "e2".into()], mult, vec![Q::one(), Q::one()]).expect("Q×Q is associative")
}

/// Upper-triangular 2×2 matrices with basis e11, e12, e22.
pub fn upper_triangular() -> FinDimAlgebra {
    let n = 3;
    let mut mult = vec![vec![zero_vec(n); n]; n];
    mult[0][0] = unit_vec(n, 0);
    mult[0][1] = unit_vec(n, 1);
    mult[1][2] = unit_vec(n, 1);
    mult[2][2] = unit_vec(n, 2);
    FinDimAlgebra::new(vec!["e11".into(), "e12".into(), "e22".into()], mult, vec![Q::one(), Q::zero(), Q::one()])
        .expect("upper triangular matrices are associative")
}

/// `A` as a right `A^e`-module, `x·(a⊗b) = b x a`.
pub fn enveloping_right_base(a: &FinDimAlgebra, ue: &Arc<FinDimAlgebra>) -> Result<ModuleRep> {
    let na = a.dim();
    let mut action = Vec::with_capacity(na * na);
    for i in 0..na {
        for j in 0..na {
            action.push(a.left_mul_matrix(&a.basis(j)).mul(&a.right_mul_matrix(&a.basis(i))));
        }
    }
    ModuleRep::new(ue.clone(), Side::Right, na, action)
}

pub fn trivial_module(u: &Arc<FinDimAlgebra>, side: Side, counit: &[Q]) -> ModuleRep {
    let action = counit.iter().map(|c| Matrix::from_data(1, 1, vec![c.clone()])).collect();
    ModuleRep::new(u.clone(), side, 1, action).expect("counit is a character")
}

/// One-dimensional module of a group algebra through a character `χ(g) = ±1`.
pub fn character_module(u: &Arc<FinDimAlgebra>, side: Side, chi: &[i64]) -> ModuleRep {
    let action = chi.iter().map(|&c| Matrix::from_data(1, 1, vec![q(c)])).collect();
    ModuleRep::new(u.clone(), side, 1, action).expect("character is multiplicative")
}

pub fn s3_sign() -> Vec<i64> {
    vec![1, -1, -1, 1, 1, -1]
}

/// The 2-dimensional irreducible representation of S₃ on `{v ∈ Q³ : Σv = 0}`
/// in the basis `e0 − e1, e1 − e2`.
pub fn s3_standard(u: &Arc<FinDimAlgebra>, side: Side) -> ModuleRep {
    let g = FiniteGroup::s3();
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let basis = [[q(1), q(-1), q(0)], [q(0), q(1), q(-1)]];
    let mut action = Vec::new();
    for p in &perms {
        let mut m = Matrix::zeros(2, 2);
        for (j, v) in basis.iter().enumerate() {
            let mut w = [Q::zero(), Q::zero(), Q::zero()];
            for i in 0..3 {
                w[p[i]] = v[i].clone();
            }
            m.set(0, j, w[0].clone());
            m.set(1, j, -w[2].clone());
        }
        action.push(m);
    }
    debug_assert_eq!(g.order(), action.len());
    let left = ModuleRep::new(u.clone(), Side::Left, 2, action).expect("permutation action is a representation");
    match side {
        Side::Left => left,
        Side::Right => group_right_from_left(&g, &left),
    }
}

/// Right module `m·g := g⁻¹m` from a left group representation.
pub fn group_right_from_left(g: &FiniteGroup, m: &ModuleRep) -> ModuleRep {
    let action = (0..g.order()).map(|i| m.action()[g.inverse(i)].clone()).collect();
    ModuleRep::new(m.algebra().clone(), Side::Right, m.dim(), action).expect("inverse action is a right action")
}

/// The 2-dimensional rotation representation of Z/3 over Q.
pub fn z3_rotation(u: &Arc<FinDimAlgebra>) -> ModuleRep {
    let r = Matrix::from_i64(&[&[0, -1], &[1, -1]]);
    let action = vec![Matrix::identity(2), r.clone(), r.mul(&r)];
    ModuleRep::new(u.clone(), Side::Left, 2, action).expect("rotation of order 3")
}
