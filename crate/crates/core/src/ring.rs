//! Coefficient rings for free resolutions.
//!
//! A resolution over `U` stores its differentials as matrices with entries in
//! `U`; everything downstream only needs the operations below. Finite
//! dimensional `U` and `U(g)` both implement them. `U(g)` is infinite
//! dimensional, so k-linear realizations are taken on filtration pieces
//! `F_level` whose bases are nested prefixes of one another.

use std::fmt::Debug;
use std::sync::Arc;

use crate::algebra::{FinDimAlgebra, ModuleRep, Side};
use crate::bialgebroid::{module_tensor_left, module_tensor_right, HopfStructure};
use crate::error::{Error, Result};
use crate::qlinalg::{fmt_q, induced_map, Matrix, QuotientSpace, Q};

/// A module structure on a balanced tensor product, with its quotient data.
#[derive(Clone, Debug)]
pub struct TensorModule<M> {
    pub module: M,
    pub quotient: QuotientSpace,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl<M> TensorModule<M> {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project_pure(&self, m: &[Q], n: &[Q]) -> Vec<Q> {
        self.quotient.project(&crate::algebra::kron_vec(m, n))
    }
}

pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;
    type Module: Clone + Debug;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Q, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Filtration degree; always 0 for finite-dimensional rings.
    fn degree(&self, a: &Self::Elem) -> usize;
    fn filtration_dim(&self, level: usize) -> usize;
    /// The `k`-th basis element of `F_level`; independent of `level` once it exists.
    fn basis_elem(&self, k: usize) -> Self::Elem;
    /// Coordinates in the basis of `F_level`, `None` when `a ∉ F_level`.
    fn coords(&self, a: &Self::Elem, level: usize) -> Option<Vec<Q>>;
    fn from_coords(&self, c: &[Q]) -> Self::Elem {
        let mut out = self.zero();
        for (k, x) in c.iter().enumerate() {
            if !num::Zero::is_zero(x) {
                out = self.add(&out, &self.scale(x, &self.basis_elem(k)));
            }
        }
        out
    }
    fn elem_to_string(&self, a: &Self::Elem) -> String;

    fn module_dim(&self, m: &Self::Module) -> usize;
    fn module_side(&self, m: &Self::Module) -> Side;
    /// Matrix of the action of `a`; for right modules `m·a = act(a) m`.
    fn act(&self, m: &Self::Module, a: &Self::Elem) -> Matrix;
    /// The base algebra `A` as a left module.
    fn base_module(&self) -> Self::Module;
    /// `M ⊗ N` for left modules, action through `Δ`.
    fn tensor_left(&self, m: &Self::Module, n: &Self::Module) -> Result<TensorModule<Self::Module>>;
    /// `M ⊗ P` for `M` left and `P` right, action through the translation map.
    fn tensor_right(&self, m: &Self::Module, p: &Self::Module) -> Result<TensorModule<Self::Module>>;
    /// The unit isomorphism `A ⊗ N → N` for left `N` (on quotient coordinates).
    fn left_unit(&self, n: &Self::Module, t: &TensorModule<Self::Module>) -> Result<Matrix>;
    /// The unit isomorphism `M ⊗ A → M` for left `M`, `m ⊗ a ↦ t(a) m`.
    fn right_unit(&self, m: &Self::Module, t: &TensorModule<Self::Module>) -> Result<Matrix>;
    /// The unit isomorphism `A ⊗ P → P` for right `P`.
    fn right_module_unit(&self, p: &Self::Module, t: &TensorModule<Self::Module>) -> Result<Matrix>;
}

/// Matrix of `x ↦ x·r` from `F_level` into `F_{level + deg r}`.
pub fn right_mul_matrix<R: Ring>(ring: &R, r: &R::Elem, level: usize) -> Matrix {
    let out_level = level + ring.degree(r);
    let rows = ring.filtration_dim(out_level);
    let cols: Vec<Vec<Q>> = (0..ring.filtration_dim(level))
        .map(|k| ring.coords(&ring.mul(&ring.basis_elem(k), r), out_level).expect("product degree is bounded"))
        .collect();
    if cols.is_empty() {
        return Matrix::zeros(rows, 0);
    }
    Matrix::from_cols(rows, &cols)
}

/// Matrix of `x ↦ r·x` from `F_level` into `F_{level + deg r}`.
pub fn left_mul_matrix<R: Ring>(ring: &R, r: &R::Elem, level: usize) -> Matrix {
    let out_level = level + ring.degree(r);
    let rows = ring.filtration_dim(out_level);
    let cols: Vec<Vec<Q>> = (0..ring.filtration_dim(level))
        .map(|k| ring.coords(&ring.mul(r, &ring.basis_elem(k)), out_level).expect("product degree is bounded"))
        .collect();
    if cols.is_empty() {
        return Matrix::zeros(rows, 0);
    }
    Matrix::from_cols(rows, &cols)
}

/// A finite-dimensional algebra, optionally carrying a ×_A-Hopf structure.
#[derive(Clone, Debug)]
pub struct FdRing {
    algebra: Arc<FinDimAlgebra>,
    hopf: Option<Arc<HopfStructure>>,
    base: ModuleRep,
}

impl FdRing {
    pub fn from_hopf(h: HopfStructure) -> Self {
        let algebra = h.data().u().clone();
        let base = h.data().base_module().clone();
        FdRing { algebra, hopf: Some(Arc::new(h)), base }
    }

    /// A plain algebra with a chosen left module playing the role of `A`.
    pub fn plain(algebra: Arc<FinDimAlgebra>, base: ModuleRep) -> Self {
        FdRing { algebra, hopf: None, base }
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn hopf(&self) -> Option<&Arc<HopfStructure>> {
        self.hopf.as_ref()
    }

    fn need_hopf(&self) -> Result<&Arc<HopfStructure>> {
        self.hopf.as_ref().ok_or_else(|| Error::Invalid("operation needs a ×_A-Hopf structure".into()))
    }
}

impl Ring for FdRing {
    type Elem = Vec<Q>;
    type Module = ModuleRep;

    fn name(&self) -> String {
        format!("fd{}", self.algebra.dim())
    }

    fn zero(&self) -> Vec<Q> {
        crate::qlinalg::zero_vec(self.algebra.dim())
    }

    fn one(&self) -> Vec<Q> {
        self.algebra.unit().to_vec()
    }

    fn add(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        crate::qlinalg::vec_add(a, b)
    }

    fn scale(&self, c: &Q, a: &Vec<Q>) -> Vec<Q> {
        crate::qlinalg::vec_scale(c, a)
    }

    fn mul(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        self.algebra.mul(a, b)
    }

    fn is_zero(&self, a: &Vec<Q>) -> bool {
        crate::qlinalg::is_zero_vec(a)
    }

    fn degree(&self, _a: &Vec<Q>) -> usize {
        0
    }

    fn filtration_dim(&self, _level: usize) -> usize {
        self.algebra.dim()
    }

    fn basis_elem(&self, k: usize) -> Vec<Q> {
        self.algebra.basis(k)
    }

    fn coords(&self, a: &Vec<Q>, _level: usize) -> Option<Vec<Q>> {
        Some(a.clone())
    }

    fn from_coords(&self, c: &[Q]) -> Vec<Q> {
        c.to_vec()
    }

    fn elem_to_string(&self, a: &Vec<Q>) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, x)| !num::Zero::is_zero(*x))
            .map(|(i, x)| format!("{}*{}", fmt_q(x), self.algebra.labels()[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    fn module_dim(&self, m: &ModuleRep) -> usize {
        m.dim()
    }

    fn module_side(&self, m: &ModuleRep) -> Side {
        m.side()
    }

    fn act(&self, m: &ModuleRep, a: &Vec<Q>) -> Matrix {
        m.act(a)
    }

    fn base_module(&self) -> ModuleRep {
        self.base.clone()
    }

    fn tensor_left(&self, m: &ModuleRep, n: &ModuleRep) -> Result<TensorModule<ModuleRep>> {
        let t = module_tensor_left(self.need_hopf()?.data(), m, n)?;
        Ok(TensorModule {
            module: t.module,
            quotient: t.space.quotient,
            left_dim: t.space.left_dim,
            right_dim: t.space.right_dim,
        })
    }

    fn tensor_right(&self, m: &ModuleRep, p: &ModuleRep) -> Result<TensorModule<ModuleRep>> {
        let t = module_tensor_right(self.need_hopf()?, m, p)?;
        Ok(TensorModule {
            module: t.module,
            quotient: t.space.quotient,
            left_dim: t.space.left_dim,
            right_dim: t.space.right_dim,
        })
    }

    fn left_unit(&self, n: &ModuleRep, t: &TensorModule<ModuleRep>) -> Result<Matrix> {
        // a ⊗ x ↦ s(a) x
        let d = self.need_hopf()?.data();
        let na = d.a().dim();
        let nd = n.dim();
        let mut f = Matrix::zeros(nd, na * nd);
        for i in 0..na {
            let s = n.act(&d.source(&d.a().basis(i)));
            f.set_block(0, i * nd, &s);
        }
        induced_map(&f, &t.quotient, &QuotientSpace::trivial(nd))
    }

    fn right_unit(&self, m: &ModuleRep, t: &TensorModule<ModuleRep>) -> Result<Matrix> {
        // x ⊗ a ↦ t(a) x
        let d = self.need_hopf()?.data();
        let na = d.a().dim();
        let nd = m.dim();
        let mut f = Matrix::zeros(nd, nd * na);
        for i in 0..na {
            let tg = m.act(&d.target(&d.a().basis(i)));
            for r in 0..nd {
                for c in 0..nd {
                    f.set(r, c * na + i, tg.get(r, c).clone());
                }
            }
        }
        induced_map(&f, &t.quotient, &QuotientSpace::trivial(nd))
    }

    fn right_module_unit(&self, p: &ModuleRep, t: &TensorModule<ModuleRep>) -> Result<Matrix> {
        // a ⊗ x ↦ x·t(a)
        let d = self.need_hopf()?.data();
        let na = d.a().dim();
        let nd = p.dim();
        let mut f = Matrix::zeros(nd, na * nd);
        for i in 0..na {
            let s = p.act(&d.target(&d.a().basis(i)));
            f.set_block(0, i * nd, &s);
        }
        induced_map(&f, &t.quotient, &QuotientSpace::trivial(nd))
    }
}
