//! Dual bases for a finitely generated projective `U`-module `A`, the
//! element `ω₀ = Σ eⁱ ⊗ eᵢ ∈ A* ⊗_U A`, and the maps built from them.

use serde::Serialize;

use crate::algebra::{hom_from_ops, tensor_over, HomSpace, ModuleRep, Side, TensorOver};
use crate::error::{Error, Result};
use crate::qlinalg::{add_assign_scaled, induced_map, inverse, solve, zero_vec, Matrix, QuotientSpace, Subspace, Q};
use crate::ring::FdRing;

#[derive(Clone, Debug)]
pub struct DualBases {
    /// `eᵢ ∈ A`.
    pub generators: Vec<Vec<Q>>,
    /// `eⁱ : A → U` as `dim U × dim A` matrices.
    pub duals: Vec<Matrix>,
    /// `A* = Hom_U(A, U)`, as matrices.
    pub hom: HomSpace,
    /// `A*` as a right `U`-module, `(α·u)(a) = α(a) u`, in `hom` coordinates.
    pub astar: ModuleRep,
    /// `A* ⊗_U A`.
    pub tensor: TensorOver,
    pub omega0: Vec<Q>,
}

impl DualBases {
    /// `eⁱ` in `A*` coordinates.
    pub fn dual_coords(&self, i: usize) -> Vec<Q> {
        self.hom.coords(&self.duals[i]).expect("dual elements are U-linear")
    }
}

/// Greedy generators of `A` over `U` among the basis vectors of `A`.
pub fn greedy_generators(ring: &FdRing, a: &ModuleRep) -> Vec<Vec<Q>> {
    let u = ring.algebra();
    let mut span = Subspace::zero(a.dim());
    let mut gens = Vec::new();
    for i in 0..a.dim() {
        if span.dim() == a.dim() {
            break;
        }
        let e = crate::qlinalg::unit_vec(a.dim(), i);
        if span.contains(&e) {
            continue;
        }
        let orbit: Vec<Vec<Q>> = (0..u.dim()).map(|k| a.action()[k].mul_vec(&e)).collect();
        span = span.sum(&Subspace::from_vectors(a.dim(), &orbit));
        gens.push(e);
    }
    gens
}

/// Dual bases for the given generators: a `U`-linear splitting of
/// `π : Uⁿ → A`, `(u_i) ↦ Σ u_i e_i`, found by an exact solve.
pub fn dual_bases_with(ring: &FdRing, a: &ModuleRep, generators: Vec<Vec<Q>>) -> Result<DualBases> {
    if a.side() != Side::Left {
        return Err(Error::Invalid("dual bases need a left module".into()));
    }
    let u = ring.algebra();
    let (nu, na, n) = (u.dim(), a.dim(), generators.len());
    let left: Vec<Matrix> = (0..nu).map(|k| u.left_mul_matrix(&u.basis(k))).collect();
    let free: Vec<Matrix> = left.iter().map(|l| Matrix::identity(n).kron(l)).collect();
    // π column (i, k) = b_k e_i
    let mut pi = Matrix::zeros(na, n * nu);
    for (i, e) in generators.iter().enumerate() {
        for k in 0..nu {
            for (r, x) in a.action()[k].mul_vec(e).into_iter().enumerate() {
                pi.set(r, i * nu + k, x);
            }
        }
    }
    let splittings = hom_from_ops(a.action(), &free, na, n * nu);
    let cols: Vec<Vec<Q>> = (0..splittings.dim()).map(|k| pi.mul(&splittings.basis_matrix(k)).data().to_vec()).collect();
    let system = Matrix::from_cols(na * na, &cols);
    let c = solve(&system, Matrix::identity(na).data())
        .ok_or_else(|| Error::NotProjective("π : Uⁿ → A has no U-linear splitting".into()))?;
    let iota = splittings.to_matrix(&c);
    let duals: Vec<Matrix> = (0..n).map(|i| iota.block(i * nu, 0, nu, na)).collect();

    let hom = hom_from_ops(a.action(), &left, na, nu);
    let right: Vec<Matrix> = (0..nu)
        .map(|k| hom.outer(&hom, &u.right_mul_matrix(&u.basis(k)), &Matrix::identity(na)))
        .collect::<Result<_>>()?;
    let astar = ModuleRep::new(u.clone(), Side::Right, hom.dim(), right)?;
    let tensor = tensor_over(&astar, a)?;
    let mut db = DualBases { generators, duals, hom, astar, tensor, omega0: Vec::new() };
    let mut omega0 = zero_vec(db.tensor.dim());
    for i in 0..n {
        add_assign_scaled(&mut omega0, &Q::from_integer(1.into()), &db.tensor.project_pure(&db.dual_coords(i), &db.generators[i]));
    }
    db.omega0 = omega0;
    Ok(db)
}

pub fn dual_bases(ring: &FdRing, a: &ModuleRep) -> Result<DualBases> {
    dual_bases_with(ring, a, greedy_generators(ring, a))
}

/// `Σᵢ eⁱ(a) eᵢ = a` on a basis of `A`, and `Σᵢ eⁱ α(eᵢ) = α` on a basis of `A*`.
pub fn check_dual_bases(ring: &FdRing, a: &ModuleRep, db: &DualBases) -> crate::check::CheckReport {
    let u = ring.algebra();
    let na = a.dim();
    let mut bad_a = Vec::new();
    for j in 0..na {
        let e = crate::qlinalg::unit_vec(na, j);
        let mut s = zero_vec(na);
        for (d, g) in db.duals.iter().zip(&db.generators) {
            add_assign_scaled(&mut s, &Q::from_integer(1.into()), &a.act(&d.mul_vec(&e)).mul_vec(g));
        }
        if s != e {
            bad_a.push(format!("a{j}"));
        }
    }
    let mut bad_star = Vec::new();
    for k in 0..db.hom.dim() {
        let alpha = db.hom.basis_matrix(k);
        let mut s = Matrix::zeros(u.dim(), na);
        for (d, g) in db.duals.iter().zip(&db.generators) {
            // (eⁱ · α(eᵢ))(x) = eⁱ(x) α(eᵢ)
            s.add_scaled(&Q::from_integer(1.into()), &u.right_mul_matrix(&alpha.mul_vec(g)).mul(d));
        }
        if s != alpha {
            bad_star.push(format!("alpha{k}"));
        }
    }
    let mut r = crate::check::CheckReport::new();
    r.record("dual_basis_expansion", bad_a);
    r.record("dual_basis_expansion_star", bad_star);
    r
}

/// A linear map between finite-dimensional spaces with its inverse when bijective.
#[derive(Clone, Debug, Serialize)]
pub struct LinearIso {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub bijective: bool,
    #[serde(skip)]
    pub matrix: Matrix,
    #[serde(skip)]
    pub inverse: Option<Matrix>,
}

impl LinearIso {
    pub fn new(matrix: Matrix) -> Self {
        let (t, s) = (matrix.rows(), matrix.cols());
        let rank = matrix.rank();
        let inv = if s == t { inverse(&matrix) } else { None };
        LinearIso { source_dim: s, target_dim: t, rank, bijective: inv.is_some(), matrix, inverse: inv }
    }
}

/// `δ : M ⊗_U A → Hom_{Uᵒᵖ}(A*, M)`, `δ(m ⊗ a)(α) = m α(a)`, for a right
/// module `M`. The inverse `φ ↦ Σᵢ φ(eⁱ) ⊗ eᵢ` is built separately and both
/// composites are checked.
pub fn delta_underived(m: &ModuleRep, a: &ModuleRep, db: &DualBases) -> Result<(LinearIso, CheckedInverse)> {
    if m.side() != Side::Right {
        return Err(Error::Invalid("δ needs a right module".into()));
    }
    let (dm, na, ns) = (m.dim(), a.dim(), db.hom.dim());
    let src = tensor_over(m, a)?;
    let tgt = hom_from_ops(db.astar.action(), m.action(), ns, dm);
    let mut f = Matrix::zeros(tgt.dim(), dm * na);
    for p in 0..dm {
        for q in 0..na {
            let (mv, av) = (crate::qlinalg::unit_vec(dm, p), crate::qlinalg::unit_vec(na, q));
            let mut x = Matrix::zeros(dm, ns);
            for k in 0..ns {
                let val = db.hom.basis_matrix(k).mul_vec(&av);
                for (r, y) in m.act(&val).mul_vec(&mv).into_iter().enumerate() {
                    x.set(r, k, y);
                }
            }
            let c = tgt.coords(&x).ok_or_else(|| Error::NotWellDefined("δ(m⊗a) is not Uᵒᵖ-linear".into()))?;
            for (r, y) in c.into_iter().enumerate() {
                f.set(r, p * na + q, y);
            }
        }
    }
    let delta = induced_map(&f, &src.quotient, &QuotientSpace::trivial(tgt.dim()))?;
    let mut back = Matrix::zeros(src.dim(), tgt.dim());
    for k in 0..tgt.dim() {
        let phi = tgt.basis_matrix(k);
        let mut v = zero_vec(src.dim());
        for i in 0..db.duals.len() {
            add_assign_scaled(&mut v, &Q::from_integer(1.into()), &src.project_pure(&phi.mul_vec(&db.dual_coords(i)), &db.generators[i]));
        }
        for (r, y) in v.into_iter().enumerate() {
            back.set(r, k, y);
        }
    }
    let checked = CheckedInverse {
        left: back.mul(&delta).is_identity(),
        right: delta.mul(&back).is_identity(),
        matrix: back,
    };
    Ok((LinearIso::new(delta), checked))
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckedInverse {
    #[serde(skip)]
    pub matrix: Matrix,
    /// `δ⁻¹ ∘ δ = id`
    pub left: bool,
    /// `δ ∘ δ⁻¹ = id`
    pub right: bool,
}

/// `H⁰(M) = Hom_U(A, M) → A* ⊗_U M`, `φ ↦ Σᵢ eⁱ ⊗ φ(eᵢ)`: cap with `ω₀` read
/// through `(M ⊗ A*) ⊗_U A ≅ A* ⊗_U (A ⊗ M) ≅ A* ⊗_U M`.
pub fn cap_omega_underived(m: &ModuleRep, a: &ModuleRep, db: &DualBases) -> Result<LinearIso> {
    if m.side() != Side::Left {
        return Err(Error::Invalid("cap with ω₀ needs a left module".into()));
    }
    let src = hom_from_ops(a.action(), m.action(), a.dim(), m.dim());
    let tgt = tensor_over(&db.astar, m)?;
    let cols: Vec<Vec<Q>> = (0..src.dim())
        .map(|k| {
            let phi = src.basis_matrix(k);
            let mut v = zero_vec(tgt.dim());
            for (i, g) in db.generators.iter().enumerate() {
                add_assign_scaled(&mut v, &Q::from_integer(1.into()), &tgt.project_pure(&db.dual_coords(i), &phi.mul_vec(g)));
            }
            v
        })
        .collect();
    Ok(LinearIso::new(Matrix::from_cols(tgt.dim(), &cols)))
}

/// `ω₀` computed from two generating sets, compared in `A* ⊗_U A`.
pub fn omega0_independent(ring: &FdRing, a: &ModuleRep, first: Vec<Vec<Q>>, second: Vec<Vec<Q>>) -> Result<bool> {
    let x = dual_bases_with(ring, a, first)?;
    let y = dual_bases_with(ring, a, second)?;
    Ok(x.omega0 == y.omega0)
}
