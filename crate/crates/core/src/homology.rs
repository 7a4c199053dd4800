//! Ext and Tor over `U` from a free resolution of `A`.
//!
//! `Hom_U(P_n, M) = M^{r_n}` and `N ⊗_U P_n = N^{r_n}` in generator
//! coordinates; coordinate `(i, k)` sits at index `i · dim M + k`.

use serde::Serialize;

use crate::complexes::lift::{lift_chain_map, FreeTarget};
use crate::complexes::resolution::FreeResolution;
use crate::complexes::Homology;
use crate::error::{Error, Result};
use crate::qlinalg::{add_assign_scaled, inverse, zero_vec, Matrix, Q};
use crate::ring::Ring;

/// `δ_n : Hom_U(P_n, M) → Hom_U(P_{n+1}, M)`, `(δφ)(g_j) = Σ_i r_ij φ(g_i)`.
pub fn cochain_map<R: Ring>(p: &FreeResolution<R>, m: &R::Module, n: usize) -> Matrix {
    let ring = p.ring();
    let dm = ring.module_dim(m);
    let mut out = Matrix::zeros(p.rank(n + 1) * dm, p.rank(n) * dm);
    for e in p.entries(n + 1) {
        out.add_block(e.col * dm, e.row * dm, &ring.act(m, &e.coef));
    }
    out
}

/// `∂_n : N ⊗_U P_n → N ⊗_U P_{n−1}`, `n ⊗ g_j ↦ Σ_i n r_ij ⊗ g_i`.
pub fn chain_map<R: Ring>(p: &FreeResolution<R>, nm: &R::Module, n: usize) -> Matrix {
    let ring = p.ring();
    let dn = ring.module_dim(nm);
    let rows = if n == 0 { 0 } else { p.rank(n - 1) * dn };
    let mut out = Matrix::zeros(rows, p.rank(n) * dn);
    for e in p.entries(n) {
        out.add_block(e.row * dn, e.col * dn, &ring.act(nm, &e.coef));
    }
    out
}

/// `φ(x)` for a cochain `φ ∈ M^{r_n}` and `x = Σ c_i g_i ∈ P_n`.
pub fn eval_cochain<R: Ring>(p: &FreeResolution<R>, m: &R::Module, phi: &[Q], x: &[R::Elem]) -> Vec<Q> {
    let ring = p.ring();
    let dm = ring.module_dim(m);
    let mut out = zero_vec(dm);
    for (i, c) in x.iter().enumerate() {
        if !ring.is_zero(c) {
            let v = ring.act(m, c).mul_vec(&phi[i * dm..(i + 1) * dm]);
            add_assign_scaled(&mut out, &Q::from_integer(1.into()), &v);
        }
    }
    out
}

/// `n ⊗ x` for `n ∈ N` and `x = Σ c_i g_i ∈ P_k`, in `N^{r_k}`.
pub fn tensor_chain<R: Ring>(p: &FreeResolution<R>, nm: &R::Module, v: &[Q], x: &[R::Elem]) -> Vec<Q> {
    let ring = p.ring();
    let dn = ring.module_dim(nm);
    let mut out = zero_vec(x.len() * dn);
    for (i, c) in x.iter().enumerate() {
        if !ring.is_zero(c) {
            let w = ring.act(nm, c).mul_vec(v);
            add_assign_scaled(&mut out[i * dn..(i + 1) * dn], &Q::from_integer(1.into()), &w);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub degree: usize,
    pub dim: usize,
    pub resolution: String,
    pub window: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CohomologyClass {
    pub degree: usize,
    #[serde(serialize_with = "crate::qlinalg::ser_qvec")]
    pub representative: Vec<Q>,
    pub resolution: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomologyClass {
    pub degree: usize,
    #[serde(serialize_with = "crate::qlinalg::ser_qvec")]
    pub representative: Vec<Q>,
    pub resolution: String,
}

/// `H^n` or `H_n` at one degree, with its defining maps.
#[derive(Clone, Debug)]
pub struct DerivedGroup {
    pub degree: usize,
    pub resolution: String,
    pub window: Option<usize>,
    pub coefficient_dim: usize,
    pub homology: Homology,
}

impl DerivedGroup {
    pub fn dim(&self) -> usize {
        self.homology.dim()
    }

    pub fn row(&self) -> ReportRow {
        ReportRow { degree: self.degree, dim: self.dim(), resolution: self.resolution.clone(), window: self.window }
    }

    /// Coordinates of a (co)cycle in the stored class basis.
    pub fn decompose(&self, z: &[Q]) -> Result<Vec<Q>> {
        self.homology.class_of(z)
    }

    pub fn is_zero_class(&self, z: &[Q]) -> bool {
        self.homology.is_boundary(z)
    }

    pub fn representative(&self, class: &[Q]) -> Vec<Q> {
        self.homology.representative(class)
    }

    pub fn cohomology_classes(&self) -> Vec<CohomologyClass> {
        self.homology
            .representatives()
            .into_iter()
            .map(|r| CohomologyClass { degree: self.degree, representative: r, resolution: self.resolution.clone() })
            .collect()
    }

    pub fn homology_classes(&self) -> Vec<HomologyClass> {
        self.homology
            .representatives()
            .into_iter()
            .map(|r| HomologyClass { degree: self.degree, representative: r, resolution: self.resolution.clone() })
            .collect()
    }
}

/// `Ext^n_U(A, M)`; `M` must have the same side as the resolution.
pub fn ext<R: Ring>(p: &FreeResolution<R>, m: &R::Module, n: usize) -> Result<DerivedGroup> {
    p.check_window(n)?;
    let ring = p.ring();
    if ring.module_side(m) != p.side() {
        return Err(Error::Invalid("Ext needs a coefficient module on the resolution's side".into()));
    }
    let dm = ring.module_dim(m);
    let d_out = cochain_map(p, m, n);
    let d_in = if n == 0 { Matrix::zeros(p.rank(0) * dm, 0) } else { cochain_map(p, m, n - 1) };
    Ok(DerivedGroup {
        degree: n,
        resolution: p.name().to_string(),
        window: p.window(),
        coefficient_dim: dm,
        homology: Homology::new(&d_out, &d_in, p.rank(n) * dm),
    })
}

/// `Tor_n^U(N, A)`; `N` must have the side opposite to the resolution.
pub fn tor<R: Ring>(nm: &R::Module, p: &FreeResolution<R>, n: usize) -> Result<DerivedGroup> {
    p.check_window(n)?;
    let ring = p.ring();
    if ring.module_side(nm) == p.side() {
        return Err(Error::Invalid("Tor needs a coefficient module on the side opposite the resolution".into()));
    }
    let dn = ring.module_dim(nm);
    let d_out = chain_map(p, nm, n);
    let d_in = chain_map(p, nm, n + 1);
    Ok(DerivedGroup {
        degree: n,
        resolution: p.name().to_string(),
        window: p.window(),
        coefficient_dim: dn,
        homology: Homology::new(&d_out, &d_in, p.rank(n) * dn),
    })
}

/// The comparison `Ext^n` computed with `q` → with `p`, induced by a lift of
/// the identity `P → Q`; `matrix` acts on class coordinates.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub degree: usize,
    pub matrix: Matrix,
    pub inverse: Matrix,
}

pub fn resolution_independence<R: Ring>(
    p: &FreeResolution<R>,
    q: &FreeResolution<R>,
    m: &R::Module,
    n: usize,
) -> Result<Comparison> {
    let ep = ext(p, m, n)?;
    let eq = ext(q, m, n)?;
    let f = lift_chain_map(p, &FreeTarget::new(q), 0, p.augmentation(), n, &Q::from_integer(1.into()))?;
    let dm = p.ring().module_dim(m);
    // pullback φ ↦ φ∘F_n on cochains
    let mut pull = Matrix::zeros(p.rank(n) * dm, q.rank(n) * dm);
    for c in 0..q.rank(n) * dm {
        let mut phi = zero_vec(q.rank(n) * dm);
        phi[c] = Q::from_integer(1.into());
        for j in 0..p.rank(n) {
            let v = eval_cochain(q, m, &phi, &f.maps[n][j]);
            for (k, x) in v.into_iter().enumerate() {
                pull.set(j * dm + k, c, x);
            }
        }
    }
    let matrix = eq.homology.induced(&pull, &ep.homology)?;
    let inv = inverse(&matrix).ok_or(Error::NotInvertible { rank: matrix.rank(), dim: ep.dim().max(eq.dim()) })?;
    Ok(Comparison { degree: n, matrix, inverse: inv })
}

/// Same as [`resolution_independence`] for `Tor_n(N, A)`, pushing `P → Q`.
pub fn tor_comparison<R: Ring>(
    nm: &R::Module,
    p: &FreeResolution<R>,
    q: &FreeResolution<R>,
    n: usize,
) -> Result<Comparison> {
    let tp = tor(nm, p, n)?;
    let tq = tor(nm, q, n)?;
    let f = lift_chain_map(p, &FreeTarget::new(q), 0, p.augmentation(), n, &Q::from_integer(1.into()))?;
    let dn = p.ring().module_dim(nm);
    let mut push = Matrix::zeros(q.rank(n) * dn, p.rank(n) * dn);
    for j in 0..p.rank(n) {
        for k in 0..dn {
            let mut v = zero_vec(dn);
            v[k] = Q::from_integer(1.into());
            push.set_block(0, j * dn + k, &Matrix::from_cols(q.rank(n) * dn, &[tensor_chain(q, nm, &v, &f.maps[n][j])]));
        }
    }
    let matrix = tp.homology.induced(&push, &tq.homology)?;
    let inv = inverse(&matrix).ok_or(Error::NotInvertible { rank: matrix.rank(), dim: tp.dim().max(tq.dim()) })?;
    Ok(Comparison { degree: n, matrix, inverse: inv })
}

/// `Ext^n` dimensions for `n = 0 ..= max`.
pub fn ext_dims<R: Ring>(p: &FreeResolution<R>, m: &R::Module, max: usize) -> Result<Vec<usize>> {
    (0..=max).map(|n| ext(p, m, n).map(|g| g.dim())).collect()
}

pub fn tor_dims<R: Ring>(nm: &R::Module, p: &FreeResolution<R>, max: usize) -> Result<Vec<usize>> {
    (0..=max).map(|n| tor(nm, p, n).map(|g| g.dim())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::galois_map;
    use crate::complexes::bar::bar_resolution;
    use crate::instances::fd::*;
    use crate::ring::FdRing;

    #[test]
    fn group_ext_zero_is_one_dimensional() {
        let d = group_bialgebra(&FiniteGroup::cyclic(3));
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 3).unwrap();
        assert_eq!(ext_dims(&p, &ring.base_module(), 2).unwrap(), vec![1, 0, 0]);
        assert!(matches!(ext(&p, &ring.base_module(), 3), Err(Error::WindowExceeded { requested: 3, window: 2 })));
    }

    #[test]
    fn identity_comparison() {
        let d = enveloping_bialgebroid(dual_numbers()).unwrap();
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 3).unwrap();
        for n in 0..=2 {
            let c = resolution_independence(&p, &p, &ring.base_module(), n).unwrap();
            assert!(c.matrix.is_identity());
        }
    }
}
