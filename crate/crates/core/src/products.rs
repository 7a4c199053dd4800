//! Cup, Yoneda, bullet and cap products on explicit representatives.
//!
//! A diagonal `Δ : P → Tot(P ⊗ P)` is stored as terms `c · (u g_a) ⊗ (v g_b)`
//! per generator and bidegree. Every sign comes from the totalization rule
//! `d = d_h + (−1)^i d_v` and the shifted-map rule `d F = (−1)^m F d`.

use std::collections::HashMap;

use num::Zero;
use serde::Serialize;

use crate::check::CheckReport;
use crate::complexes::lift::{lift_chain_map, FreeTarget};
use crate::complexes::module_complex::tensor_resolution;
use crate::complexes::resolution::FreeResolution;
use crate::complexes::sign;
use crate::error::{Error, Result};
use crate::homology::{eval_cochain, ext, tensor_chain, tor};
use crate::instances::ce::shuffle_diagonal;
use crate::instances::pbw::{PbwElem, PbwRing};
use crate::qlinalg::{add_assign_scaled, fmt_q, zero_vec, Matrix, Q};
use crate::ring::{FdRing, Ring, TensorModule};

#[derive(Clone, Debug)]
pub struct DiagTerm<E> {
    pub coef: Q,
    pub u: E,
    pub a: usize,
    pub v: E,
    pub b: usize,
}

/// `terms[(p, q)][j]`: the `P_p ⊗ P_q` component of `Δ(g_j)`, `g_j ∈ P_{p+q}`.
#[derive(Clone, Debug)]
pub struct Diagonal<E> {
    pub max: usize,
    terms: HashMap<(usize, usize), Vec<Vec<DiagTerm<E>>>>,
}

impl<E: Clone> Diagonal<E> {
    pub fn terms(&self, p: usize, q: usize, j: usize) -> &[DiagTerm<E>] {
        self.terms.get(&(p, q)).and_then(|t| t.get(j)).map_or(&[], |v| v.as_slice())
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max {
            return Err(Error::WindowExceeded { requested: n, window: self.max });
        }
        Ok(())
    }
}

/// Diagonal of a finite-dimensional resolution, lifted into `Tot(P ⊗_A P)`.
pub fn lifted_diagonal(p: &FreeResolution<FdRing>, max: usize) -> Result<Diagonal<Vec<Q>>> {
    let t = tensor_resolution(p, max)?;
    let f = lift_chain_map(p, &t.complex, 0, p.augmentation(), max, &Q::from_integer(1.into()))?;
    let u = p.ring().algebra().clone();
    let nu = u.dim();
    let mut terms: HashMap<(usize, usize), Vec<Vec<DiagTerm<Vec<Q>>>>> = HashMap::new();
    for n in 0..=max {
        for i in 0..=n {
            terms.insert((i, n - i), vec![Vec::new(); p.rank(n)]);
        }
        for (j, x) in f.maps[n].iter().enumerate() {
            for (i, jj, v) in t.split(n, x) {
                let width = p.rank(jj) * nu;
                let slot = &mut terms.get_mut(&(i, jj)).expect("inserted")[j];
                for (idx, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (x, y) = (idx / width, idx % width);
                    slot.push(DiagTerm { coef: c.clone(), u: u.basis(x % nu), a: x / nu, v: u.basis(y % nu), b: y / nu });
                }
            }
        }
    }
    Ok(Diagonal { max, terms })
}

/// The shuffle diagonal of a Chevalley–Eilenberg resolution.
pub fn ce_diagonal(p: &FreeResolution<PbwRing>) -> Diagonal<PbwElem> {
    let ring = p.ring();
    let d = ring.d();
    let mut terms = HashMap::new();
    for n in 0..=d {
        for i in 0..=n {
            let t = shuffle_diagonal(d, i, n - i)
                .into_iter()
                .map(|ts| {
                    ts.into_iter()
                        .map(|s| DiagTerm { coef: s.coef, u: ring.one(), a: s.left, v: ring.one(), b: s.right })
                        .collect()
                })
                .collect();
            terms.insert((i, n - i), t);
        }
    }
    // P_n = 0 above d, so the diagonal is complete in every degree
    Diagonal { max: usize::MAX, terms }
}

/// `Δ d = d_Tot Δ` on all generators, computed inside `P ⊗_k P` over `U(g)`
/// with coefficients in `U ⊗ U`.
pub fn check_ce_diagonal(p: &FreeResolution<PbwRing>, diag: &Diagonal<PbwElem>) -> CheckReport {
    type Pair = crate::instances::pbw::PbwPair;
    let ring = p.ring();
    let d = ring.d();
    let add_into = |acc: &mut HashMap<(usize, usize, usize), Pair>, key: (usize, usize, usize), x: &Pair, c: &Q| {
        let e = acc.entry(key).or_default();
        for (k, v) in x {
            let s = e.entry(k.clone()).or_insert_with(Q::zero);
            *s += c * v;
        }
        e.retain(|_, v| !v.is_zero());
    };
    let pair_of = |a: &PbwElem, b: &PbwElem| -> Pair {
        let mut out = Pair::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.insert((ma.clone(), mb.clone()), ca * cb);
            }
        }
        out
    };
    let mut bad = Vec::new();
    for n in 1..=d {
        for j in 0..p.rank(n) {
            // key (p, a, b) for g_a ⊗ g_b in P_p ⊗ P_{n−1−p}
            let mut lhs: HashMap<(usize, usize, usize), Pair> = HashMap::new();
            for e in p.entries(n).iter().filter(|e| e.col == j) {
                let delta = ring.coproduct(&e.coef);
                for i in 0..n {
                    for t in diag.terms(i, n - 1 - i, e.row) {
                        add_into(&mut lhs, (i, t.a, t.b), &delta, &t.coef);
                    }
                }
            }
            let mut rhs: HashMap<(usize, usize, usize), Pair> = HashMap::new();
            for i in 0..=n {
                for t in diag.terms(i, n - i, j) {
                    for e in p.entries(i).iter().filter(|e| e.col == t.a) {
                        add_into(&mut rhs, (i - 1, e.row, t.b), &pair_of(&e.coef, &ring.one()), &t.coef);
                    }
                    for e in p.entries(n - i).iter().filter(|e| e.col == t.b) {
                        add_into(&mut rhs, (i, t.a, e.row), &pair_of(&ring.one(), &e.coef), &(&t.coef * sign(i)));
                    }
                }
            }
            lhs.retain(|_, v| !v.is_empty());
            rhs.retain(|_, v| !v.is_empty());
            if lhs != rhs {
                bad.push(format!("degree {n}, generator {j}"));
            }
        }
    }
    let mut report = CheckReport::new();
    report.record("ce_diagonal_chain_map", bad);
    report
}

/// `(φ ⌣ ψ)(g) = Σ c (u φ_a) ⊗ (v ψ_b)` over the `(m, n)` component of `Δ(g)`,
/// in `Hom_U(P_{m+n}, M ⊗ N)`.
#[allow(clippy::too_many_arguments)]
pub fn cup<R: Ring>(
    p: &FreeResolution<R>,
    diag: &Diagonal<R::Elem>,
    m_mod: &R::Module,
    phi: &[Q],
    m: usize,
    n_mod: &R::Module,
    psi: &[Q],
    n: usize,
) -> Result<(TensorModule<R::Module>, Vec<Q>)> {
    diag.check_degree(m + n)?;
    let ring = p.ring();
    let t = ring.tensor_left(m_mod, n_mod)?;
    let (dm, dn, dt) = (ring.module_dim(m_mod), ring.module_dim(n_mod), t.dim());
    let mut out = zero_vec(p.rank(m + n) * dt);
    for j in 0..p.rank(m + n) {
        for term in diag.terms(m, n, j) {
            let x = ring.act(m_mod, &term.u).mul_vec(&phi[term.a * dm..(term.a + 1) * dm]);
            let y = ring.act(n_mod, &term.v).mul_vec(&psi[term.b * dn..(term.b + 1) * dn]);
            add_assign_scaled(&mut out[j * dt..(j + 1) * dt], &term.coef, &t.project_pure(&x, &y));
        }
    }
    Ok((t, out))
}

/// Applies a module map blockwise to `M^r`.
pub fn blockwise(f: &Matrix, x: &[Q]) -> Vec<Q> {
    let w = f.cols();
    x.chunks(w).flat_map(|c| f.mul_vec(c)).collect()
}

/// Which identification `A ⊗ A ≅ A` lands a cup product of two `A`-valued classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitSide {
    /// `a ⊗ b ↦ s(a) b`
    Left,
    /// `a ⊗ b ↦ t(b) a`
    Right,
}

/// `φ ⌣ ψ` for `A`-valued cochains, landed in `Hom_U(P_{m+n}, A)`.
pub fn cup_aa<R: Ring>(
    p: &FreeResolution<R>,
    diag: &Diagonal<R::Elem>,
    phi: &[Q],
    m: usize,
    psi: &[Q],
    n: usize,
    side: UnitSide,
) -> Result<Vec<Q>> {
    let ring = p.ring();
    let a = ring.base_module();
    let (t, c) = cup(p, diag, &a, phi, m, &a, psi, n)?;
    let unit = match side {
        UnitSide::Left => ring.left_unit(&a, &t)?,
        UnitSide::Right => ring.right_unit(&a, &t)?,
    };
    Ok(blockwise(&unit, &c))
}

/// Lifts `φ ∈ Hom_U(P_m, A)` to `F : P_{m+•} → P_•` with `d F = (−1)^m F d`.
pub fn lift_cocycle<R: Ring>(p: &FreeResolution<R>, phi: &[Q], m: usize, depth: usize) -> Result<Vec<Vec<Vec<R::Elem>>>> {
    let da = p.ring().module_dim(p.base());
    let values: Vec<Vec<Q>> = phi.chunks(da).map(<[Q]>::to_vec).collect();
    Ok(lift_chain_map(p, &FreeTarget::new(p), m, &values, depth, &sign(m))?.maps)
}

/// `ψ ∘ φ = ψ ∘ F_n` for `φ ∈ Ext^m(A, A)`, `ψ ∈ Ext^n(A, M)`.
pub fn yoneda<R: Ring>(p: &FreeResolution<R>, phi: &[Q], m: usize, m_mod: &R::Module, psi: &[Q], n: usize) -> Result<Vec<Q>> {
    let f = lift_cocycle(p, phi, m, n)?;
    let dm = p.ring().module_dim(m_mod);
    let mut out = zero_vec(p.rank(m + n) * dm);
    for j in 0..p.rank(m + n) {
        let v = eval_cochain(p, m_mod, psi, &f[n][j]);
        out[j * dm..(j + 1) * dm].clone_from_slice(&v);
    }
    Ok(out)
}

/// `φ • z = (id_N ⊗ F_{n−m})(z)` for `φ ∈ Ext^m(A, A)`, `z ∈ N ⊗_U P_n`.
pub fn bullet<R: Ring>(p: &FreeResolution<R>, phi: &[Q], m: usize, n_mod: &R::Module, z: &[Q], n: usize) -> Result<Vec<Q>> {
    if m > n {
        return Err(Error::Invalid(format!("bullet needs m ≤ n, got {m} > {n}")));
    }
    let f = lift_cocycle(p, phi, m, n - m)?;
    let dn = p.ring().module_dim(n_mod);
    let mut out = zero_vec(p.rank(n - m) * dn);
    for j in 0..p.rank(n) {
        let v = tensor_chain(p, n_mod, &z[j * dn..(j + 1) * dn], &f[n - m][j]);
        add_assign_scaled(&mut out, &Q::from_integer(1.into()), &v);
    }
    Ok(out)
}

/// `φ ⌢ z` for `φ ∈ Ext^m(A, M)` and `z ∈ N ⊗_U P_n`: each term
/// `z_j ⊗ (u g_a ⊗ v g_b)` of `z ⊗ Δ` in bidegree `(n−m, m)` goes to
/// `(−1)^{m(n−m)} (v φ_b ⊗ z_j) u ⊗ g_a` in `(M ⊗ N) ⊗_U P_{n−m}`; the sign
/// is the Koszul sign of moving `φ` past the degree `n−m` factor.
#[allow(clippy::too_many_arguments)]
pub fn cap<R: Ring>(
    p: &FreeResolution<R>,
    diag: &Diagonal<R::Elem>,
    m_mod: &R::Module,
    phi: &[Q],
    m: usize,
    n_mod: &R::Module,
    z: &[Q],
    n: usize,
) -> Result<(TensorModule<R::Module>, Vec<Q>)> {
    if m > n {
        return Err(Error::Invalid(format!("cap needs m ≤ n, got {m} > {n}")));
    }
    diag.check_degree(n)?;
    let ring = p.ring();
    let t = ring.tensor_right(m_mod, n_mod)?;
    let (dm, dn, dt) = (ring.module_dim(m_mod), ring.module_dim(n_mod), t.dim());
    let koszul = sign(m * (n - m));
    let mut out = zero_vec(p.rank(n - m) * dt);
    for j in 0..p.rank(n) {
        let zj = &z[j * dn..(j + 1) * dn];
        if zj.iter().all(Q::is_zero) {
            continue;
        }
        for term in diag.terms(n - m, m, j) {
            let x = ring.act(m_mod, &term.v).mul_vec(&phi[term.b * dm..(term.b + 1) * dm]);
            let w = ring.act(&t.module, &term.u).mul_vec(&t.project_pure(&x, zj));
            add_assign_scaled(&mut out[term.a * dt..(term.a + 1) * dt], &(&term.coef * &koszul), &w);
        }
    }
    Ok((t, out))
}

/// `φ ⌢ z` for `φ ∈ Ext^m(A, A)`, landed in `N ⊗_U P_{n−m}` through `A ⊗ N ≅ N`.
pub fn cap_aa<R: Ring>(
    p: &FreeResolution<R>,
    diag: &Diagonal<R::Elem>,
    phi: &[Q],
    m: usize,
    n_mod: &R::Module,
    z: &[Q],
    n: usize,
) -> Result<Vec<Q>> {
    let ring = p.ring();
    let a = ring.base_module();
    let (t, c) = cap(p, diag, &a, phi, m, n_mod, z, n)?;
    let unit = ring.right_module_unit(n_mod, &t)?;
    Ok(blockwise(&unit, &c))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductTable {
    pub op: String,
    pub m: usize,
    pub n: usize,
    /// `table[i][j]`: class coordinates of the product of basis classes `i` and `j`.
    pub table: Vec<Vec<Vec<String>>>,
}

/// Cup products of all basis classes of `Ext^m(A,A) × Ext^n(A,A)`, in class coordinates.
pub fn cup_table<R: Ring>(p: &FreeResolution<R>, diag: &Diagonal<R::Elem>, m: usize, n: usize) -> Result<ProductTable> {
    let a = p.ring().base_module();
    let (em, en, emn) = (ext(p, &a, m)?, ext(p, &a, n)?, ext(p, &a, m + n)?);
    let mut table = Vec::new();
    for x in em.homology.representatives() {
        let mut row = Vec::new();
        for y in en.homology.representatives() {
            let c = cup_aa(p, diag, &x, m, &y, n, UnitSide::Left)?;
            row.push(emn.decompose(&c)?.iter().map(fmt_q).collect());
        }
        table.push(row);
    }
    Ok(ProductTable { op: "cup".into(), m, n, table })
}

/// Caps of all basis classes of `Ext^m(A,A)` with `Tor_n(N,A)`, in class coordinates of `Tor_{n−m}(N,A)`.
pub fn cap_table<R: Ring>(
    p: &FreeResolution<R>,
    diag: &Diagonal<R::Elem>,
    n_mod: &R::Module,
    m: usize,
    n: usize,
) -> Result<ProductTable> {
    let a = p.ring().base_module();
    let (em, tn, tnm) = (ext(p, &a, m)?, tor(n_mod, p, n)?, tor(n_mod, p, n - m)?);
    let mut table = Vec::new();
    for x in em.homology.representatives() {
        let mut row = Vec::new();
        for z in tn.homology.representatives() {
            let c = cap_aa(p, diag, &x, m, n_mod, &z, n)?;
            row.push(tnm.decompose(&c)?.iter().map(fmt_q).collect());
        }
        table.push(row);
    }
    Ok(ProductTable { op: "cap".into(), m, n, table })
}

/// Yoneda composites `ψ ∘ φ` of basis classes `φ ∈ Ext^m(A,A)`, `ψ ∈ Ext^n(A,A)`,
/// indexed like [`cup_table`].
pub fn yoneda_table<R: Ring>(p: &FreeResolution<R>, m: usize, n: usize) -> Result<ProductTable> {
    let a = p.ring().base_module();
    let (em, en, emn) = (ext(p, &a, m)?, ext(p, &a, n)?, ext(p, &a, m + n)?);
    let mut table = Vec::new();
    for x in em.homology.representatives() {
        let mut row = Vec::new();
        for y in en.homology.representatives() {
            row.push(emn.decompose(&yoneda(p, &x, m, &a, &y, n)?)?.iter().map(fmt_q).collect());
        }
        table.push(row);
    }
    Ok(ProductTable { op: "yoneda".into(), m, n, table })
}

/// `φ • z` of basis classes, indexed like [`cap_table`].
pub fn bullet_table<R: Ring>(p: &FreeResolution<R>, n_mod: &R::Module, m: usize, n: usize) -> Result<ProductTable> {
    let a = p.ring().base_module();
    let (em, tn, tnm) = (ext(p, &a, m)?, tor(n_mod, p, n)?, tor(n_mod, p, n - m)?);
    let mut table = Vec::new();
    for x in em.homology.representatives() {
        let mut row = Vec::new();
        for z in tn.homology.representatives() {
            row.push(tnm.decompose(&bullet(p, &x, m, n_mod, &z, n)?)?.iter().map(fmt_q).collect());
        }
        table.push(row);
    }
    Ok(ProductTable { op: "bullet".into(), m, n, table })
}

/// `(−1)^{mn} ψ ⌣ φ`, transposed so that entry `[i][j]` pairs class `i` of degree `m`
/// with class `j` of degree `n`.
pub fn swapped_cup_table<R: Ring>(p: &FreeResolution<R>, diag: &Diagonal<R::Elem>, m: usize, n: usize) -> Result<ProductTable> {
    let a = p.ring().base_module();
    let (em, en, emn) = (ext(p, &a, m)?, ext(p, &a, n)?, ext(p, &a, m + n)?);
    let mut table = Vec::new();
    for x in em.homology.representatives() {
        let mut row = Vec::new();
        for y in en.homology.representatives() {
            let c = cup_aa(p, diag, &y, n, &x, m, UnitSide::Left)?;
            let c = crate::qlinalg::vec_scale(&sign(m * n), &c);
            row.push(emn.decompose(&c)?.iter().map(fmt_q).collect());
        }
        table.push(row);
    }
    Ok(ProductTable { op: "graded_swap".into(), m, n, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::galois_map;
    use crate::complexes::bar::bar_resolution;
    use crate::instances::ce::ce_resolution;
    use crate::instances::fd::{dual_numbers, enveloping_bialgebroid, enveloping_right_base};
    use crate::instances::lie::{LieAlgebra, LieModule};
    use crate::qlinalg::vec_scale;
    use crate::algebra::Side;

    /// Failures of `ψ∘φ = φ⌣ψ = (−1)^{mn} ψ⌣φ` over basis classes, `m + n ≤ max`.
    fn identity_failures<R: Ring>(p: &FreeResolution<R>, diag: &Diagonal<R::Elem>, max: usize) -> Vec<String> {
        let a = p.ring().base_module();
        let mut bad = Vec::new();
        for m in 0..=max {
            for n in 0..=max - m {
                let (em, en, emn) = (ext(p, &a, m).unwrap(), ext(p, &a, n).unwrap(), ext(p, &a, m + n).unwrap());
                for phi in em.homology.representatives() {
                    for psi in en.homology.representatives() {
                        let y = emn.decompose(&yoneda(p, &phi, m, &a, &psi, n).unwrap()).unwrap();
                        let c = emn.decompose(&cup_aa(p, diag, &phi, m, &psi, n, UnitSide::Left).unwrap()).unwrap();
                        let r = cup_aa(p, diag, &psi, n, &phi, m, UnitSide::Left).unwrap();
                        let c2 = emn.decompose(&vec_scale(&sign(m * n), &r)).unwrap();
                        if y != c || c != c2 {
                            bad.push(format!("m={m} n={n}: yoneda {y:?} cup {c:?} swapped {c2:?}"));
                        }
                    }
                }
            }
        }
        bad
    }

    #[test]
    fn dual_numbers_yoneda_equals_cup() {
        let d = enveloping_bialgebroid(dual_numbers()).unwrap();
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 4).unwrap();
        let diag = lifted_diagonal(&p, 3).unwrap();
        let bad = identity_failures(&p, &diag, 3);
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn abelian_yoneda_equals_cup() {
        let ring = PbwRing::new(LieAlgebra::abelian(2));
        let p = ce_resolution(&ring, &[0, 1, 2]).unwrap();
        let diag = ce_diagonal(&p);
        let bad = identity_failures(&p, &diag, 2);
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn shuffle_diagonal_is_a_chain_map() {
        for g in [LieAlgebra::abelian(2), LieAlgebra::nonabelian2(), LieAlgebra::sl2()] {
            let ring = PbwRing::new(g);
            let p = ce_resolution(&ring, &[0, 1]).unwrap();
            let r = check_ce_diagonal(&p, &ce_diagonal(&p));
            assert!(r.all_passed(), "{} {:?}", ring.lie().name(), r.failures());
        }
    }

    #[test]
    fn cap_agrees_with_bullet() {
        for g in [LieAlgebra::abelian(2), LieAlgebra::nonabelian2()] {
            let ring = PbwRing::new(g.clone());
            let p = ce_resolution(&ring, &[0, 1, 2]).unwrap();
            let diag = ce_diagonal(&p);
            let a = ring.base_module();
            let d = g.dim();
            for nm in [LieModule::trivial(&g, Side::Right), LieModule::adjoint(&g).dual()] {
                for n in 0..=d {
                    let tn = tor(&nm, &p, n).unwrap();
                    for m in 0..=n {
                        let em = ext(&p, &a, m).unwrap();
                        let tnm = tor(&nm, &p, n - m).unwrap();
                        for phi in em.homology.representatives() {
                            for z in tn.homology.representatives() {
                                let b = tnm.decompose(&bullet(&p, &phi, m, &nm, &z, n).unwrap()).unwrap();
                                let c = tnm.decompose(&cap_aa(&p, &diag, &phi, m, &nm, &z, n).unwrap()).unwrap();
                                assert_eq!(b, c, "{} m={m} n={n}", g.name());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_numbers_cap_agrees_with_bullet() {
        let a = dual_numbers();
        let d = enveloping_bialgebroid(a.clone()).unwrap();
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 3).unwrap();
        let diag = lifted_diagonal(&p, 2).unwrap();
        let nm = enveloping_right_base(&a, ring.algebra()).unwrap();
        let base = ring.base_module();
        for n in 0..=2 {
            let tn = tor(&nm, &p, n).unwrap();
            for m in 0..=n {
                let (em, tnm) = (ext(&p, &base, m).unwrap(), tor(&nm, &p, n - m).unwrap());
                for phi in em.homology.representatives() {
                    for z in tn.homology.representatives() {
                        let b = tnm.decompose(&bullet(&p, &phi, m, &nm, &z, n).unwrap()).unwrap();
                        let c = tnm.decompose(&cap_aa(&p, &diag, &phi, m, &nm, &z, n).unwrap()).unwrap();
                        assert_eq!(b, c, "m={m} n={n}");
                    }
                }
            }
        }
    }
}
