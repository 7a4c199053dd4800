//! Dualized resolutions over `U(g)`: `P*_k = Hom_U(P_{d−k}, U)`, the right
//! module `A* = Ext^d_U(A, U)`, the chain isomorphism `δ`, the fundamental
//! class `ω` and cap with `ω`.

use num::{One, Zero};
use serde::Serialize;

use crate::check::CheckReport;
use crate::complexes::resolution::{Certificate, Entry, FreeResolution};
use crate::duality::underived::LinearIso;
use crate::error::{Error, Result};
use crate::homology::{chain_map, ext, tor};
use crate::instances::lie::LieModule;
use crate::instances::pbw::PbwRing;
use crate::products::{cap, Diagonal};
use crate::qlinalg::{fmt_q, solve, Matrix, Q};
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct DualityData {
    pub d: usize,
    /// `x_i` acts on `A*` by `character[i]`.
    pub character: Vec<Q>,
    pub astar: LieModule,
    pub dual: FreeResolution<PbwRing>,
    /// `ω ∈ A* ⊗_U P_d`, generator coordinates.
    pub omega: Vec<Q>,
    /// `dim Ext^n_U(A, U)` for `n = 0 ..= d`, as certified by exactness of the dual complex.
    pub ext_u: Vec<usize>,
}

/// The character with `χ(r) = 0` for every entry `r` of the differential into
/// the top generator; entries must have filtration degree ≤ 1.
fn top_character(ring: &PbwRing, rels: &[&crate::instances::pbw::PbwElem]) -> Result<Vec<Q>> {
    let d = ring.d();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for r in rels {
        if ring.degree(r) > 1 {
            return Err(Error::Invalid("dualization needs differential entries of degree ≤ 1".into()));
        }
        let mut row = vec![Q::zero(); d];
        let mut c = Q::zero();
        for (m, x) in r.terms() {
            match m.iter().position(|&e| e == 1) {
                Some(i) => row[i] = x.clone(),
                None => c = x.clone(),
            }
        }
        rows.push(row);
        rhs.push(-c);
    }
    let sys = Matrix::from_rows(d, &rows);
    solve(&sys, &rhs).ok_or(Error::NotDuality { degrees: vec![] })
}

/// `Hom(P_{d−•}, U)` as a free resolution on the opposite side: the entry
/// `r` at `(i, j)` of `d_{d−k+1}` becomes the entry at `(j, i)` of `d*_k`.
pub fn dualize(p: &FreeResolution<PbwRing>, levels: &[usize]) -> Result<(FreeResolution<PbwRing>, Vec<Q>)> {
    if !p.is_complete() {
        return Err(Error::Invalid("dualization needs a finite resolution".into()));
    }
    let d = p.top();
    let ring = p.ring().clone();
    if p.rank(d) != 1 {
        return Err(Error::Invalid("dualization expects a rank-one top term".into()));
    }
    let side = p.side().flip();
    let ranks: Vec<usize> = (0..=d).map(|k| p.rank(d - k)).collect();
    let diffs: Vec<Vec<Entry<_>>> = (1..=d)
        .map(|k| {
            p.entries(d - k + 1)
                .iter()
                .map(|e| Entry { row: e.col, col: e.row, coef: e.coef.clone() })
                .collect()
        })
        .collect();
    let rels: Vec<_> = p.entries(d).iter().map(|e| &e.coef).collect();
    let chi = top_character(&ring, &rels)?;
    let astar = LieModule::character(ring.lie(), side, &chi)?;
    let weights = (0..=d).map(|k| vec![k; ranks[k]]).collect();
    let name = format!("dual-{}", p.name());
    let dual = FreeResolution::new(&name, ring, side, astar, ranks, diffs, vec![vec![Q::one()]], weights, true)?;
    match nonvanishing(&dual, levels)? {
        v if v.is_empty() => Ok((dual.with_certificate(Certificate::Realization { levels: levels.to_vec() }), chi)),
        v => Err(Error::NotDuality { degrees: v }),
    }
}

/// Degrees `n` of `Ext^n(A, U)` that the realized dual complex fails to kill:
/// homology of `P*` in degree `k` sits in `Ext^{d−k}`; degree −1 means the
/// augmentation onto `A*` is not onto.
fn nonvanishing(dual: &FreeResolution<PbwRing>, levels: &[usize]) -> Result<Vec<usize>> {
    let d = dual.top();
    let mut bad = std::collections::BTreeSet::new();
    for &l in levels {
        let c = dual.realize(l)?;
        for k in -1..=d as i64 {
            if c.homology(k).dim() != 0 {
                bad.insert(if k < 0 { d } else { d - k as usize });
            }
        }
    }
    Ok(bad.into_iter().collect())
}

/// Checks `P` is a duality resolution and extracts `A*`, `δ` and `ω`.
pub fn detect_duality(p: &FreeResolution<PbwRing>, levels: &[usize]) -> Result<DualityData> {
    let (dual, chi) = dualize(p, levels)?;
    let d = p.top();
    let astar = dual.base().clone();
    // ω = δ⁻¹(ε*), with ε* ∈ Hom_{Uᵒᵖ}(P*_0, A*) the dual augmentation
    let eps: Vec<Q> = dual.augmentation().iter().flatten().cloned().collect();
    let delta = delta_matrix(p, &dual, &astar, d);
    let omega = solve(&delta, &eps).ok_or(Error::NotDuality { degrees: vec![d] })?;
    let mut ext_u = vec![0; d + 1];
    ext_u[d] = astar.dim();
    Ok(DualityData { d, character: chi, astar, dual, omega, ext_u })
}

/// `δ_i : M ⊗_U P_i → Hom_{Uᵒᵖ}(P*_{d−i}, M)`, `δ(m ⊗ g_j)(g*_l) = m g*_l(g_j)`,
/// in generator coordinates on both sides.
pub fn delta_matrix(p: &FreeResolution<PbwRing>, dual: &FreeResolution<PbwRing>, m: &LieModule, i: usize) -> Matrix {
    let ring = p.ring();
    let dm = m.dim();
    let d = p.top();
    let r = p.rank(i);
    debug_assert_eq!(dual.rank(d - i), r);
    let mut out = Matrix::zeros(r * dm, r * dm);
    for j in 0..r {
        for l in 0..r {
            let val = if j == l { ring.one() } else { ring.zero() };
            out.set_block(l * dm, j * dm, &ring.act(m, &val));
        }
    }
    out
}

/// `Hom_{Uᵒᵖ}(P*_{k}, M) → Hom_{Uᵒᵖ}(P*_{k+1}, M)`, `φ ↦ φ ∘ d*_{k+1}`.
fn dual_hom_map(dual: &FreeResolution<PbwRing>, m: &LieModule, k: usize) -> Matrix {
    let ring = dual.ring();
    let dm = m.dim();
    let mut out = Matrix::zeros(dual.rank(k + 1) * dm, dual.rank(k) * dm);
    for e in dual.entries(k + 1) {
        out.add_block(e.col * dm, e.row * dm, &ring.act(m, &e.coef));
    }
    out
}

/// `δ` commutes with the differentials in every degree.
pub fn check_delta_chain_map(p: &FreeResolution<PbwRing>, dd: &DualityData, m: &LieModule) -> CheckReport {
    let d = dd.d;
    let mut bad = Vec::new();
    for i in 1..=d {
        let lhs = delta_matrix(p, &dd.dual, m, i - 1).mul(&chain_map(p, m, i));
        let rhs = dual_hom_map(&dd.dual, m, d - i).mul(&delta_matrix(p, &dd.dual, m, i));
        if lhs != rhs {
            bad.push(format!("degree {i}"));
        }
    }
    let mut r = CheckReport::new();
    r.record("delta_chain_map", bad);
    r
}

/// `(A*)* ≅ A`: dualizing twice returns `P` entry by entry over the trivial character.
pub fn check_double_dual(p: &FreeResolution<PbwRing>, dd: &DualityData, levels: &[usize]) -> Result<CheckReport> {
    let (pp, chi) = dualize(&dd.dual, levels)?;
    let mut r = CheckReport::new();
    r.record_bool("double_dual_side", pp.side() == p.side(), "side");
    r.record_bool("double_dual_ranks", pp.ranks() == p.ranks(), "ranks");
    let same = (1..=p.top()).all(|n| {
        let mut a = pp.entries(n).to_vec();
        let mut b = p.entries(n).to_vec();
        a.sort_by_key(|e| (e.row, e.col));
        b.sort_by_key(|e| (e.row, e.col));
        a == b
    });
    r.record_bool("double_dual_differentials", same, "entries");
    let base = p.ring().base_module();
    r.record_bool("double_dual_base", chi.iter().all(Q::is_zero) && pp.base() == &base, "character");
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityRow {
    pub m: usize,
    pub ext_dim: usize,
    pub tor_dim: usize,
    pub rank: usize,
    pub bijective: bool,
}

/// `· ⌢ ω : Ext^m_U(A, M) → Tor_{d−m}(M ⊗ A*, A)` on class bases.
pub fn duality_isomorphism(
    p: &FreeResolution<PbwRing>,
    diag: &Diagonal<crate::instances::pbw::PbwElem>,
    dd: &DualityData,
    m_mod: &LieModule,
    m: usize,
) -> Result<(LinearIso, DualityRow)> {
    if m > dd.d {
        return Err(Error::Invalid(format!("degree {m} above the duality dimension {}", dd.d)));
    }
    let e = ext(p, m_mod, m)?;
    let t = p.ring().tensor_right(m_mod, &dd.astar)?;
    let target = tor(&t.module, p, dd.d - m)?;
    let cols = e
        .homology
        .representatives()
        .iter()
        .map(|phi| {
            let (_, c) = cap(p, diag, m_mod, phi, m, &dd.astar, &dd.omega, dd.d)?;
            target.decompose(&c)
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = LinearIso::new(Matrix::from_cols(target.dim(), &cols));
    let row = DualityRow { m, ext_dim: e.dim(), tor_dim: target.dim(), rank: iso.rank, bijective: iso.bijective };
    Ok((iso, row))
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub d: usize,
    #[serde(rename = "Astar_dim")]
    pub astar_dim: usize,
    pub character: Vec<String>,
    pub omega: Vec<String>,
    pub ext_u: Vec<usize>,
    pub table: Vec<DualityRow>,
}

pub fn duality_report(
    p: &FreeResolution<PbwRing>,
    diag: &Diagonal<crate::instances::pbw::PbwElem>,
    dd: &DualityData,
    m_mod: &LieModule,
) -> Result<DualityReport> {
    let table = (0..=dd.d).map(|m| duality_isomorphism(p, diag, dd, m_mod, m).map(|x| x.1)).collect::<Result<_>>()?;
    Ok(DualityReport {
        d: dd.d,
        astar_dim: dd.astar.dim(),
        character: dd.character.iter().map(fmt_q).collect(),
        omega: dd.omega.iter().map(fmt_q).collect(),
        ext_u: dd.ext_u.clone(),
        table,
    })
}
