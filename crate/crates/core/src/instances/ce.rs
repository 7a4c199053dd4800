//! Chevalley–Eilenberg resolution `U(g) ⊗ Λⁿg → k`, its shuffle diagonal, and a
//! weight-truncated normalized bar resolution of `k` over `U(g)`.

use std::collections::HashMap;

use crate::algebra::Side;
use crate::complexes::resolution::{Certificate, Entry, FreeResolution};
use crate::complexes::sign;
use crate::error::Result;
use crate::instances::pbw::{Mono, PbwElem, PbwRing};
use crate::oracle::subsets;
use crate::qlinalg::Q;
use crate::ring::Ring;

/// `x_k ∧ x_S` as `(sign, sorted set)`, or `None` if `k ∈ S`.
fn wedge_front(k: usize, s: &[usize]) -> Option<(Q, Vec<usize>)> {
    if s.contains(&k) {
        return None;
    }
    let pos = s.iter().filter(|&&x| x < k).count();
    let mut t = s.to_vec();
    t.insert(pos, k);
    Some((sign(pos), t))
}

/// Generator `g_S` of `P_n` for `|S| = n`, indexed by the lexicographic order of subsets.
pub fn ce_generators(d: usize, n: usize) -> Vec<Vec<usize>> {
    subsets(d, n)
}

/// `d(g_S) = Σ_i (−1)^{i+1} x_{s_i} g_{S∖s_i} + Σ_{i<j} (−1)^{i+j} g_{[x_{s_i}, x_{s_j}] ∧ S∖{s_i,s_j}}`,
/// positions 1-based. Exactness is checked on the realizations at `check_levels`.
pub fn ce_resolution(ring: &PbwRing, check_levels: &[usize]) -> Result<FreeResolution<PbwRing>> {
    let g = ring.lie();
    let d = g.dim();
    let gens: Vec<Vec<Vec<usize>>> = (0..=d).map(|n| ce_generators(d, n)).collect();
    let mut diffs = Vec::new();
    for n in 1..=d {
        let index: HashMap<&[usize], usize> = gens[n - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut entries: Vec<Entry<PbwElem>> = Vec::new();
        let mut push = |row: usize, col: usize, c: PbwElem| {
            if let Some(e) = entries.iter_mut().find(|e| e.row == row && e.col == col) {
                e.coef = ring.add(&e.coef, &c);
            } else {
                entries.push(Entry { row, col, coef: c });
            }
        };
        for (col, s) in gens[n].iter().enumerate() {
            for i in 0..n {
                let mut rest = s.clone();
                let xi = rest.remove(i);
                push(index[rest.as_slice()], col, ring.scale(&sign(i), &ring.generator(xi)));
            }
            for i in 0..n {
                for j in i + 1..n {
                    let mut rest = s.clone();
                    let xj = rest.remove(j);
                    let xi = rest.remove(i);
                    for (k, c) in g.bracket(xi, xj).iter().enumerate() {
                        if num::Zero::is_zero(c) {
                            continue;
                        }
                        if let Some((sg, set)) = wedge_front(k, &rest) {
                            let coef = c * sg * sign(i + j);
                            push(index[set.as_slice()], col, ring.scale(&coef, &ring.one()));
                        }
                    }
                }
            }
        }
        entries.retain(|e| !ring.is_zero(&e.coef));
        diffs.push(entries);
    }
    let ranks: Vec<usize> = gens.iter().map(Vec::len).collect();
    let weights = (0..=d).map(|n| vec![n; ranks[n]]).collect();
    let res = FreeResolution::new(
        &format!("ce-{}", g.name()),
        ring.clone(),
        Side::Left,
        ring.base_module(),
        ranks,
        diffs,
        vec![vec![Q::from_integer(1.into())]],
        weights,
        true,
    )?;
    res.check_exact(check_levels)?;
    Ok(res.with_certificate(Certificate::Realization { levels: check_levels.to_vec() }))
}

/// One term `c · g_a ⊗ g_b` of the diagonal, `g_a ∈ P_p`, `g_b ∈ P_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShuffleTerm {
    pub coef: Q,
    pub left: usize,
    pub right: usize,
}

/// `Δ(g_S) = Σ_{S = S₁ ⊔ S₂, |S₁| = p} ε(S₁, S₂) g_{S₁} ⊗ g_{S₂}`, where `ε` is the
/// sign of the shuffle putting `S₁` before `S₂`.
pub fn shuffle_diagonal(d: usize, p: usize, q: usize) -> Vec<Vec<ShuffleTerm>> {
    let left = ce_generators(d, p);
    let right = ce_generators(d, q);
    let li: HashMap<&[usize], usize> = left.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let ri: HashMap<&[usize], usize> = right.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    ce_generators(d, p + q)
        .iter()
        .map(|s| {
            subsets(p + q, p)
                .into_iter()
                .map(|pos| {
                    let s1: Vec<usize> = pos.iter().map(|&i| s[i]).collect();
                    let s2: Vec<usize> = (0..p + q).filter(|i| !pos.contains(i)).map(|i| s[i]).collect();
                    // inversions between the chosen positions and the rest
                    let inv: usize = pos.iter().enumerate().map(|(k, &i)| i - k).sum();
                    ShuffleTerm { coef: sign(inv), left: li[s1.as_slice()], right: ri[s2.as_slice()] }
                })
                .collect()
        })
        .collect()
}

/// Normalized bar resolution of `k` over `U(g)` restricted to words of nonconstant
/// monomials `[m₁|⋯|m_n]` of total degree `≤ max_weight`, through degree `depth`.
///
/// The truncation is a subcomplex; for abelian `g` it is a direct summand of
/// the full bar complex for the polynomial grading, so Ext/Tor with graded
/// coefficients concentrated in degree 0 agree in degrees `≤ max_weight`.
pub fn truncated_bar(ring: &PbwRing, max_weight: usize, depth: usize) -> Result<FreeResolution<PbwRing>> {
    let monos: Vec<Mono> = ring.monomials_up_to(max_weight).into_iter().filter(|m| m.iter().any(|&e| e > 0)).collect();
    let deg = |m: &Mono| m.iter().map(|&e| e as usize).sum::<usize>();
    let mut words: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    for n in 1..=depth {
        let mut next = Vec::new();
        for w in &words[n - 1] {
            let used: usize = w.iter().map(|&i| deg(&monos[i])).sum();
            for (i, m) in monos.iter().enumerate() {
                if used + deg(m) <= max_weight {
                    let mut v = w.clone();
                    v.push(i);
                    next.push(v);
                }
            }
        }
        words.push(next);
    }
    let mono_index: HashMap<&Mono, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let weight = |w: &[usize]| w.iter().map(|&i| deg(&monos[i])).sum::<usize>();
    let mut diffs = Vec::new();
    for n in 1..=depth {
        let index: HashMap<&[usize], usize> = words[n - 1].iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let mut acc: HashMap<(usize, usize), PbwElem> = HashMap::new();
        for (col, w) in words[n].iter().enumerate() {
            // m₁ · [m₂|⋯|m_n]
            let m1 = PbwElem::monomial(monos[w[0]].clone(), Q::from_integer(1.into()));
            let row = index[&w[1..]];
            let e = acc.entry((row, col)).or_insert_with(PbwElem::zero);
            e.add_scaled(&Q::from_integer(1.into()), &m1);
            for i in 1..n {
                let a = PbwElem::monomial(monos[w[i - 1]].clone(), Q::from_integer(1.into()));
                let b = PbwElem::monomial(monos[w[i]].clone(), Q::from_integer(1.into()));
                let prod = ring.multiply(&a, &b);
                for (mono, c) in prod.terms() {
                    // products of nonconstant monomials have no constant term
                    let k = mono_index[mono];
                    let mut v: Vec<usize> = w[..i - 1].to_vec();
                    v.push(k);
                    v.extend_from_slice(&w[i + 1..]);
                    let row = index[v.as_slice()];
                    let e = acc.entry((row, col)).or_insert_with(PbwElem::zero);
                    e.add_scaled(&(c * sign(i)), &ring.one());
                }
            }
        }
        let mut entries: Vec<Entry<PbwElem>> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((row, col), coef)| Entry { row, col, coef })
            .collect();
        entries.sort_by_key(|e| (e.col, e.row));
        diffs.push(entries);
    }
    let ranks: Vec<usize> = words.iter().map(Vec::len).collect();
    let weights = words.iter().map(|ws| ws.iter().map(|w| weight(w)).collect()).collect();
    let res = FreeResolution::new(
        &format!("bar-{}-w{}", ring.lie().name(), max_weight),
        ring.clone(),
        Side::Left,
        ring.base_module(),
        ranks,
        diffs,
        vec![vec![Q::from_integer(1.into())]],
        weights,
        false,
    )?;
    let note = "weight-graded direct summand of the normalized bar complex (abelian g)".to_string();
    Ok(res.with_certificate(Certificate::Filtration { levels: (0..=max_weight).collect(), note }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{ext_dims, resolution_independence, tor_dims};
    use crate::instances::lie::{LieAlgebra, LieModule};
    use crate::oracle::{ce_cohomology_dims, ce_homology_dims};

    #[test]
    fn nonabelian_differential() {
        let ring = PbwRing::new(LieAlgebra::nonabelian2());
        let p = ce_resolution(&ring, &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.ranks(), &[1, 2, 1]);
        // d(g_xy) = (x − 1) g_y − y g_x
        let d2 = p.apply(2, &p.generator(2, 0));
        let x = ring.generator(0);
        let y = ring.generator(1);
        assert_eq!(d2[1], ring.add(&x, &ring.scale(&Q::from_integer((-1).into()), &ring.one())));
        assert_eq!(d2[0], ring.scale(&Q::from_integer((-1).into()), &y));
    }

    #[test]
    fn ce_matches_oracle() {
        for g in [LieAlgebra::abelian(1), LieAlgebra::abelian(2), LieAlgebra::nonabelian2(), LieAlgebra::sl2()] {
            let ring = PbwRing::new(g.clone());
            let p = ce_resolution(&ring, &[0, 1, 2]).unwrap();
            let d = g.dim();
            let mods = [LieModule::trivial(&g, Side::Left), LieModule::adjoint(&g)];
            for m in &mods {
                assert_eq!(ext_dims(&p, m, d).unwrap(), ce_cohomology_dims(&g, m, d).unwrap());
                let r = m.dual();
                assert_eq!(tor_dims(&r, &p, d).unwrap(), ce_homology_dims(&g, &r, d).unwrap());
            }
        }
    }

    #[test]
    fn shuffle_signs() {
        // Δ(g_{01}) in bidegree (1,1): g_0⊗g_1 − g_1⊗g_0
        let t = shuffle_diagonal(2, 1, 1);
        assert_eq!(t[0].len(), 2);
        assert_eq!(t[0][0], ShuffleTerm { coef: Q::from_integer(1.into()), left: 0, right: 1 });
        assert_eq!(t[0][1], ShuffleTerm { coef: Q::from_integer((-1).into()), left: 1, right: 0 });
    }

    #[test]
    fn truncated_bar_agrees_with_ce_for_abelian() {
        for d in 1..=2 {
            let g = LieAlgebra::abelian(d);
            let ring = PbwRing::new(g.clone());
            let ce = ce_resolution(&ring, &[0, 1, 2]).unwrap();
            let bar = truncated_bar(&ring, 3, 4).unwrap();
            let k = ring.base_module();
            assert_eq!(ext_dims(&bar, &k, 3).unwrap(), ext_dims(&ce, &k, 3).unwrap());
            for n in 0..=1 {
                let c = resolution_independence(&ce, &bar, &k, n).unwrap();
                assert_eq!(c.matrix.rows(), ext_dims(&ce, &k, n).unwrap()[n]);
            }
        }
    }
}
