//! Brute-force complexes used as independent cross-checks.
//!
//! Nothing here goes through bialgebroids, resolutions or PBW bases: the
//! Hochschild complexes are assembled from the multiplication tensor with
//! Kronecker products and the Chevalley–Eilenberg complexes from the bracket.

use serde::Serialize;

use crate::algebra::{FinDimAlgebra, Side};
use crate::complexes::sign;
use crate::error::{Error, Result};
use crate::instances::lie::{LieAlgebra, LieModule};
use crate::qlinalg::{Matrix, Q};

fn mu(a: &FinDimAlgebra) -> Matrix {
    let d = a.dim();
    let mut m = Matrix::zeros(d, d * d);
    for i in 0..d {
        for j in 0..d {
            for (k, x) in a.basis_product(i, j).iter().enumerate() {
                m.set(k, i * d + j, x.clone());
            }
        }
    }
    m
}

/// `id_{A^{⊗i}} ⊗ μ ⊗ id_{A^{⊗j}}`.
fn mu_at(m: &Matrix, d: usize, i: usize, j: usize) -> Matrix {
    Matrix::identity(d.pow(i as u32)).kron(m).kron(&Matrix::identity(d.pow(j as u32)))
}

/// `δ : Hom(A^{⊗n}, A) → Hom(A^{⊗(n+1)}, A)`, cochains flattened row-major.
pub fn hochschild_coboundary(a: &FinDimAlgebra, n: usize) -> Matrix {
    let d = a.dim();
    let m = mu(a);
    let (src, tgt) = (d.pow(n as u32), d.pow(n as u32 + 1));
    let inner: Vec<Matrix> = (1..=n).map(|i| mu_at(&m, d, i - 1, n - i)).collect();
    let mut out = Matrix::zeros(d * tgt, d * src);
    for k in 0..d {
        for t in 0..src {
            let mut f = Matrix::zeros(d, src);
            f.set(k, t, Q::from_integer(1.into()));
            let mut g = m.mul(&Matrix::identity(d).kron(&f));
            for (i, mi) in inner.iter().enumerate() {
                g.add_scaled(&sign(i + 1), &f.mul(mi));
            }
            g.add_scaled(&sign(n + 1), &m.mul(&f.kron(&Matrix::identity(d))));
            let col = k * src + t;
            for (r, x) in g.data().iter().enumerate() {
                if !num::Zero::is_zero(x) {
                    out.set(r, col, x.clone());
                }
            }
        }
    }
    out
}

/// `b : A^{⊗(n+1)} → A^{⊗n}` on Hochschild chains `a_0 ⊗ … ⊗ a_n`.
pub fn hochschild_boundary(a: &FinDimAlgebra, n: usize) -> Matrix {
    let d = a.dim();
    let m = mu(a);
    let src = d.pow(n as u32 + 1);
    let mut out = Matrix::zeros(src / d, src);
    for i in 0..n {
        out.add_scaled(&sign(i), &mu_at(&m, d, i, n - 1 - i));
    }
    if n >= 1 {
        // a_n a_0 ⊗ a_1 ⊗ … ⊗ a_{n−1}
        let top = src / d;
        let mut rot = Matrix::zeros(src, src);
        for c in 0..src {
            rot.set((c % d) * top + c / d, c, Q::from_integer(1.into()));
        }
        out.add_scaled(&sign(n), &mu_at(&m, d, 0, n - 1).mul(&rot));
    }
    out
}

fn cohomology_dims(cdims: &[usize], maps: &[Matrix], max: usize) -> Vec<usize> {
    let ranks: Vec<usize> = maps.iter().map(Matrix::rank).collect();
    (0..=max).map(|n| cdims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 }).collect()
}

fn homology_dims(cdims: &[usize], maps: &[Matrix], max: usize) -> Vec<usize> {
    // maps[n] : C_{n+1} → C_n
    let ranks: Vec<usize> = maps.iter().map(Matrix::rank).collect();
    (0..=max).map(|n| cdims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub algebra: String,
    pub cohomology: Vec<usize>,
    pub homology: Vec<usize>,
}

/// `dim HH^n(A)` for `n ≤ max`.
pub fn hochschild_cohomology_dims(a: &FinDimAlgebra, max: usize) -> Vec<usize> {
    let d = a.dim();
    let cdims: Vec<usize> = (0..=max + 1).map(|n| d * d.pow(n as u32)).collect();
    let maps: Vec<Matrix> = (0..=max).map(|n| hochschild_coboundary(a, n)).collect();
    cohomology_dims(&cdims, &maps, max)
}

/// `dim HH_n(A)` for `n ≤ max`.
pub fn hochschild_homology_dims(a: &FinDimAlgebra, max: usize) -> Vec<usize> {
    let d = a.dim();
    let cdims: Vec<usize> = (0..=max + 1).map(|n| d.pow(n as u32 + 1)).collect();
    let maps: Vec<Matrix> = (1..=max + 1).map(|n| hochschild_boundary(a, n)).collect();
    homology_dims(&cdims, &maps, max)
}

pub fn hochschild_report(name: &str, a: &FinDimAlgebra, max: usize) -> OracleReport {
    OracleReport {
        algebra: name.to_string(),
        cohomology: hochschild_cohomology_dims(a, max),
        homology: hochschild_homology_dims(a, max),
    }
}

/// Increasing `n`-subsets of `0..d`, lexicographic.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(i + 1, d, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, n, &mut Vec::new(), &mut out);
    out
}

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

fn index_of(sets: &[Vec<usize>], s: &[usize]) -> usize {
    sets.binary_search_by(|x| x.as_slice().cmp(s)).expect("subset present")
}

/// `d : Hom(Λ^n g, M) → Hom(Λ^{n+1} g, M)` for a left module `M`,
/// with coordinates `(subset, component)`.
pub fn ce_coboundary(g: &LieAlgebra, m: &LieModule, n: usize) -> Result<Matrix> {
    if m.side() != Side::Left {
        return Err(Error::Invalid("CE cochains need a left module".into()));
    }
    let d = g.dim();
    let dm = m.dim();
    let src = subsets(d, n);
    let tgt = subsets(d, n + 1);
    let mut out = Matrix::zeros(tgt.len() * dm, src.len() * dm);
    for (ti, t) in tgt.iter().enumerate() {
        for i in 0..=n {
            let mut rest = t.clone();
            let xi = rest.remove(i);
            let si = index_of(&src, &rest);
            out.add_block(ti * dm, si * dm, &m.gens()[xi].scale(&sign(i)));
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let mut rest = t.clone();
                let xj = rest.remove(j);
                let xi = rest.remove(i);
                for (k, c) in g.bracket(xi, xj).iter().enumerate() {
                    if num::Zero::is_zero(c) {
                        continue;
                    }
                    if let Some((s, set)) = wedge_front(k, &rest) {
                        let si = index_of(&src, &set);
                        let coef = c * s * sign(i + j);
                        out.add_block(ti * dm, si * dm, &Matrix::identity(dm).scale(&coef));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `∂ : N ⊗ Λ^n g → N ⊗ Λ^{n−1} g` for a right module `N`,
/// `m ⊗ x_1∧…∧x_n ↦ Σ (−1)^{i+1} m x_i ⊗ … + Σ_{i<j} (−1)^{i+j} m ⊗ [x_i,x_j] ∧ …`.
pub fn ce_boundary(g: &LieAlgebra, nm: &LieModule, n: usize) -> Result<Matrix> {
    if nm.side() != Side::Right {
        return Err(Error::Invalid("CE chains need a right module".into()));
    }
    let d = g.dim();
    let dn = nm.dim();
    let src = subsets(d, n);
    let tgt = if n == 0 { Vec::new() } else { subsets(d, n - 1) };
    let mut out = Matrix::zeros(tgt.len() * dn, src.len() * dn);
    for (si, s) in src.iter().enumerate() {
        for i in 0..n {
            let mut rest = s.clone();
            let xi = rest.remove(i);
            let ti = index_of(&tgt, &rest);
            out.add_block(ti * dn, si * dn, &nm.gens()[xi].scale(&sign(i)));
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
                        let ti = index_of(&tgt, &set);
                        let coef = c * sg * sign(i + j);
                        out.add_block(ti * dn, si * dn, &Matrix::identity(dn).scale(&coef));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `dim H^n(g, M)` for `n ≤ max`.
pub fn ce_cohomology_dims(g: &LieAlgebra, m: &LieModule, max: usize) -> Result<Vec<usize>> {
    let d = g.dim();
    let cdims: Vec<usize> = (0..=max + 1).map(|n| subsets(d, n).len() * m.dim()).collect();
    let maps = (0..=max).map(|n| ce_coboundary(g, m, n)).collect::<Result<Vec<_>>>()?;
    Ok(cohomology_dims(&cdims, &maps, max))
}

/// `dim H_n(g, N)` for `n ≤ max`.
pub fn ce_homology_dims(g: &LieAlgebra, nm: &LieModule, max: usize) -> Result<Vec<usize>> {
    let d = g.dim();
    let cdims: Vec<usize> = (0..=max + 1).map(|n| subsets(d, n).len() * nm.dim()).collect();
    let maps = (1..=max + 1).map(|n| ce_boundary(g, nm, n)).collect::<Result<Vec<_>>>()?;
    Ok(homology_dims(&cdims, &maps, max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fd::*;

    #[test]
    fn hochschild_squares_to_zero() {
        let a = upper_triangular();
        for n in 0..3 {
            assert!(hochschild_coboundary(&a, n + 1).mul(&hochschild_coboundary(&a, n)).is_zero());
        }
        for n in 1..3 {
            assert!(hochschild_boundary(&a, n).mul(&hochschild_boundary(&a, n + 1)).is_zero());
        }
    }

    #[test]
    fn hochschild_of_small_algebras() {
        // char 0: HH^n(k[ε]) = k for n ≥ 1, HH^0 = A
        assert_eq!(hochschild_cohomology_dims(&dual_numbers(), 3), vec![2, 1, 1, 1]);
        assert_eq!(hochschild_homology_dims(&dual_numbers(), 3), vec![2, 1, 1, 1]);
        // separable and hereditary algebras
        assert_eq!(hochschild_cohomology_dims(&q_times_q(), 2), vec![2, 0, 0]);
        assert_eq!(hochschild_cohomology_dims(&upper_triangular(), 2), vec![1, 0, 0]);
        assert_eq!(hochschild_homology_dims(&upper_triangular(), 2), vec![2, 0, 0]);
    }

    #[test]
    fn ce_squares_to_zero() {
        let g = LieAlgebra::sl2();
        let m = LieModule::adjoint(&g);
        for n in 0..3 {
            assert!(ce_coboundary(&g, &m, n + 1).unwrap().mul(&ce_coboundary(&g, &m, n).unwrap()).is_zero());
        }
        let r = m.dual();
        for n in 1..3 {
            assert!(ce_boundary(&g, &r, n).unwrap().mul(&ce_boundary(&g, &r, n + 1).unwrap()).is_zero());
        }
    }

    #[test]
    fn ce_dims() {
        let g = LieAlgebra::nonabelian2();
        let t = LieModule::trivial(&g, Side::Left);
        assert_eq!(ce_cohomology_dims(&g, &t, 2).unwrap(), vec![1, 1, 0]);
        let sl2 = LieAlgebra::sl2();
        assert_eq!(ce_cohomology_dims(&sl2, &LieModule::trivial(&sl2, Side::Left), 3).unwrap(), vec![1, 0, 0, 1]);
        assert_eq!(ce_cohomology_dims(&sl2, &LieModule::adjoint(&sl2), 3).unwrap(), vec![0, 0, 0, 0]);
        let ab = LieAlgebra::abelian(2);
        assert_eq!(ce_homology_dims(&ab, &LieModule::trivial(&ab, Side::Right), 2).unwrap(), vec![1, 2, 1]);
    }
}
