//! Lifting module maps along free resolutions, degree by degree.
//!
//! Given `P` free and a target resolution `T` of `M`, a map `P_m → M` that
//! vanishes on boundaries lifts to `F_k : P_{m+k} → T_k` with
//! `ε F_0 = φ` and `d F_k = σ F_{k−1} d`, for a chosen sign `σ`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::complexes::module_complex::ModuleComplex;
use crate::complexes::resolution::{offsets, FreeResolution};
use crate::error::{Error, Result};
use crate::qlinalg::{solve, vec_add, vec_scale, Matrix, Q};
use crate::ring::{FdRing, Ring};

pub trait LiftTarget<R: Ring> {
    type Elem: Clone + std::fmt::Debug;

    fn top(&self) -> usize;
    fn zero(&self, n: usize) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Q, a: &Self::Elem) -> Self::Elem;
    /// The module action of `r` on `T_n`.
    fn act(&self, n: usize, r: &R::Elem, x: &Self::Elem) -> Self::Elem;
    fn boundary(&self, n: usize, x: &Self::Elem) -> Self::Elem;
    fn augment(&self, x: &Self::Elem) -> Vec<Q>;
    fn solve_boundary(&self, n: usize, y: &Self::Elem) -> Option<Self::Elem>;
    fn solve_augment(&self, a: &[Q]) -> Option<Self::Elem>;
}

impl LiftTarget<FdRing> for ModuleComplex {
    type Elem = Vec<Q>;

    fn top(&self) -> usize {
        ModuleComplex::top(self)
    }

    fn zero(&self, n: usize) -> Vec<Q> {
        crate::qlinalg::zero_vec(self.term(n).dim())
    }

    fn add(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        vec_add(a, b)
    }

    fn scale(&self, c: &Q, a: &Vec<Q>) -> Vec<Q> {
        vec_scale(c, a)
    }

    fn act(&self, n: usize, r: &Vec<Q>, x: &Vec<Q>) -> Vec<Q> {
        self.term(n).act(r).mul_vec(x)
    }

    fn boundary(&self, n: usize, x: &Vec<Q>) -> Vec<Q> {
        self.diff(n).mul_vec(x)
    }

    fn augment(&self, x: &Vec<Q>) -> Vec<Q> {
        self.augmentation().mul_vec(x)
    }

    fn solve_boundary(&self, n: usize, y: &Vec<Q>) -> Option<Vec<Q>> {
        ModuleComplex::solve_boundary(self, n, y)
    }

    fn solve_augment(&self, a: &[Q]) -> Option<Vec<Q>> {
        ModuleComplex::solve_augment(self, a)
    }
}

/// A free resolution as lifting target; solves happen in filtration pieces,
/// raising the level until a solution appears (at most `extra_levels` times).
pub struct FreeTarget<'a, R: Ring> {
    pub res: &'a FreeResolution<R>,
    pub extra_levels: usize,
    cache: Mutex<HashMap<(usize, usize), Matrix>>,
}

impl<'a, R: Ring> FreeTarget<'a, R> {
    pub fn new(res: &'a FreeResolution<R>) -> Self {
        FreeTarget { res, extra_levels: 2, cache: Mutex::new(HashMap::new()) }
    }

    fn level_of(&self, n: usize, x: &[R::Elem]) -> usize {
        let ring = self.res.ring();
        x.iter()
            .zip(self.res.weights(n))
            .filter(|(c, _)| !ring.is_zero(c))
            .map(|(c, w)| ring.degree(c) + w)
            .max()
            .unwrap_or(0)
    }

    fn flatten(&self, n: usize, x: &[R::Elem], level: usize) -> Option<Vec<Q>> {
        let ring = self.res.ring();
        let mut out = Vec::new();
        for (c, &w) in x.iter().zip(self.res.weights(n)) {
            if w > level {
                if !ring.is_zero(c) {
                    return None;
                }
                continue;
            }
            out.extend(ring.coords(c, level - w)?);
        }
        Some(out)
    }

    fn unflatten(&self, n: usize, v: &[Q], level: usize) -> Vec<R::Elem> {
        let ring = self.res.ring();
        let dims = self.res.level_dims(n, level);
        let off = offsets(&dims);
        (0..dims.len()).map(|j| ring.from_coords(&v[off[j]..off[j] + dims[j]])).collect()
    }

    fn diff_at(&self, n: usize, level: usize) -> Result<Matrix> {
        if let Some(m) = self.cache.lock().unwrap().get(&(n, level)) {
            return Ok(m.clone());
        }
        let m = self.res.realize_diff(n, level)?;
        self.cache.lock().unwrap().insert((n, level), m.clone());
        Ok(m)
    }
}

impl<R: Ring> LiftTarget<R> for FreeTarget<'_, R> {
    type Elem = Vec<R::Elem>;

    fn top(&self) -> usize {
        self.res.top()
    }

    fn zero(&self, n: usize) -> Vec<R::Elem> {
        vec![self.res.ring().zero(); self.res.rank(n)]
    }

    fn add(&self, a: &Vec<R::Elem>, b: &Vec<R::Elem>) -> Vec<R::Elem> {
        a.iter().zip(b).map(|(x, y)| self.res.ring().add(x, y)).collect()
    }

    fn scale(&self, c: &Q, a: &Vec<R::Elem>) -> Vec<R::Elem> {
        a.iter().map(|x| self.res.ring().scale(c, x)).collect()
    }

    fn act(&self, _n: usize, r: &R::Elem, x: &Vec<R::Elem>) -> Vec<R::Elem> {
        self.res.scalar(r, x)
    }

    fn boundary(&self, n: usize, x: &Vec<R::Elem>) -> Vec<R::Elem> {
        self.res.apply(n, x)
    }

    fn augment(&self, x: &Vec<R::Elem>) -> Vec<Q> {
        self.res.augment(x)
    }

    fn solve_boundary(&self, n: usize, y: &Vec<R::Elem>) -> Option<Vec<R::Elem>> {
        let base = self.level_of(n - 1, y);
        for level in base..=base + self.extra_levels {
            let rhs = self.flatten(n - 1, y, level)?;
            let d = self.diff_at(n, level).ok()?;
            if let Some(x) = solve(&d, &rhs) {
                return Some(self.unflatten(n, &x, level));
            }
        }
        None
    }

    fn solve_augment(&self, a: &[Q]) -> Option<Vec<R::Elem>> {
        for level in 0..=self.extra_levels {
            let e = self.res.realize_augmentation(level);
            if let Some(x) = solve(&e, a) {
                return Some(self.unflatten(0, &x, level));
            }
        }
        None
    }
}

/// `F_k(g_j)` for generators `g_j` of `P_{shift+k}`, `k = 0 ..= maps.len() − 1`.
#[derive(Clone, Debug)]
pub struct ChainLift<E> {
    pub shift: usize,
    pub sign: Q,
    pub maps: Vec<Vec<E>>,
}

/// Lifts `φ` (values `phi[j] ∈ M` on generators of `P_shift`) through `depth` degrees.
pub fn lift_chain_map<R: Ring, T: LiftTarget<R>>(
    p: &FreeResolution<R>,
    target: &T,
    shift: usize,
    phi: &[Vec<Q>],
    depth: usize,
    sign: &Q,
) -> Result<ChainLift<T::Elem>> {
    // a finite resolution vanishes above its top, so only the nonzero range needs the target
    let used = if p.is_complete() { depth.min(p.top().saturating_sub(shift)) } else { depth };
    if (!p.is_complete() && shift + depth > p.top()) || used > target.top() {
        return Err(Error::WindowExceeded { requested: shift + depth, window: p.top().min(shift + target.top()) });
    }
    let mut maps: Vec<Vec<T::Elem>> = Vec::new();
    let f0 = phi
        .iter()
        .map(|v| target.solve_augment(v).ok_or(Error::LiftFailed { degree: 0 }))
        .collect::<Result<Vec<_>>>()?;
    maps.push(f0);
    for k in 1..=depth {
        let n = shift + k;
        let mut fk = Vec::with_capacity(p.rank(n));
        for j in 0..p.rank(n) {
            let mut y = target.zero(k - 1);
            for e in p.entries(n).iter().filter(|e| e.col == j) {
                y = target.add(&y, &target.act(k - 1, &e.coef, &maps[k - 1][e.row]));
            }
            let y = target.scale(sign, &y);
            let ok = if k == 1 {
                crate::qlinalg::is_zero_vec(&target.augment(&y))
            } else {
                true
            };
            if !ok {
                return Err(Error::LiftFailed { degree: k });
            }
            fk.push(target.solve_boundary(k, &y).ok_or(Error::LiftFailed { degree: k })?);
        }
        maps.push(fk);
    }
    Ok(ChainLift { shift, sign: sign.clone(), maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::galois_map;
    use crate::complexes::bar::bar_resolution;
    use crate::complexes::resolution::Entry;
    use crate::instances::fd::*;
    use crate::qlinalg::q;

    #[test]
    fn identity_lifts_to_a_chain_map() {
        let d = group_bialgebra(&FiniteGroup::cyclic(2));
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 3).unwrap();
        let t = FreeTarget::new(&p);
        let f = lift_chain_map(&p, &t, 0, &[vec![q(1)]], 3, &q(1)).unwrap();
        // check d F = F d on every generator
        for k in 1..=3 {
            for j in 0..p.rank(k) {
                let lhs = p.apply(k, &f.maps[k][j]);
                let mut rhs = t.zero(k - 1);
                for e in p.entries(k).iter().filter(|e| e.col == j) {
                    rhs = t.add(&rhs, &t.act(k - 1, &e.coef, &f.maps[k - 1][e.row]));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_exact_target_fails() {
        // P: 0 ← U ← U, d = 0 over k[Z/2]: not a resolution of k, so lifting into it breaks
        let d = group_bialgebra(&FiniteGroup::cyclic(2));
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 2).unwrap();
        let broken = FreeResolution::new(
            "broken",
            ring.clone(),
            crate::algebra::Side::Left,
            ring.base_module(),
            vec![1, 1],
            vec![vec![Entry { row: 0, col: 0, coef: vec![q(0), q(0)] }]],
            vec![vec![q(1)]],
            vec![vec![0], vec![0]],
            false,
        )
        .unwrap();
        let t = FreeTarget::new(&broken);
        assert!(matches!(lift_chain_map(&p, &t, 0, &[vec![q(1)]], 1, &q(1)), Err(Error::LiftFailed { degree: 1 })));
    }
}
