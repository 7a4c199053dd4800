//! The bar resolution `C_n = U^{⊗_{Aᵒᵖ} n+1}` of `A`, with
//! `b′(u_0⊗⋯⊗u_n) = Σ_{i<n} (−1)^i u_0⊗⋯⊗u_iu_{i+1}⊗⋯⊗u_n + (−1)^n u_0⊗⋯⊗u_{n−1}t(ε(u_n))`
//! and contracting homotopy `s(x) = 1⊗x`, `s(a) = t(a)` in degree −1.
//!
//! Over `A = k` the terms are spanned by basis tuples and everything stays
//! sparse; otherwise each term is an explicit quotient of `C_{n−1} ⊗ U`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};

use crate::algebra::{kron_vec, FinDimAlgebra, Side};
use crate::bialgebroid::BialgebroidData;
use crate::check::CheckReport;
use crate::complexes::resolution::{Certificate, Entry, FreeResolution};
use crate::error::{Error, Result};
use crate::qlinalg::{inverse, unit_vec, zero_vec, Matrix, Q};
use crate::ring::FdRing;

use super::sign;

/// Sparse element of `U^{⊗ n+1}` over `A = k`, keyed by basis tuples.
pub type Chain = BTreeMap<Vec<usize>, Q>;

fn chain_add(c: &mut Chain, k: Vec<usize>, x: Q) {
    if x.is_zero() {
        return;
    }
    let e = c.entry(k.clone()).or_insert_with(Q::zero);
    *e += x;
    if e.is_zero() {
        c.remove(&k);
    }
}

/// Bar resolution over a bialgebra with trivial base.
#[derive(Clone, Debug)]
pub struct SparseBar {
    u: Arc<FinDimAlgebra>,
    counit: Vec<Q>,
    depth: usize,
}

impl SparseBar {
    pub fn new(d: &BialgebroidData, depth: usize) -> Result<Self> {
        if !d.has_trivial_base() {
            return Err(Error::Invalid("the sparse bar construction needs A = k".into()));
        }
        let counit = d.counit_matrix().row(0).to_vec();
        Ok(SparseBar { u: d.u().clone(), counit, depth })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dim(&self, n: usize) -> usize {
        self.u.dim().pow(n as u32 + 1)
    }

    /// `b′` on a basis tuple of length `n + 1 ≥ 2`; on `C_0` it is `ε`, returned as the empty tuple.
    pub fn boundary_tuple(&self, t: &[usize]) -> Chain {
        let n = t.len() - 1;
        let mut out = Chain::new();
        if n == 0 {
            chain_add(&mut out, vec![], self.counit[t[0]].clone());
            return out;
        }
        for i in 0..n {
            let s = sign(i);
            for (k, c) in self.u.basis_product(t[i], t[i + 1]).iter().enumerate() {
                if !c.is_zero() {
                    let mut m = Vec::with_capacity(n);
                    m.extend_from_slice(&t[..i]);
                    m.push(k);
                    m.extend_from_slice(&t[i + 2..]);
                    chain_add(&mut out, m, &s * c);
                }
            }
        }
        chain_add(&mut out, t[..n].to_vec(), sign(n) * &self.counit[t[n]]);
        out
    }

    pub fn boundary(&self, x: &Chain) -> Chain {
        let mut out = Chain::new();
        for (t, c) in x {
            for (m, y) in self.boundary_tuple(t) {
                chain_add(&mut out, m, c * y);
            }
        }
        out
    }

    /// `s(x) = 1⊗x`; on `C_{−1} = k` (the empty tuple) it is the unit of `U`.
    pub fn homotopy(&self, x: &Chain) -> Chain {
        let mut out = Chain::new();
        for (t, c) in x {
            for (k, e) in self.u.unit().iter().enumerate() {
                if !e.is_zero() {
                    let mut m = Vec::with_capacity(t.len() + 1);
                    m.push(k);
                    m.extend_from_slice(t);
                    chain_add(&mut out, m, c * e);
                }
            }
        }
        out
    }

    fn tuples(&self, len: usize) -> Vec<Vec<usize>> {
        let nu = self.u.dim();
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out.into_iter().flat_map(|t| (0..nu).map(move |k| [t.clone(), vec![k]].concat())).collect();
        }
        out
    }

    /// `b′∘b′ = 0` and `b′s + sb′ = id` on every basis tuple in degrees `−1 ..= depth`.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let mut sq = vec![];
        let mut hom = vec![];
        let one: Chain = [(vec![], Q::one())].into_iter().collect();
        // degree −1: ε s = id
        if self.boundary(&self.homotopy(&one)) != one {
            hom.push("degree -1".to_string());
        }
        for n in 0..=self.depth {
            for t in self.tuples(n + 1) {
                let x: Chain = [(t.clone(), Q::one())].into_iter().collect();
                let bx = self.boundary(&x);
                if n >= 1 && !self.boundary(&bx).is_empty() {
                    sq.push(format!("{t:?}"));
                }
                let mut lhs = self.boundary(&self.homotopy(&x));
                for (m, c) in self.homotopy(&bx) {
                    chain_add(&mut lhs, m, c);
                }
                if lhs != x {
                    hom.push(format!("{t:?}"));
                }
            }
        }
        report.record("bar_d_squared", sq);
        report.record("bar_homotopy", hom);
        report
    }

    /// The same complex with generators `g_{i_1…i_n} = 1⊗b_{i_1}⊗⋯⊗b_{i_n}`.
    pub fn to_free(&self, ring: &FdRing) -> Result<FreeResolution<FdRing>> {
        let nu = self.u.dim();
        let index = |t: &[usize]| t.iter().fold(0usize, |acc, &k| acc * nu + k);
        let ranks: Vec<usize> = (0..=self.depth).map(|n| nu.pow(n as u32)).collect();
        let mut diffs = Vec::new();
        for n in 1..=self.depth {
            let mut entries: Vec<Entry<Vec<Q>>> = Vec::new();
            for t in self.tuples(n) {
                let col = index(&t);
                let mut acc: BTreeMap<usize, Vec<Q>> = BTreeMap::new();
                let mut push = |row: usize, coef: Vec<Q>| {
                    let e = acc.entry(row).or_insert_with(|| zero_vec(nu));
                    crate::qlinalg::add_assign_scaled(e, &Q::one(), &coef);
                };
                // 1·b_{i1} ⊗ rest
                push(index(&t[1..]), unit_vec(nu, t[0]));
                for i in 0..n - 1 {
                    for (k, c) in self.u.basis_product(t[i], t[i + 1]).iter().enumerate() {
                        if !c.is_zero() {
                            let m = [&t[..i], &[k], &t[i + 2..]].concat();
                            push(index(&m), crate::qlinalg::vec_scale(&(sign(i + 1) * c), self.u.unit()));
                        }
                    }
                }
                let e = sign(n) * &self.counit[t[n - 1]];
                push(index(&t[..n - 1]), crate::qlinalg::vec_scale(&e, self.u.unit()));
                for (row, coef) in acc {
                    if !crate::qlinalg::is_zero_vec(&coef) {
                        entries.push(Entry { row, col, coef });
                    }
                }
            }
            diffs.push(entries);
        }
        let weights = ranks.iter().map(|&r| vec![0; r]).collect();
        let res = FreeResolution::new(
            &format!("bar{}", self.depth),
            ring.clone(),
            Side::Left,
            crate::ring::Ring::base_module(ring),
            ranks,
            diffs,
            vec![vec![Q::one()]],
            weights,
            false,
        )?;
        Ok(res.with_certificate(Certificate::Homotopy))
    }
}

/// One step `C_n = C_{n−1} ⊗_{Aᵒᵖ} U ≅ C_{n−1} ⊗ k^W`, using a basis `W` of
/// `U` over `Aᵒᵖ` (acting by `u ↦ t(a)u`).
#[derive(Clone, Debug)]
struct Step {
    prev: usize,
    m: usize,
    /// right multiplication by `t(a_i)` on the last factor of `C_{n−1}`
    rt_prev: Vec<Matrix>,
}

/// Bar resolution over an arbitrary base, each term written as
/// `C_{n−1} ⊗ k^W`.
#[derive(Clone, Debug)]
pub struct DenseBar {
    data: BialgebroidData,
    depth: usize,
    w_basis: Vec<Vec<Q>>,
    /// `u = Σ_{i,l} alpha[(i·m + l), u] t(a_i) w_l`
    alpha: Matrix,
    steps: Vec<Step>,
    dims: Vec<usize>,
    /// Right multiplication of the last tensor factor, per basis element of `U`.
    right: Vec<Vec<Matrix>>,
    /// Left multiplication of the first tensor factor.
    left: Vec<Vec<Matrix>>,
    /// `b′_n : C_n → C_{n−1}`, index `n − 1`.
    bd: Vec<Matrix>,
    /// `s_n : C_n → C_{n+1}`.
    hom: Vec<Matrix>,
}

impl DenseBar {
    /// Builds degrees `0 ..= depth + 1` so the homotopy can be checked through `depth`.
    pub fn new(data: &BialgebroidData, depth: usize) -> Result<Self> {
        let u = data.u().clone();
        let nu = u.dim();
        let na = data.a().dim();
        let top = depth + 1;
        let w_basis = a_op_basis(data)?;
        let m = w_basis.len();
        let t_elems: Vec<Vec<Q>> = (0..na).map(|i| data.target(&data.a().basis(i))).collect();
        let mut cols = Vec::with_capacity(nu);
        for t in &t_elems {
            for w in &w_basis {
                cols.push(u.mul(t, w));
            }
        }
        let alpha = inverse(&Matrix::from_cols(nu, &cols)).expect("W is a basis over the opposite base");
        let right_u: Vec<Matrix> = (0..nu).map(|k| u.right_mul_matrix(&u.basis(k))).collect();
        let left_u: Vec<Matrix> = (0..nu).map(|k| u.left_mul_matrix(&u.basis(k))).collect();
        let t_right: Vec<Matrix> = t_elems.iter().map(|t| u.right_mul_matrix(t)).collect();
        let mut bar = DenseBar {
            data: data.clone(),
            depth,
            w_basis,
            alpha,
            steps: vec![],
            dims: vec![nu],
            right: vec![right_u],
            left: vec![left_u],
            bd: vec![],
            hom: vec![],
        };
        let mut rt = t_right;
        for n in 1..=top {
            let prev = bar.dims[n - 1];
            bar.steps.push(Step { prev, m, rt_prev: std::mem::take(&mut rt) });
            bar.dims.push(prev * m);
            if n < top {
                let wl: Vec<Vec<Vec<Q>>> = (0..m)
                    .map(|l| (0..nu).map(|k| u.mul(&bar.w_basis[l], &u.basis(k))).collect())
                    .collect();
                let right_n: Vec<Matrix> = (0..nu)
                    .map(|k| bar.step_map(n, |x, l| (unit_vec(prev, x), wl[l][k].clone())))
                    .collect();
                let left_n: Vec<Matrix> = bar.left[n - 1].iter().map(|lm| lm.kron(&Matrix::identity(m))).collect();
                rt = t_elems
                    .iter()
                    .map(|t| bar.step_map(n, |x, l| (unit_vec(prev, x), u.mul(&bar.w_basis[l], t))))
                    .collect();
                bar.right.push(right_n);
                bar.left.push(left_n);
            }
        }
        bar.build_maps()?;
        Ok(bar)
    }

    /// `x ⊗ u ∈ C_{n−1} ⊗ U` in the coordinates of `C_n`.
    fn project(&self, n: usize, x: &[Q], v: &[Q]) -> Vec<Q> {
        let st = &self.steps[n - 1];
        let mut out = zero_vec(st.prev * st.m);
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            for i in 0..st.rt_prev.len() {
                let mut y = None;
                for l in 0..st.m {
                    let c = self.alpha.get(i * st.m + l, k);
                    if c.is_zero() {
                        continue;
                    }
                    let y = y.get_or_insert_with(|| st.rt_prev[i].mul_vec(x));
                    let coef = c * vk;
                    for (r, yr) in y.iter().enumerate() {
                        if !yr.is_zero() {
                            out[r * st.m + l] += &coef * yr;
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix on `C_n` whose column `(x, l)` is the projection of `f(x, l) ∈ C_{n−1} × U`.
    fn step_map(&self, n: usize, f: impl Fn(usize, usize) -> (Vec<Q>, Vec<Q>)) -> Matrix {
        let st = &self.steps[n - 1];
        let cols: Vec<Vec<Q>> = (0..st.prev * st.m)
            .map(|c| {
                let (x, v) = f(c / st.m, c % st.m);
                self.project(n, &x, &v)
            })
            .collect();
        Matrix::from_cols(st.prev * st.m, &cols)
    }

    fn build_maps(&mut self) -> Result<()> {
        let u = self.data.u().clone();
        let nu = u.dim();
        let top = self.depth + 1;
        let eps = self.data.counit_matrix();
        // t(ε(b_k)) as an element of U
        let te: Vec<Vec<Q>> = (0..nu).map(|k| self.data.target(&eps.col(k))).collect();
        let right_by = |n: usize, w: &[Q]| -> Matrix {
            let mut m = Matrix::zeros(self.dims[n], self.dims[n]);
            for (k, c) in w.iter().enumerate() {
                if !c.is_zero() {
                    m.add_scaled(c, &self.right[n][k]);
                }
            }
            m
        };
        // merging part M_n and b′_n on C_{n−1} ⊗ U, then restricted along x ⊗ w_l
        let mut merge: Vec<Matrix> = Vec::new();
        for n in 1..=top {
            let prev = self.dims[n - 1];
            let mut m_amb = Matrix::zeros(prev, prev * nu);
            let mut e_amb = Matrix::zeros(prev, prev * nu);
            let right_te: Vec<Matrix> = te.iter().map(|t| right_by(n - 1, t)).collect();
            for k in 0..nu {
                for x in 0..prev {
                    let col = x * nu + k;
                    let mut v = self.right[n - 1][k].col(x).iter().map(|c| sign(n - 1) * c).collect::<Vec<_>>();
                    if n >= 2 {
                        let inner = merge[n - 2].col(x);
                        let p = self.project(n - 1, &inner, &unit_vec(nu, k));
                        v = crate::qlinalg::vec_add(&v, &p);
                    }
                    for (r, c) in v.into_iter().enumerate() {
                        m_amb.set(r, col, c);
                    }
                    for (r, c) in right_te[k].col(x).into_iter().enumerate() {
                        e_amb.set(r, col, sign(n) * c);
                    }
                }
            }
            let m = self.steps[n - 1].m;
            let restrict = |f: &Matrix| -> Matrix {
                let cols: Vec<Vec<Q>> = (0..prev * m)
                    .map(|c| {
                        let (x, l) = (c / m, c % m);
                        let mut out = zero_vec(prev);
                        for (k, wk) in self.w_basis[l].iter().enumerate() {
                            if !wk.is_zero() {
                                crate::qlinalg::add_assign_scaled(&mut out, wk, &f.col(x * nu + k));
                            }
                        }
                        out
                    })
                    .collect();
                Matrix::from_cols(prev, &cols)
            };
            let mn = restrict(&m_amb);
            let bn = restrict(&m_amb.add(&e_amb));
            merge.push(mn);
            self.bd.push(bn);
        }
        // s_n(x ⊗ w) = s_{n−1}(x) ⊗ w
        let one = u.unit().to_vec();
        let s0 = Matrix::from_cols(self.dims[1], &(0..nu).map(|k| self.project(1, &one, &unit_vec(nu, k))).collect::<Vec<_>>());
        self.hom.push(s0);
        for n in 1..top {
            let sn = self.hom[n - 1].kron(&Matrix::identity(self.steps[n].m));
            self.hom.push(sn);
        }
        Ok(())
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn boundary(&self, n: usize) -> &Matrix {
        &self.bd[n - 1]
    }

    pub fn homotopy(&self, n: usize) -> &Matrix {
        &self.hom[n]
    }

    pub fn left_action(&self, n: usize, k: usize) -> &Matrix {
        &self.left[n][k]
    }

    /// `ε : C_0 = U → A`.
    pub fn augmentation(&self) -> Matrix {
        self.data.counit_matrix()
    }

    /// `s_{−1} : A → U`, `a ↦ t(a)`.
    pub fn unit_section(&self) -> Matrix {
        self.data.eta().mul(&target_embedding(&self.data))
    }

    /// Checks `b′² = 0`, `ε b′ = 0`, the homotopy identities in degrees `−1 ..= depth`,
    /// and `U`-linearity of `b′`.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let eps = self.augmentation();
        let s_m1 = self.unit_section();
        let mut sq = vec![];
        if !eps.mul(self.boundary(1)).is_zero() {
            sq.push("degree 1".into());
        }
        for n in 2..=self.depth {
            if !self.boundary(n - 1).mul(self.boundary(n)).is_zero() {
                sq.push(format!("degree {n}"));
            }
        }
        report.record("bar_d_squared", sq);
        let mut hom = vec![];
        if !eps.mul(&s_m1).is_identity() {
            hom.push("degree -1".into());
        }
        if !self.boundary(1).mul(self.homotopy(0)).add(&s_m1.mul(&eps)).is_identity() {
            hom.push("degree 0".into());
        }
        for n in 1..=self.depth {
            let lhs = self.boundary(n + 1).mul(self.homotopy(n)).add(&self.homotopy(n - 1).mul(self.boundary(n)));
            if !lhs.is_identity() {
                hom.push(format!("degree {n}"));
            }
        }
        report.record("bar_homotopy", hom);
        let mut lin = vec![];
        for n in 1..=self.depth {
            for k in 0..self.data.u().dim() {
                if self.left[n - 1][k].mul(self.boundary(n)) != self.boundary(n).mul(&self.left[n][k]) {
                    lin.push(format!("degree {n}, basis {k}"));
                }
            }
        }
        report.record("bar_u_linear", lin);
        report
    }

    /// Free generators `1⊗w⊗g′` (with `g′` a generator one degree down) and
    /// `b′` rewritten in them.
    pub fn to_free(&self, ring: &FdRing) -> Result<FreeResolution<FdRing>> {
        let nu = self.data.u().dim();
        let w_basis = &self.w_basis;
        let mut gens: Vec<Vec<Vec<Q>>> = vec![vec![self.data.u().unit().to_vec()]];
        let mut inv: Vec<Matrix> = vec![Matrix::identity(nu)];
        for n in 1..=self.depth {
            let dim = self.dim(n);
            let mut chosen: Vec<Vec<Q>> = Vec::new();
            let mut span = Matrix::zeros(dim, 0);
            let act = |v: &[Q], w: &[Q]| -> Vec<Q> {
                let mut out = zero_vec(v.len());
                for (k, c) in w.iter().enumerate() {
                    if !c.is_zero() {
                        crate::qlinalg::add_assign_scaled(&mut out, c, &self.left[n - 1][k].mul_vec(v));
                    }
                }
                out
            };
            'outer: for g in &gens[n - 1] {
                for w in w_basis {
                    if span.cols() == dim {
                        break 'outer;
                    }
                    let cand = self.homotopy(n - 1).mul_vec(&act(g, w));
                    let cols: Vec<Vec<Q>> = (0..nu).map(|k| self.left[n][k].mul_vec(&cand)).collect();
                    let trial = span.hstack(&Matrix::from_cols(dim, &cols));
                    if trial.rank() == trial.cols() {
                        span = trial;
                        chosen.push(cand);
                    }
                }
            }
            if span.cols() != dim {
                return Err(Error::NotProjective(format!("bar term {n} is not visibly free")));
            }
            inv.push(inverse(&span).expect("square full-rank generator matrix"));
            gens.push(chosen);
        }
        let mut diffs = Vec::new();
        for n in 1..=self.depth {
            let mut entries = Vec::new();
            for (j, g) in gens[n].iter().enumerate() {
                let coords = inv[n - 1].mul_vec(&self.boundary(n).mul_vec(g));
                for i in 0..gens[n - 1].len() {
                    let coef = coords[i * nu..(i + 1) * nu].to_vec();
                    if !crate::qlinalg::is_zero_vec(&coef) {
                        entries.push(Entry { row: i, col: j, coef });
                    }
                }
            }
            diffs.push(entries);
        }
        let ranks: Vec<usize> = gens.iter().map(|g| g.len()).collect();
        let weights = ranks.iter().map(|&r| vec![0; r]).collect();
        let aug = vec![self.augmentation().mul_vec(self.data.u().unit())];
        let res = FreeResolution::new(
            &format!("bar{}", self.depth),
            ring.clone(),
            Side::Left,
            crate::ring::Ring::base_module(ring),
            ranks,
            diffs,
            aug,
            weights,
            false,
        )?;
        Ok(res.with_certificate(Certificate::Homotopy))
    }
}

/// A basis of `U` as a free module over `Aᵒᵖ` acting by `u ↦ t(a)u`,
/// searched among `s(a)`, the basis of `U`, and products `s(a)b`.
fn a_op_basis(d: &BialgebroidData) -> Result<Vec<Vec<Q>>> {
    let u = d.u();
    let (nu, na) = (u.dim(), d.a().dim());
    let t_left: Vec<Matrix> = (0..na).map(|i| u.left_mul_matrix(&d.target(&d.a().basis(i)))).collect();
    let mut cands: Vec<Vec<Q>> = (0..na).map(|i| d.source(&d.a().basis(i))).collect();
    cands.extend((0..nu).map(|k| u.basis(k)));
    for i in 0..na {
        for k in 0..nu {
            cands.push(u.mul(&d.source(&d.a().basis(i)), &u.basis(k)));
        }
    }
    let mut chosen = Vec::new();
    let mut span = Matrix::zeros(nu, 0);
    for w in cands {
        if span.cols() == nu {
            break;
        }
        let cols: Vec<Vec<Q>> = t_left.iter().map(|m| m.mul_vec(&w)).collect();
        let trial = span.hstack(&Matrix::from_cols(nu, &cols));
        if trial.rank() == trial.cols() {
            span = trial;
            chosen.push(w);
        }
    }
    if span.cols() != nu {
        return Err(Error::NotProjective("U is not visibly free over the opposite base".into()));
    }
    Ok(chosen)
}

/// The embedding `A → A ⊗ A`, `a ↦ 1 ⊗ a`, feeding `η` to get `t`.
fn target_embedding(d: &BialgebroidData) -> Matrix {
    let na = d.a().dim();
    let one = d.a().unit().to_vec();
    Matrix::from_cols(na * na, &(0..na).map(|i| kron_vec(&one, &unit_vec(na, i))).collect::<Vec<_>>())
}

/// The embedding `a ↦ a ⊗ 1`, which feeds `η` to get `s`.
pub fn source_embedding(d: &BialgebroidData) -> Matrix {
    let na = d.a().dim();
    let one = d.a().unit().to_vec();
    Matrix::from_cols(na * na, &(0..na).map(|i| kron_vec(&unit_vec(na, i), &one)).collect::<Vec<_>>())
}

/// Either bar construction, depending on the base.
pub fn bar_resolution(d: &BialgebroidData, ring: &FdRing, depth: usize) -> Result<(FreeResolution<FdRing>, CheckReport)> {
    if d.has_trivial_base() {
        let b = SparseBar::new(d, depth)?;
        let rep = b.check();
        Ok((b.to_free(ring)?, rep))
    } else {
        let b = DenseBar::new(d, depth)?;
        let rep = b.check();
        Ok((b.to_free(ring)?, rep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::galois_map;
    use crate::instances::fd::*;

    #[test]
    fn group_bar_dims_and_homotopy() {
        let d = group_bialgebra(&FiniteGroup::cyclic(2));
        let b = SparseBar::new(&d, 3).unwrap();
        assert_eq!(b.dim(2), 8);
        assert!(b.check().all_passed());
    }

    #[test]
    fn sweedler_bar_is_contractible() {
        let b = SparseBar::new(&sweedler(), 3).unwrap();
        assert!(b.check().all_passed());
    }

    #[test]
    fn enveloping_bar_is_contractible() {
        let d = enveloping_bialgebroid(dual_numbers()).unwrap();
        let b = DenseBar::new(&d, 3).unwrap();
        assert_eq!((0..=4).map(|n| b.dim(n)).collect::<Vec<_>>(), vec![4, 8, 16, 32, 64]);
        let rep = b.check();
        assert!(rep.all_passed(), "{:?}", rep.failures());
    }

    #[test]
    fn source_section_breaks_degree_zero_homotopy() {
        // s(a) = η(a⊗1) in degree −1 does not contract the bar complex of A^e
        let d = enveloping_bialgebroid(dual_numbers()).unwrap();
        let b = DenseBar::new(&d, 1).unwrap();
        let s_src = d.eta().mul(&source_embedding(&d));
        let lhs = b.boundary(1).mul(b.homotopy(0)).add(&s_src.mul(&b.augmentation()));
        assert!(!lhs.is_identity());
        let lhs = b.boundary(1).mul(b.homotopy(0)).add(&b.unit_section().mul(&b.augmentation()));
        assert!(lhs.is_identity());
    }

    #[test]
    fn free_conversion_matches() {
        let d = enveloping_bialgebroid(upper_triangular()).unwrap();
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let b = DenseBar::new(&d, 2).unwrap();
        assert!(b.check().all_passed());
        let f = b.to_free(&ring).unwrap();
        assert_eq!(f.ranks(), &[1, 3, 9]);
        f.check_exact(&[0]).unwrap();
    }

    #[test]
    fn sparse_free_conversion_is_exact() {
        let d = group_bialgebra(&FiniteGroup::cyclic(3));
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (f, rep) = bar_resolution(&d, &ring, 3).unwrap();
        assert!(rep.all_passed());
        assert_eq!(f.ranks(), &[1, 3, 9, 27]);
        f.check_exact(&[0]).unwrap();
    }
}
