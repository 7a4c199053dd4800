//! Free resolutions with explicit generators.
//!
//! `P_n = U^{r_n}` with generators `g_0, …, g_{r_n − 1}` and
//! `d(g_j) = Σ_i r_ij g_i` (left modules: `r_ij g_i`; right modules: `g_i r_ij`).
//! `Hom_U(P_n, M)` and `N ⊗_U P_n` are then just `M^{r_n}` and `N^{r_n}`.

use serde::Serialize;

use crate::algebra::Side;
use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::qlinalg::{fmt_q, is_zero_vec, Matrix, Q};
use crate::ring::{left_mul_matrix, right_mul_matrix, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Entry<E> {
    pub row: usize,
    pub col: usize,
    pub coef: E,
}

/// How exactness of the augmented complex was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// A contracting homotopy was verified in every constructed degree.
    Homotopy,
    /// The k-linear realization was checked exact (all filtration levels listed).
    Realization { levels: Vec<usize> },
    /// Exactness follows from a filtration argument recorded with the resolution.
    Filtration { levels: Vec<usize>, note: String },
    None,
}

#[derive(Clone, Debug)]
pub struct FreeResolution<R: Ring> {
    name: String,
    ring: R,
    side: Side,
    base: R::Module,
    ranks: Vec<usize>,
    /// `diffs[n − 1]` holds the entries of `d_n`.
    diffs: Vec<Vec<Entry<R::Elem>>>,
    augmentation: Vec<Vec<Q>>,
    weights: Vec<Vec<usize>>,
    complete: bool,
    certificate: Certificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionJson {
    pub name: String,
    pub side: Side,
    pub ranks: Vec<usize>,
    pub complete: bool,
    pub window: Option<usize>,
    pub certificate: Certificate,
    /// `diffs[n−1]` lists `[row, col, coefficient]` of `d_n`.
    pub diffs: Vec<Vec<(usize, usize, String)>>,
    pub augmentation: Vec<Vec<String>>,
}

impl<R: Ring> FreeResolution<R> {
    /// Builds and validates `d∘d = 0`, `ε∘d = 0` and `U`-linear shapes.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        ring: R,
        side: Side,
        base: R::Module,
        ranks: Vec<usize>,
        diffs: Vec<Vec<Entry<R::Elem>>>,
        augmentation: Vec<Vec<Q>>,
        weights: Vec<Vec<usize>>,
        complete: bool,
    ) -> Result<Self> {
        if ranks.is_empty() || diffs.len() + 1 != ranks.len() || weights.len() != ranks.len() {
            return Err(Error::Invalid("resolution needs ranks, differentials and weights per degree".into()));
        }
        if ring.module_side(&base) != side {
            return Err(Error::Invalid("resolved module has the wrong side".into()));
        }
        if augmentation.len() != ranks[0] || augmentation.iter().any(|v| v.len() != ring.module_dim(&base)) {
            return Err(Error::Invalid("augmentation has the wrong shape".into()));
        }
        for (n, entries) in diffs.iter().enumerate() {
            for e in entries {
                if e.row >= ranks[n] || e.col >= ranks[n + 1] {
                    return Err(Error::Invalid(format!("entry out of range in d_{}", n + 1)));
                }
            }
        }
        let res = FreeResolution {
            name: name.to_string(),
            ring,
            side,
            base,
            ranks,
            diffs,
            augmentation,
            weights,
            complete,
            certificate: Certificate::None,
        };
        for n in 1..res.ranks.len() {
            for j in 0..res.ranks[n] {
                let dg = res.apply(n, &res.generator(n, j));
                if n == 1 {
                    if !is_zero_vec(&res.augment(&dg)) {
                        return Err(Error::Invalid(format!("ε∘d_1 ≠ 0 on generator {j}")));
                    }
                } else if !res.apply(n - 1, &dg).iter().all(|x| res.ring.is_zero(x)) {
                    return Err(Error::Invalid(format!("d∘d ≠ 0 on generator {j} of degree {n}")));
                }
            }
        }
        Ok(res)
    }

    pub fn with_certificate(mut self, c: Certificate) -> Self {
        self.certificate = c;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn base(&self) -> &R::Module {
        &self.base
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn entries(&self, n: usize) -> &[Entry<R::Elem>] {
        if n == 0 || n > self.top() {
            &[]
        } else {
            &self.diffs[n - 1]
        }
    }

    pub fn augmentation(&self) -> &[Vec<Q>] {
        &self.augmentation
    }

    pub fn weights(&self, n: usize) -> &[usize] {
        self.weights.get(n).map_or(&[], |w| w.as_slice())
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    /// Highest degree `n` in which `Ext^n`/`Tor_n` are certified.
    pub fn window(&self) -> Option<usize> {
        if self.complete {
            None
        } else {
            Some(self.top().saturating_sub(1))
        }
    }

    pub fn check_window(&self, n: usize) -> Result<()> {
        match self.window() {
            Some(w) if n > w => Err(Error::WindowExceeded { requested: n, window: w }),
            _ => Ok(()),
        }
    }

    pub fn generator(&self, n: usize, j: usize) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.rank(n)];
        v[j] = self.ring.one();
        v
    }

    /// `x ↦ r·x` (left) or `x ↦ x·r` (right) on coefficient vectors.
    pub fn scalar(&self, r: &R::Elem, x: &[R::Elem]) -> Vec<R::Elem> {
        x.iter()
            .map(|c| match self.side {
                Side::Left => self.ring.mul(r, c),
                Side::Right => self.ring.mul(c, r),
            })
            .collect()
    }

    /// `d_n` on an element of `P_n` given by its generator coefficients.
    pub fn apply(&self, n: usize, x: &[R::Elem]) -> Vec<R::Elem> {
        let mut out = vec![self.ring.zero(); if n == 0 { 0 } else { self.rank(n - 1) }];
        for e in self.entries(n) {
            let c = &x[e.col];
            if self.ring.is_zero(c) {
                continue;
            }
            let t = match self.side {
                Side::Left => self.ring.mul(c, &e.coef),
                Side::Right => self.ring.mul(&e.coef, c),
            };
            out[e.row] = self.ring.add(&out[e.row], &t);
        }
        out
    }

    /// `ε` on an element of `P_0`.
    pub fn augment(&self, x: &[R::Elem]) -> Vec<Q> {
        let mut out = crate::qlinalg::zero_vec(self.ring.module_dim(&self.base));
        for (j, c) in x.iter().enumerate() {
            if !self.ring.is_zero(c) {
                let v = self.ring.act(&self.base, c).mul_vec(&self.augmentation[j]);
                crate::qlinalg::add_assign_scaled(&mut out, &Q::from_integer(1.into()), &v);
            }
        }
        out
    }

    /// Dimension of the filtration piece of `P_n` at `level`.
    pub fn level_dims(&self, n: usize, level: usize) -> Vec<usize> {
        self.weights(n)
            .iter()
            .map(|&w| if w <= level { self.ring.filtration_dim(level - w) } else { 0 })
            .collect()
    }

    /// k-linear matrix of `d_n` between the level pieces of `P_n` and `P_{n−1}`.
    pub fn realize_diff(&self, n: usize, level: usize) -> Result<Matrix> {
        let src = self.level_dims(n, level);
        let tgt = self.level_dims(n - 1, level);
        let (so, to) = (offsets(&src), offsets(&tgt));
        let mut m = Matrix::zeros(tgt.iter().sum(), src.iter().sum());
        for e in self.entries(n) {
            if src[e.col] == 0 {
                continue;
            }
            let lin = level - self.weights[n][e.col];
            let blk = match self.side {
                Side::Left => right_mul_matrix(&self.ring, &e.coef, lin),
                Side::Right => left_mul_matrix(&self.ring, &e.coef, lin),
            };
            if blk.rows() > tgt[e.row] {
                let extra = blk.block(tgt[e.row], 0, blk.rows() - tgt[e.row], blk.cols());
                if !extra.is_zero() {
                    return Err(Error::Invalid(format!("d_{n} does not respect generator weights")));
                }
            }
            let rows = blk.rows().min(tgt[e.row]);
            m.add_block(to[e.row], so[e.col], &blk.block(0, 0, rows, blk.cols()));
        }
        Ok(m)
    }

    /// k-linear matrix of the augmentation on the level piece of `P_0`.
    pub fn realize_augmentation(&self, level: usize) -> Matrix {
        let src = self.level_dims(0, level);
        let so = offsets(&src);
        let bd = self.ring.module_dim(&self.base);
        let mut m = Matrix::zeros(bd, src.iter().sum());
        for j in 0..self.rank(0) {
            for k in 0..src[j] {
                let v = self.ring.act(&self.base, &self.ring.basis_elem(k)).mul_vec(&self.augmentation[j]);
                for (r, x) in v.into_iter().enumerate() {
                    m.set(r, so[j] + k, x);
                }
            }
        }
        m
    }

    /// The augmented complex `… → P_1 → P_0 → A → 0` at a filtration level,
    /// with `A` in degree −1.
    pub fn realize(&self, level: usize) -> Result<ChainComplex> {
        let mut dims = vec![self.ring.module_dim(&self.base)];
        let mut diffs = vec![self.realize_augmentation(level)];
        for n in 0..=self.top() {
            dims.push(self.level_dims(n, level).iter().sum());
            if n >= 1 {
                diffs.push(self.realize_diff(n, level)?);
            }
        }
        ChainComplex::new(-1, dims, diffs)
    }

    /// Checks exactness of the augmented realization at each level, in
    /// degrees `−1 ..= top − 1` (and `top` when complete).
    pub fn check_exact(&self, levels: &[usize]) -> Result<()> {
        for &l in levels {
            let c = self.realize(l)?;
            let last = if self.complete { self.top() as i64 } else { self.top() as i64 - 1 };
            for n in -1..=last {
                let h = c.homology(n).dim();
                if h != 0 {
                    return Err(Error::Invalid(format!(
                        "{}: realization at level {l} has homology of dimension {h} in degree {n}",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> ResolutionJson {
        ResolutionJson {
            name: self.name.clone(),
            side: self.side,
            ranks: self.ranks.clone(),
            complete: self.complete,
            window: self.window(),
            certificate: self.certificate.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|d| d.iter().map(|e| (e.row, e.col, self.ring.elem_to_string(&e.coef))).collect())
                .collect(),
            augmentation: self.augmentation.iter().map(|v| v.iter().map(fmt_q).collect()).collect(),
        }
    }
}

pub(crate) fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for &d in dims {
        out.push(acc);
        acc += d;
    }
    out
}
