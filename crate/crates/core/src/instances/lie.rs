//! Finite-dimensional Lie algebras over Q and their finite-dimensional modules.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{matrix_from_json, matrix_to_json, Side};
use crate::error::{Error, Result};
use crate::qlinalg::{fmt_q, parse_q, q, zero_vec, Matrix, Q};

/// Structure constants `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    bracket: Vec<Vec<Vec<Q>>>,
}

impl LieAlgebra {
    pub fn new(name: &str, labels: Vec<String>, bracket: Vec<Vec<Vec<Q>>>) -> Result<Self> {
        let d = labels.len();
        if bracket.len() != d || bracket.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::Invalid("bracket table has the wrong shape".into()));
        }
        let g = LieAlgebra { name: name.to_string(), labels, bracket };
        for i in 0..d {
            for j in 0..d {
                let s = crate::qlinalg::vec_add(&g.bracket[i][j], &g.bracket[j][i]);
                if !crate::qlinalg::is_zero_vec(&s) {
                    return Err(Error::Invalid(format!("bracket not antisymmetric at ({i},{j})")));
                }
            }
        }
        if let Some((i, j, k)) = g.jacobi_failure() {
            return Err(Error::Invalid(format!("Jacobi identity fails at ({i},{j},{k})")));
        }
        Ok(g)
    }

    pub fn abelian(d: usize) -> Self {
        let labels = (0..d).map(|i| format!("x{}", i + 1)).collect();
        LieAlgebra::new(&format!("abelian{d}"), labels, vec![vec![zero_vec(d); d]; d]).expect("abelian bracket")
    }

    /// `[x, y] = y`.
    pub fn nonabelian2() -> Self {
        let mut b = vec![vec![zero_vec(2); 2]; 2];
        b[0][1] = vec![q(0), q(1)];
        b[1][0] = vec![q(0), q(-1)];
        LieAlgebra::new("nonabelian2", vec!["x".into(), "y".into()], b).expect("nonabelian bracket")
    }

    /// Basis e, h, f with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let mut b = vec![vec![zero_vec(3); 3]; 3];
        let (e, h, f) = (0, 1, 2);
        let set = |b: &mut Vec<Vec<Vec<Q>>>, i: usize, j: usize, k: usize, c: i64| {
            b[i][j][k] = q(c);
            b[j][i][k] = q(-c);
        };
        set(&mut b, h, e, e, 2);
        set(&mut b, h, f, f, -2);
        set(&mut b, e, f, h, 1);
        LieAlgebra::new("sl2", vec!["e".into(), "h".into(), "f".into()], b).expect("sl2 bracket")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[Q] {
        &self.bracket[i][j]
    }

    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = zero_vec(d);
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                crate::qlinalg::add_assign_scaled(&mut out, &c, &self.bracket[i][j]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|r| r.iter().all(|v| crate::qlinalg::is_zero_vec(v)))
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let e = |i| crate::qlinalg::unit_vec(d, i);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let a = self.bracket_vec(&e(i), &self.bracket_vec(&e(j), &e(k)));
                    let b = self.bracket_vec(&e(j), &self.bracket_vec(&e(k), &e(i)));
                    let c = self.bracket_vec(&e(k), &self.bracket_vec(&e(i), &e(j)));
                    let s = crate::qlinalg::vec_add(&crate::qlinalg::vec_add(&a, &b), &c);
                    if !crate::qlinalg::is_zero_vec(&s) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `tr(ad x_i)`, the character of the top exterior power.
    pub fn ad_trace(&self) -> Vec<Q> {
        (0..self.dim()).map(|i| (0..self.dim()).fold(Q::zero(), |acc, k| acc + &self.bracket[i][k][k])).collect()
    }

    pub fn to_json(&self) -> LieJson {
        LieJson {
            name: self.name.clone(),
            labels: self.labels.clone(),
            bracket: self.bracket.iter().map(|r| r.iter().map(|v| v.iter().map(fmt_q).collect()).collect()).collect(),
        }
    }

    pub fn from_json(j: &LieJson) -> Result<Self> {
        let bracket = j
            .bracket
            .iter()
            .map(|r| r.iter().map(|v| v.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::new(&j.name, j.labels.clone(), bracket)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieJson {
    pub name: String,
    pub labels: Vec<String>,
    pub bracket: Vec<Vec<Vec<String>>>,
}

/// A finite-dimensional representation of `g`, left or right, by generator matrices.
/// Right modules satisfy `ρ([x,y]) = ρ(y)ρ(x) − ρ(x)ρ(y)`, i.e. `m·x = ρ(x) m`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieModule {
    side: Side,
    dim: usize,
    gens: Vec<Matrix>,
}

impl LieModule {
    pub fn new(g: &LieAlgebra, side: Side, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        if gens.len() != g.dim() || gens.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Invalid("generator matrices have the wrong shape".into()));
        }
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let comm = match side {
                    Side::Left => gens[i].mul(&gens[j]).sub(&gens[j].mul(&gens[i])),
                    Side::Right => gens[j].mul(&gens[i]).sub(&gens[i].mul(&gens[j])),
                };
                let mut br = Matrix::zeros(dim, dim);
                for (k, c) in g.bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        br.add_scaled(c, &gens[k]);
                    }
                }
                if comm != br {
                    return Err(Error::Invalid(format!("not a representation at ({i},{j})")));
                }
            }
        }
        Ok(LieModule { side, dim, gens })
    }

    pub fn trivial(g: &LieAlgebra, side: Side) -> Self {
        LieModule { side, dim: 1, gens: vec![Matrix::zeros(1, 1); g.dim()] }
    }

    /// One-dimensional module with `x_i` acting by `chi[i]`; valid when `chi` kills `[g,g]`.
    pub fn character(g: &LieAlgebra, side: Side, chi: &[Q]) -> Result<Self> {
        let gens = chi.iter().map(|c| Matrix::from_data(1, 1, vec![c.clone()])).collect();
        LieModule::new(g, side, 1, gens)
    }

    /// `g` acting on itself by `ad`.
    pub fn adjoint(g: &LieAlgebra) -> Self {
        let d = g.dim();
        let gens = (0..d)
            .map(|i| {
                let mut m = Matrix::zeros(d, d);
                for j in 0..d {
                    for k in 0..d {
                        m.set(k, j, g.bracket(i, j)[k].clone());
                    }
                }
                m
            })
            .collect();
        LieModule::new(g, Side::Left, d, gens).expect("adjoint representation")
    }

    /// `g*` with `(x·φ)(y) = −φ([x,y])`.
    pub fn coadjoint(g: &LieAlgebra) -> Self {
        let ad = LieModule::adjoint(g);
        let gens = ad.gens.iter().map(|m| m.transpose().scale(&q(-1))).collect();
        LieModule::new(g, Side::Left, g.dim(), gens).expect("coadjoint representation")
    }

    /// The linear dual with the opposite side: `(φ·x)(m) = φ(x m)` and vice versa.
    pub fn dual(&self) -> Self {
        LieModule { side: self.side.flip(), dim: self.dim, gens: self.gens.iter().map(|m| m.transpose()).collect() }
    }

    /// Same space, opposite side, via `m·x := −x m`.
    pub fn flip_side(&self) -> Self {
        LieModule { side: self.side.flip(), dim: self.dim, gens: self.gens.iter().map(|m| m.scale(&q(-1))).collect() }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    /// Action of the ordered monomial `x^e`.
    pub fn act_monomial(&self, e: &[u32]) -> Matrix {
        let mut out = Matrix::identity(self.dim);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                out = match self.side {
                    Side::Left => out.mul(&self.gens[i]),
                    Side::Right => self.gens[i].mul(&out),
                };
            }
        }
        out
    }

    pub fn to_json(&self) -> LieModuleJson {
        LieModuleJson { side: self.side, dim: self.dim, gens: self.gens.iter().map(matrix_to_json).collect() }
    }

    pub fn from_json(g: &LieAlgebra, j: &LieModuleJson) -> Result<Self> {
        let gens = j.gens.iter().map(|m| matrix_from_json(m, j.dim)).collect::<Result<Vec<_>>>()?;
        LieModule::new(g, j.side, j.dim, gens)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieModuleJson {
    pub side: Side,
    pub dim: usize,
    pub gens: Vec<Vec<Vec<String>>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_algebras_satisfy_jacobi() {
        for g in [LieAlgebra::abelian(1), LieAlgebra::abelian(2), LieAlgebra::nonabelian2(), LieAlgebra::sl2()] {
            assert!(g.jacobi_failure().is_none());
            let back = LieAlgebra::from_json(&g.to_json()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn rejects_bad_brackets() {
        let mut b = vec![vec![zero_vec(2); 2]; 2];
        b[0][1] = vec![q(0), q(1)];
        assert!(LieAlgebra::new("bad", vec!["x".into(), "y".into()], b).is_err());
    }

    #[test]
    fn modules_validate() {
        let g = LieAlgebra::sl2();
        let ad = LieModule::adjoint(&g);
        let co = LieModule::coadjoint(&g);
        assert_eq!(co.dim(), 3);
        let r = ad.dual();
        assert_eq!(r.side(), Side::Right);
        assert!(LieModule::new(&g, Side::Right, 3, r.gens().to_vec()).is_ok());
        assert!(LieModule::new(&g, Side::Left, 3, r.gens().to_vec()).is_err());
        let n = LieAlgebra::nonabelian2();
        assert!(LieModule::character(&n, Side::Right, &[q(1), q(0)]).is_ok());
        assert!(LieModule::character(&n, Side::Right, &[q(0), q(1)]).is_err());
        assert_eq!(n.ad_trace(), vec![q(1), q(0)]);
    }
}
