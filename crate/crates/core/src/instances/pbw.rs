//! `U(g)` in the PBW basis of ordered monomials `x₁^{a₁}⋯x_d^{a_d}`, ordered by
//! the input basis of `g`, with its primitive coproduct and translation map.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num::{One, Zero};

use crate::algebra::Side;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::instances::lie::{LieAlgebra, LieModule};
use crate::qlinalg::{fmt_q, Matrix, QuotientSpace, Q};
use crate::ring::{Ring, TensorModule};

pub type Mono = Vec<u32>;

fn mono_degree(m: &[u32]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

/// A rational combination of ordered monomials; zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElem {
    terms: BTreeMap<Mono, Q>,
}

impl PbwElem {
    pub fn zero() -> Self {
        PbwElem::default()
    }

    pub fn monomial(m: Mono, c: Q) -> Self {
        let mut e = PbwElem::zero();
        e.add_term(m, c);
        e
    }

    pub fn one(d: usize) -> Self {
        PbwElem::monomial(vec![0; d], Q::one())
    }

    pub fn generator(d: usize, i: usize) -> Self {
        let mut m = vec![0; d];
        m[i] = 1;
        PbwElem::monomial(m, Q::one())
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| mono_degree(m)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            let key: Vec<Mono> = self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &PbwElem) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn scaled(&self, c: &Q) -> PbwElem {
        let mut out = PbwElem::zero();
        out.add_scaled(c, self);
        out
    }
}

/// Elements of `U ⊗ U`.
pub type PbwPair = BTreeMap<(Mono, Mono), Q>;

fn pair_add(p: &mut PbwPair, k: (Mono, Mono), c: Q) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(k.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&k);
    }
}

#[derive(Default)]
struct Caches {
    left_gen: HashMap<(usize, Mono), PbwElem>,
    basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
    basis_level: Option<usize>,
}

/// `U(g)` with memoized straightening. Cloning shares the caches.
#[derive(Clone)]
pub struct PbwRing {
    lie: Arc<LieAlgebra>,
    caches: Arc<Mutex<Caches>>,
}

impl fmt::Debug for PbwRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PbwRing({})", self.lie.name())
    }
}

impl PbwRing {
    pub fn new(lie: LieAlgebra) -> Self {
        PbwRing { lie: Arc::new(lie), caches: Arc::new(Mutex::new(Caches::default())) }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn d(&self) -> usize {
        self.lie.dim()
    }

    pub fn generator(&self, i: usize) -> PbwElem {
        PbwElem::generator(self.d(), i)
    }

    /// `x_i · m` in normal form.
    fn left_gen(&self, i: usize, m: &Mono) -> PbwElem {
        if let Some(hit) = self.caches.lock().unwrap().left_gen.get(&(i, m.clone())) {
            return hit.clone();
        }
        let out = match m.iter().position(|&e| e > 0) {
            Some(j) if j < i => {
                // x_i x_j m' = x_j (x_i m') + [x_i, x_j] m'
                let mut rest = m.clone();
                rest[j] -= 1;
                let mut out = PbwElem::zero();
                for (t, c) in &self.left_gen(i, &rest).terms {
                    out.add_scaled(c, &self.left_gen(j, t));
                }
                for (k, c) in self.lie.bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.add_scaled(c, &self.left_gen(k, &rest));
                    }
                }
                out
            }
            _ => {
                let mut n = m.clone();
                n[i] += 1;
                PbwElem::monomial(n, Q::one())
            }
        };
        self.caches.lock().unwrap().left_gen.insert((i, m.clone()), out.clone());
        out
    }

    fn mono_times(&self, mu: &Mono, v: &PbwElem) -> PbwElem {
        let mut acc = v.clone();
        for i in (0..mu.len()).rev() {
            for _ in 0..mu[i] {
                let mut next = PbwElem::zero();
                for (t, c) in &acc.terms {
                    next.add_scaled(c, &self.left_gen(i, t));
                }
                acc = next;
            }
        }
        acc
    }

    pub fn multiply(&self, u: &PbwElem, v: &PbwElem) -> PbwElem {
        let mut out = PbwElem::zero();
        for (mu, c) in &u.terms {
            out.add_scaled(c, &self.mono_times(mu, v));
        }
        out
    }

    /// Product in normal form, refusing results whose degree exceeds `bound`.
    pub fn multiply_bounded(&self, u: &PbwElem, v: &PbwElem, bound: usize) -> Result<PbwElem> {
        for x in [u, v] {
            if x.degree() > bound {
                return Err(Error::DegreeOverflow { degree: x.degree(), bound });
            }
        }
        let out = self.multiply(u, v);
        if out.degree() > bound {
            return Err(Error::DegreeOverflow { degree: out.degree(), bound });
        }
        Ok(out)
    }

    fn ensure_basis(&self, level: usize) {
        let mut c = self.caches.lock().unwrap();
        if c.basis_level.is_some_and(|l| l >= level) {
            return;
        }
        let start = c.basis_level.map_or(0, |l| l + 1);
        for deg in start..=level {
            let mut monos = Vec::new();
            compositions(self.d(), deg as u32, &mut vec![], &mut monos);
            for m in monos {
                let k = c.basis.len();
                c.index.insert(m.clone(), k);
                c.basis.push(m);
            }
        }
        c.basis_level = Some(level);
    }

    pub fn mono_to_string(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.lie.labels()[i].clone() } else { format!("{}^{}", self.lie.labels()[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// `Δ` on a monomial: the product of `x⊗1 + 1⊗x` over its letters.
    pub fn coproduct(&self, u: &PbwElem) -> PbwPair {
        let d = self.d();
        let mut out = PbwPair::new();
        for (m, c) in &u.terms {
            // binomial expansion: the letters of an ordered monomial commute with
            // themselves, and Δ is multiplicative with ordered tensor factors.
            let mut acc: Vec<(Mono, Mono, Q)> = vec![(vec![0; d], vec![0; d], c.clone())];
            for i in 0..d {
                let mut next = Vec::new();
                for (a, b, x) in &acc {
                    for k in 0..=m[i] {
                        let mut a2 = a.clone();
                        let mut b2 = b.clone();
                        a2[i] += k;
                        b2[i] += m[i] - k;
                        next.push((a2, b2, x * Q::from_integer(binomial(m[i], k).into())));
                    }
                }
                acc = next;
            }
            for (a, b, x) in acc {
                pair_add(&mut out, (a, b), x);
            }
        }
        out
    }

    pub fn counit(&self, u: &PbwElem) -> Q {
        u.terms.get(&vec![0; self.d()]).cloned().unwrap_or_else(Q::zero)
    }

    /// `u ↦ u₊ ⊗ u₋`, multiplicative in the sense `(uv)₊⊗(uv)₋ = u₊v₊ ⊗ v₋u₋`,
    /// starting from `x₊⊗x₋ = x⊗1 − 1⊗x`.
    pub fn translation(&self, u: &PbwElem) -> PbwPair {
        let d = self.d();
        let mut out = PbwPair::new();
        for (m, c) in &u.terms {
            let mut acc: PbwPair = PbwPair::new();
            acc.insert((vec![0; d], vec![0; d]), c.clone());
            for i in 0..d {
                for _ in 0..m[i] {
                    let x = self.generator(i);
                    let mut next = PbwPair::new();
                    for ((a, b), y) in &acc {
                        let a = PbwElem::monomial(a.clone(), Q::one());
                        let b = PbwElem::monomial(b.clone(), Q::one());
                        // (u x)₊ ⊗ (u x)₋ = u₊x ⊗ b − u₊ ⊗ x u₋
                        for (p, s) in &self.multiply(&a, &x).terms {
                            for (r, t) in &b.terms {
                                pair_add(&mut next, (p.clone(), r.clone()), y * s * t);
                            }
                        }
                        for (p, s) in &a.terms {
                            for (r, t) in &self.multiply(&x, &b).terms {
                                pair_add(&mut next, (p.clone(), r.clone()), -(y * s * t));
                            }
                        }
                    }
                    acc = next;
                }
            }
            for (k, y) in acc {
                pair_add(&mut out, k, y);
            }
        }
        out
    }

    pub fn pair_multiply(&self, x: &PbwPair, y: &PbwPair) -> PbwPair {
        let mut out = PbwPair::new();
        for ((a, b), s) in x {
            for ((c, e), t) in y {
                let l = self.multiply(&PbwElem::monomial(a.clone(), Q::one()), &PbwElem::monomial(c.clone(), Q::one()));
                let r = self.multiply(&PbwElem::monomial(b.clone(), Q::one()), &PbwElem::monomial(e.clone(), Q::one()));
                for (p, u) in &l.terms {
                    for (q, v) in &r.terms {
                        pair_add(&mut out, (p.clone(), q.clone()), s * t * u * v);
                    }
                }
            }
        }
        out
    }

    /// Every monomial of degree ≤ `level`, in basis order.
    pub fn monomials_up_to(&self, level: usize) -> Vec<Mono> {
        self.ensure_basis(level);
        let c = self.caches.lock().unwrap();
        c.basis[..self.filtration_dim(level)].to_vec()
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k as u64).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1))
}

fn binomial_usize(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of length `d` and total `deg`, lexicographically descending.
fn compositions(d: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Mono>) {
    if prefix.len() + 1 == d {
        let mut m = prefix.clone();
        m.push(deg);
        out.push(m);
        return;
    }
    if d == 0 {
        if deg == 0 {
            out.push(vec![]);
        }
        return;
    }
    for e in (0..=deg).rev() {
        prefix.push(e);
        compositions(d, deg - e, prefix, out);
        prefix.pop();
    }
}

impl Ring for PbwRing {
    type Elem = PbwElem;
    type Module = LieModule;

    fn name(&self) -> String {
        format!("U({})", self.lie.name())
    }

    fn zero(&self) -> PbwElem {
        PbwElem::zero()
    }

    fn one(&self) -> PbwElem {
        PbwElem::one(self.d())
    }

    fn add(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        let mut out = a.clone();
        out.add_scaled(&Q::one(), b);
        out
    }

    fn scale(&self, c: &Q, a: &PbwElem) -> PbwElem {
        a.scaled(c)
    }

    fn mul(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        self.multiply(a, b)
    }

    fn is_zero(&self, a: &PbwElem) -> bool {
        a.is_zero()
    }

    fn degree(&self, a: &PbwElem) -> usize {
        a.degree()
    }

    fn filtration_dim(&self, level: usize) -> usize {
        binomial_usize(self.d() + level, self.d())
    }

    fn basis_elem(&self, k: usize) -> PbwElem {
        let mut level = 0;
        while self.filtration_dim(level) <= k {
            level += 1;
        }
        self.ensure_basis(level);
        let m = self.caches.lock().unwrap().basis[k].clone();
        PbwElem::monomial(m, Q::one())
    }

    fn coords(&self, a: &PbwElem, level: usize) -> Option<Vec<Q>> {
        if a.degree() > level {
            return None;
        }
        self.ensure_basis(level);
        let c = self.caches.lock().unwrap();
        let mut out = crate::qlinalg::zero_vec(self.filtration_dim(level));
        for (m, x) in &a.terms {
            out[c.index[m]] = x.clone();
        }
        Some(out)
    }

    fn elem_to_string(&self, a: &PbwElem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms.iter().map(|(m, c)| format!("{}*{}", fmt_q(c), self.mono_to_string(m))).collect::<Vec<_>>().join(" + ")
    }

    fn module_dim(&self, m: &LieModule) -> usize {
        m.dim()
    }

    fn module_side(&self, m: &LieModule) -> Side {
        m.side()
    }

    fn act(&self, m: &LieModule, a: &PbwElem) -> Matrix {
        let mut out = Matrix::zeros(m.dim(), m.dim());
        for (mono, c) in &a.terms {
            out.add_scaled(c, &m.act_monomial(mono));
        }
        out
    }

    fn base_module(&self) -> LieModule {
        LieModule::trivial(&self.lie, Side::Left)
    }

    fn tensor_left(&self, m: &LieModule, n: &LieModule) -> Result<TensorModule<LieModule>> {
        if m.side() != Side::Left || n.side() != Side::Left {
            return Err(Error::Invalid("tensor_left needs two left modules".into()));
        }
        let (dm, dn) = (m.dim(), n.dim());
        let gens = (0..self.d())
            .map(|i| {
                let delta = self.coproduct(&self.generator(i));
                let mut op = Matrix::zeros(dm * dn, dm * dn);
                for ((a, b), c) in &delta {
                    op.add_scaled(c, &m.act_monomial(a).kron(&n.act_monomial(b)));
                }
                op
            })
            .collect();
        let module = LieModule::new(&self.lie, Side::Left, dm * dn, gens)?;
        Ok(TensorModule { module, quotient: QuotientSpace::trivial(dm * dn), left_dim: dm, right_dim: dn })
    }

    fn tensor_right(&self, m: &LieModule, p: &LieModule) -> Result<TensorModule<LieModule>> {
        if m.side() != Side::Left || p.side() != Side::Right {
            return Err(Error::Invalid("tensor_right needs a left and a right module".into()));
        }
        let (dm, dp) = (m.dim(), p.dim());
        // (m⊗p)u = u₋m ⊗ pu₊
        let gens = (0..self.d())
            .map(|i| {
                let t = self.translation(&self.generator(i));
                let mut op = Matrix::zeros(dm * dp, dm * dp);
                for ((plus, minus), c) in &t {
                    op.add_scaled(c, &m.act_monomial(minus).kron(&p.act_monomial(plus)));
                }
                op
            })
            .collect();
        let module = LieModule::new(&self.lie, Side::Right, dm * dp, gens)?;
        Ok(TensorModule { module, quotient: QuotientSpace::trivial(dm * dp), left_dim: dm, right_dim: dp })
    }

    fn left_unit(&self, n: &LieModule, _t: &TensorModule<LieModule>) -> Result<Matrix> {
        Ok(Matrix::identity(n.dim()))
    }

    fn right_unit(&self, m: &LieModule, _t: &TensorModule<LieModule>) -> Result<Matrix> {
        Ok(Matrix::identity(m.dim()))
    }

    fn right_module_unit(&self, p: &LieModule, _t: &TensorModule<LieModule>) -> Result<Matrix> {
        Ok(Matrix::identity(p.dim()))
    }
}

/// Schauenburg-type identities of the translation map on all monomials up to `max_degree`.
pub fn check_translation_ug(ring: &PbwRing, max_degree: usize) -> CheckReport {
    let d = ring.d();
    let one = vec![0u32; d];
    let mut report = CheckReport::new();
    let monos = ring.monomials_up_to(max_degree);
    let mut fails: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for name in ["sch1", "sch2", "sch5", "counit_plus", "delta_counit", "delta_coassociative"] {
        fails.insert(name, vec![]);
    }
    for m in &monos {
        let u = PbwElem::monomial(m.clone(), Q::one());
        let label = ring.mono_to_string(m);
        let tr = ring.translation(&u);
        let mut target = PbwPair::new();
        target.insert((m.clone(), one.clone()), Q::one());

        // u₊₍₁₎ ⊗ u₊₍₂₎u₋ = u ⊗ 1
        let mut s1 = PbwPair::new();
        for ((p, n), c) in &tr {
            for ((a, b), x) in ring.coproduct(&PbwElem::monomial(p.clone(), Q::one())) {
                let bn = ring.multiply(&PbwElem::monomial(b, Q::one()), &PbwElem::monomial(n.clone(), Q::one()));
                for (r, y) in &bn.terms {
                    pair_add(&mut s1, (a.clone(), r.clone()), c * &x * y);
                }
            }
        }
        if s1 != target {
            fails.get_mut("sch1").unwrap().push(label.clone());
        }

        // u₍₁₎₊ ⊗ u₍₁₎₋u₍₂₎ = u ⊗ 1
        let mut s2 = PbwPair::new();
        for ((a, b), x) in ring.coproduct(&u) {
            for ((p, n), c) in ring.translation(&PbwElem::monomial(a, Q::one())) {
                let nb = ring.multiply(&PbwElem::monomial(n, Q::one()), &PbwElem::monomial(b.clone(), Q::one()));
                for (r, y) in &nb.terms {
                    pair_add(&mut s2, (p.clone(), r.clone()), &x * &c * y);
                }
            }
        }
        if s2 != target {
            fails.get_mut("sch2").unwrap().push(label.clone());
        }

        // u₊u₋ = ε(u)
        let mut prod = PbwElem::zero();
        let mut plus_eps = PbwElem::zero();
        for ((p, n), c) in &tr {
            let pe = PbwElem::monomial(p.clone(), Q::one());
            let ne = PbwElem::monomial(n.clone(), Q::one());
            prod.add_scaled(c, &ring.multiply(&pe, &ne));
            plus_eps.add_scaled(&(c * ring.counit(&ne)), &pe);
        }
        if prod != PbwElem::one(d).scaled(&ring.counit(&u)) {
            fails.get_mut("sch5").unwrap().push(label.clone());
        }
        if plus_eps != u {
            fails.get_mut("counit_plus").unwrap().push(label.clone());
        }

        let delta = ring.coproduct(&u);
        let mut left = PbwElem::zero();
        let mut right = PbwElem::zero();
        for ((a, b), c) in &delta {
            left.add_scaled(&(c * ring.counit(&PbwElem::monomial(b.clone(), Q::one()))), &PbwElem::monomial(a.clone(), Q::one()));
            right.add_scaled(&(c * ring.counit(&PbwElem::monomial(a.clone(), Q::one()))), &PbwElem::monomial(b.clone(), Q::one()));
        }
        if left != u || right != u {
            fails.get_mut("delta_counit").unwrap().push(label.clone());
        }

        let mut l3: BTreeMap<(Mono, Mono, Mono), Q> = BTreeMap::new();
        let mut r3: BTreeMap<(Mono, Mono, Mono), Q> = BTreeMap::new();
        for ((a, b), c) in &delta {
            for ((a1, a2), x) in ring.coproduct(&PbwElem::monomial(a.clone(), Q::one())) {
                *l3.entry((a1, a2, b.clone())).or_insert_with(Q::zero) += c * &x;
            }
            for ((b1, b2), x) in ring.coproduct(&PbwElem::monomial(b.clone(), Q::one())) {
                *r3.entry((a.clone(), b1, b2)).or_insert_with(Q::zero) += c * &x;
            }
        }
        l3.retain(|_, v| !v.is_zero());
        r3.retain(|_, v| !v.is_zero());
        if l3 != r3 {
            fails.get_mut("delta_coassociative").unwrap().push(label);
        }
    }
    // Δ(uv) = Δ(u)Δ(v) on pairs of monomials
    let mut mult_fail = vec![];
    for a in &monos {
        for b in &monos {
            if mono_degree(a) + mono_degree(b) > max_degree {
                continue;
            }
            let (ua, ub) = (PbwElem::monomial(a.clone(), Q::one()), PbwElem::monomial(b.clone(), Q::one()));
            if ring.coproduct(&ring.multiply(&ua, &ub)) != ring.pair_multiply(&ring.coproduct(&ua), &ring.coproduct(&ub)) {
                mult_fail.push(format!("{}|{}", ring.mono_to_string(a), ring.mono_to_string(b)));
            }
        }
    }
    for (name, f) in fails {
        report.record(name, f);
    }
    report.record("delta_multiplicative", mult_fail);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::q;

    fn mono(v: &[u32]) -> PbwElem {
        PbwElem::monomial(v.to_vec(), Q::one())
    }

    #[test]
    fn nonabelian_straightening() {
        let r = PbwRing::new(LieAlgebra::nonabelian2());
        let yx = r.multiply(&mono(&[0, 1]), &mono(&[1, 0]));
        let mut expect = mono(&[1, 1]);
        expect.add_term(vec![0, 1], q(-1));
        assert_eq!(yx, expect);
    }

    #[test]
    fn abelian_is_polynomial() {
        let r = PbwRing::new(LieAlgebra::abelian(2));
        assert_eq!(r.multiply(&mono(&[0, 2]), &mono(&[1, 1])), mono(&[1, 3]));
    }

    #[test]
    fn bounded_product_overflows() {
        let r = PbwRing::new(LieAlgebra::sl2());
        let e = mono(&[1, 0, 0]);
        assert!(matches!(r.multiply_bounded(&e, &e, 1), Err(Error::DegreeOverflow { .. })));
        assert!(r.multiply_bounded(&e, &e, 2).is_ok());
    }

    #[test]
    fn coproduct_of_square_is_binomial() {
        let r = PbwRing::new(LieAlgebra::abelian(1));
        let d = r.coproduct(&mono(&[2]));
        assert_eq!(d.len(), 3);
        assert_eq!(d[&(vec![1], vec![1])], q(2));
    }

    #[test]
    fn basis_is_nested_and_indexed() {
        let r = PbwRing::new(LieAlgebra::sl2());
        assert_eq!(r.filtration_dim(2), 10);
        let ms = r.monomials_up_to(2);
        assert_eq!(ms.len(), 10);
        for (k, m) in ms.iter().enumerate() {
            assert_eq!(r.basis_elem(k), PbwElem::monomial(m.clone(), Q::one()));
            let c = r.coords(&r.basis_elem(k), 3).unwrap();
            assert_eq!(c.iter().filter(|x| !x.is_zero()).count(), 1);
        }
    }

    #[test]
    fn translation_identities_hold() {
        for g in [LieAlgebra::abelian(2), LieAlgebra::nonabelian2(), LieAlgebra::sl2()] {
            let r = PbwRing::new(g);
            let rep = check_translation_ug(&r, 3);
            assert!(rep.all_passed(), "{:?}", rep.failures());
        }
    }

    #[test]
    fn right_tensor_action_formula() {
        // (m⊗p)X = m⊗pX − Xm⊗p
        let g = LieAlgebra::sl2();
        let r = PbwRing::new(g.clone());
        let m = LieModule::adjoint(&g);
        let p = LieModule::coadjoint(&g).dual();
        let t = r.tensor_right(&m, &p).unwrap();
        for i in 0..3 {
            let expect = Matrix::identity(3).kron(&p.gens()[i]).sub(&m.gens()[i].kron(&Matrix::identity(3)));
            assert_eq!(t.module.gens()[i], expect);
        }
    }
}
