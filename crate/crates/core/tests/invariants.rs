use std::sync::OnceLock;

use proptest::prelude::*;

use xhopf::bialgebroid::galois_map;
use xhopf::complexes::bar::bar_resolution;
use xhopf::complexes::resolution::FreeResolution;
use xhopf::homology::{cochain_map, ext};
use xhopf::instances::fd::{dual_numbers, enveloping_bialgebroid};
use xhopf::instances::lie::LieAlgebra;
use xhopf::instances::pbw::{PbwElem, PbwRing};
use xhopf::products::{cup_aa, lifted_diagonal, yoneda, Diagonal, UnitSide};
use xhopf::qlinalg::{fmt_q, inverse, kernel, parse_q, q, qr, solve, vec_add, Matrix, Q};
use xhopf::ring::{FdRing, Ring};

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qr(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    // small integer entries give frequent rank drops
    prop::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| Matrix::from_data(rows, cols, v.into_iter().map(q).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_recovers_a_preimage(m in matrix(3, 4), x in prop::collection::vec(small_q(), 4)) {
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        match inverse(&m) {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn rationals_round_trip(x in small_q()) {
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }
}

fn pbw_elem(ring: &PbwRing) -> impl Strategy<Value = PbwElem> {
    let monos = ring.monomials_up_to(2);
    prop::collection::vec(small_q(), monos.len()).prop_map(move |cs| {
        let mut e = PbwElem::zero();
        for (m, c) in monos.iter().zip(cs) {
            e.add_term(m.clone(), c);
        }
        e
    })
}

fn pbw_triples(g: LieAlgebra) -> impl Strategy<Value = (PbwRing, PbwElem, PbwElem, PbwElem)> {
    let ring = PbwRing::new(g);
    (pbw_elem(&ring), pbw_elem(&ring), pbw_elem(&ring), Just(ring)).prop_map(|(a, b, c, r)| (r, a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pbw_product_is_associative(
        (ring, a, b, c) in prop_oneof![pbw_triples(LieAlgebra::sl2()), pbw_triples(LieAlgebra::nonabelian2())]
    ) {
        let left = ring.multiply(&ring.multiply(&a, &b), &c);
        let right = ring.multiply(&a, &ring.multiply(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn pbw_counit_is_multiplicative((ring, a, b, _) in pbw_triples(LieAlgebra::sl2())) {
        prop_assert_eq!(ring.counit(&ring.multiply(&a, &b)), ring.counit(&a) * ring.counit(&b));
    }
}

struct DualNumbers {
    p: FreeResolution<FdRing>,
    diag: Diagonal<Vec<Q>>,
}

fn dual_numbers_fixture() -> &'static DualNumbers {
    static F: OnceLock<DualNumbers> = OnceLock::new();
    F.get_or_init(|| {
        let d = enveloping_bialgebroid(dual_numbers()).unwrap();
        let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
        let (p, _) = bar_resolution(&d, &ring, 4).unwrap();
        let diag = lifted_diagonal(&p, 3).unwrap();
        DualNumbers { p, diag }
    })
}

/// A cocycle in the class `Σ c_i [rep_i]`, moved by the coboundary of `noise`.
fn perturbed(p: &FreeResolution<FdRing>, n: usize, class: &[Q], noise: &[Q]) -> Vec<Q> {
    let a = p.ring().base_module();
    let rep = ext(p, &a, n).unwrap().representative(class);
    if n == 0 {
        return rep;
    }
    let delta = cochain_map(p, &a, n - 1);
    vec_add(&rep, &delta.mul_vec(&noise[..delta.cols()]))
}

fn coords(max: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(small_q(), max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn products_descend_to_classes(
        (m, n) in prop_oneof![Just((1usize, 1usize)), Just((1, 2)), Just((2, 1))],
        x in coords(2), y in coords(2), nx in coords(16), ny in coords(16),
    ) {
        let f = dual_numbers_fixture();
        let p = &f.p;
        let a = p.ring().base_module();
        let (em, en, emn) = (ext(p, &a, m).unwrap(), ext(p, &a, n).unwrap(), ext(p, &a, m + n).unwrap());
        let (x, y) = (&x[..em.dim()], &y[..en.dim()]);
        let phi0 = em.representative(x);
        let psi0 = en.representative(y);
        let phi = perturbed(p, m, x, &nx);
        let psi = perturbed(p, n, y, &ny);
        let reference = emn.decompose(&cup_aa(p, &f.diag, &phi0, m, &psi0, n, UnitSide::Left).unwrap()).unwrap();
        let cup = emn.decompose(&cup_aa(p, &f.diag, &phi, m, &psi, n, UnitSide::Left).unwrap()).unwrap();
        let yon = emn.decompose(&yoneda(p, &phi, m, &a, &psi, n).unwrap()).unwrap();
        prop_assert_eq!(&cup, &reference);
        prop_assert_eq!(&yon, &reference);
    }
}
