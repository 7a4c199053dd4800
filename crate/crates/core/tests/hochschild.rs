use std::sync::Arc;

use xhopf::bialgebroid::galois_map;
use xhopf::complexes::bar::bar_resolution;
use xhopf::homology::{ext_dims, resolution_independence, tor_dims};
use xhopf::instances::fd::*;
use xhopf::oracle::{hochschild_cohomology_dims, hochschild_homology_dims};
use xhopf::ring::{FdRing, Ring};

fn compare(a: xhopf::algebra::FinDimAlgebra, max: usize) {
    let d = enveloping_bialgebroid(a.clone()).unwrap();
    let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
    let (p, _) = bar_resolution(&d, &ring, max + 1).unwrap();
    let right = enveloping_right_base(&a, &ring.algebra().clone()).unwrap();
    assert_eq!(ext_dims(&p, &ring.base_module(), max).unwrap(), hochschild_cohomology_dims(&a, max));
    assert_eq!(tor_dims(&right, &p, max).unwrap(), hochschild_homology_dims(&a, max));
}

#[test]
fn dual_numbers_match_oracle() {
    compare(dual_numbers(), 3);
}

#[test]
fn separable_and_triangular_match_oracle() {
    compare(q_times_q(), 2);
    compare(upper_triangular(), 2);
}

#[test]
fn bar_resolutions_of_different_depth_compare() {
    let d = enveloping_bialgebroid(dual_numbers()).unwrap();
    let ring = FdRing::from_hopf(galois_map(d.clone()).unwrap());
    let (p, _) = bar_resolution(&d, &ring, 3).unwrap();
    let (q, _) = bar_resolution(&d, &ring, 4).unwrap();
    for n in 0..=2 {
        let c = resolution_independence(&p, &q, &ring.base_module(), n).unwrap();
        let back = resolution_independence(&q, &p, &ring.base_module(), n).unwrap();
        assert!(c.matrix.mul(&back.matrix).is_identity());
    }
    let _ = Arc::strong_count(ring.algebra());
}
