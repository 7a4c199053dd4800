use num::Zero;
use xhopf::algebra::{ModuleRep, Side};
use xhopf::bialgebroid::galois_map;
use xhopf::complexes::bar::bar_resolution;
use xhopf::duality::derived::{check_delta_chain_map, check_double_dual};
use xhopf::duality::underived::{check_dual_bases, greedy_generators, omega0_independent};
use xhopf::duality::*;
use xhopf::homology::{ext_dims, tor_dims};
use xhopf::instances::ce::ce_resolution;
use xhopf::instances::fd::*;
use xhopf::instances::lie::{LieAlgebra, LieModule};
use xhopf::instances::pbw::PbwRing;
use xhopf::oracle::{ce_cohomology_dims, ce_homology_dims};
use xhopf::products::ce_diagonal;
use xhopf::qlinalg::{q, qr, Matrix, Q};
use xhopf::ring::{FdRing, Ring};
use xhopf::Error;

fn qs3() -> FdRing {
    FdRing::from_hopf(galois_map(group_bialgebra(&FiniteGroup::s3())).unwrap())
}

#[test]
fn qs3_trivial_dual_basis_is_the_averaging_element() {
    let ring = qs3();
    let a = ring.base_module();
    let db = dual_bases(&ring, &a).unwrap();
    assert_eq!(db.generators, vec![vec![q(1)]]);
    // e¹(1) = (1/6) Σ g
    assert_eq!(db.duals[0], Matrix::from_data(6, 1, vec![qr(1, 6); 6]));
    assert!(check_dual_bases(&ring, &a, &db).all_passed());
    assert_eq!(db.hom.dim(), 1);
    assert_eq!(db.tensor.dim(), 1);
}

#[test]
fn qs3_omega0_is_independent_of_generators() {
    let ring = qs3();
    let a = ring.base_module();
    let first = greedy_generators(&ring, &a);
    let second = vec![vec![q(2)], vec![q(-3)], vec![qr(1, 2)]];
    assert!(omega0_independent(&ring, &a, first, second).unwrap());
}

#[test]
fn qs3_delta_and_cap_are_bijective() {
    let ring = qs3();
    let u = ring.algebra().clone();
    let a = ring.base_module();
    let db = dual_bases(&ring, &a).unwrap();
    let g = FiniteGroup::s3();
    let (p, _) = bar_resolution(&group_bialgebra(&g), &ring, 2).unwrap();
    let lefts: Vec<ModuleRep> = vec![a.clone(), character_module(&u, Side::Left, &s3_sign()), s3_standard(&u, Side::Left)];
    let expected_h0 = [1, 0, 0];
    for (m, h0) in lefts.iter().zip(expected_h0) {
        let right = group_right_from_left(&g, m);
        let (delta, inv) = delta_underived(&right, &a, &db).unwrap();
        assert!(delta.bijective && inv.left && inv.right);
        let cap = cap_omega_underived(m, &a, &db).unwrap();
        assert!(cap.bijective);
        assert_eq!(cap.source_dim, h0);
        assert_eq!(ext_dims(&p, m, 0).unwrap(), vec![h0]);
    }
}

#[test]
fn sweedler_base_is_not_projective() {
    let d = sweedler();
    let ring = FdRing::from_hopf(galois_map(d).unwrap());
    assert!(matches!(dual_bases(&ring, &ring.base_module()), Err(Error::NotProjective(_))));
}

/// `M ⊗ k_χ` as a right module, `(m ⊗ 1)·x = −x m + χ(x) m`, written out by hand.
fn twisted_right(g: &LieAlgebra, m: &LieModule, chi: &[Q]) -> LieModule {
    let gens = m
        .gens()
        .iter()
        .zip(chi)
        .map(|(x, c)| x.scale(&q(-1)).add(&Matrix::identity(m.dim()).scale(c)))
        .collect();
    LieModule::new(g, Side::Right, m.dim(), gens).unwrap()
}

fn lie_cases() -> Vec<LieAlgebra> {
    vec![LieAlgebra::abelian(1), LieAlgebra::abelian(2), LieAlgebra::nonabelian2()]
}

#[test]
fn ce_duality_data() {
    for g in lie_cases() {
        let ring = PbwRing::new(g.clone());
        let p = ce_resolution(&ring, &[0, 1, 2]).unwrap();
        let levels = [0, 1, 2, 3];
        let dd = detect_duality(&p, &levels).unwrap();
        let d = g.dim();
        assert_eq!(dd.d, d);
        let mut ext_u = vec![0; d + 1];
        ext_u[d] = 1;
        assert_eq!(dd.ext_u, ext_u);
        assert!(check_delta_chain_map(&p, &dd, &LieModule::trivial(&g, Side::Right)).all_passed());
        assert!(check_delta_chain_map(&p, &dd, &LieModule::adjoint(&g).dual()).all_passed());
        assert!(check_double_dual(&p, &dd, &levels).unwrap().all_passed());
        let tor = xhopf::homology::tor(&dd.astar, &p, d).unwrap();
        assert!(tor.homology.is_cycle(&dd.omega) && !tor.is_zero_class(&dd.omega));
    }
}

#[test]
fn nonabelian_astar_is_twisted_by_the_adjoint_trace() {
    let g = LieAlgebra::nonabelian2();
    let p = ce_resolution(&PbwRing::new(g.clone()), &[0, 1, 2]).unwrap();
    let dd = detect_duality(&p, &[0, 1, 2, 3]).unwrap();
    let tr = g.ad_trace();
    assert!(!tr.iter().all(Q::is_zero));
    // d(g_xy) = (x − 1) g_y − y g_x forces χ(x) = 1, χ(y) = 0
    assert_eq!(dd.character, vec![q(1), q(0)]);
    assert_eq!(dd.character, tr);
    for h in [LieAlgebra::abelian(2), LieAlgebra::sl2()] {
        let p = ce_resolution(&PbwRing::new(h.clone()), &[0, 1]).unwrap();
        let dd = detect_duality(&p, &[0, 1, 2]).unwrap();
        assert!(dd.character.iter().all(Q::is_zero));
    }
}

#[test]
fn cap_with_omega_is_an_isomorphism() {
    for g in lie_cases() {
        let ring = PbwRing::new(g.clone());
        let p = ce_resolution(&ring, &[0, 1, 2]).unwrap();
        let dd = detect_duality(&p, &[0, 1, 2, 3]).unwrap();
        let diag = ce_diagonal(&p);
        let d = g.dim();
        let mut mods = vec![LieModule::trivial(&g, Side::Left), LieModule::adjoint(&g), LieModule::coadjoint(&g)];
        if g.name() == "nonabelian2" {
            mods.push(LieModule::character(&g, Side::Left, &[q(1), q(0)]).unwrap());
        }
        for m in &mods {
            let report = duality_report(&p, &diag, &dd, m).unwrap();
            let twisted = twisted_right(&g, m, &dd.character);
            let ext_oracle = ce_cohomology_dims(&g, m, d).unwrap();
            let mut tor_oracle = ce_homology_dims(&g, &twisted, d).unwrap();
            tor_oracle.reverse();
            assert_eq!(ext_oracle, tor_oracle, "{} dims", g.name());
            for row in &report.table {
                assert_eq!(row.ext_dim, ext_oracle[row.m]);
                assert_eq!(row.tor_dim, tor_oracle[row.m]);
                assert!(row.bijective, "{} m={}", g.name(), row.m);
            }
        }
    }
}

#[test]
fn nonabelian_trivial_profile() {
    let g = LieAlgebra::nonabelian2();
    let ring = PbwRing::new(g.clone());
    let p = ce_resolution(&ring, &[0, 1, 2]).unwrap();
    let dd = detect_duality(&p, &[0, 1, 2, 3]).unwrap();
    let k = LieModule::trivial(&g, Side::Left);
    let t = ring.tensor_right(&k, &dd.astar).unwrap();
    assert_eq!(ext_dims(&p, &k, 2).unwrap(), vec![1, 1, 0]);
    let mut tors = tor_dims(&t.module, &p, 2).unwrap();
    tors.reverse();
    assert_eq!(tors, vec![1, 1, 0]);
}
