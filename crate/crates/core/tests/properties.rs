//! Property tests over seeds and catalog members.

use std::sync::LazyLock;

use hyperpolar_core::actions::examples::{acceptance_catalog, hermann, CatalogAction};
use hyperpolar_core::actions::{expand_factor, group_lift, partial_isotropy, projection_action};
use hyperpolar_core::analyze::{
    check_hyperpolar, cohomogeneity, dim_bound_holds, verify_decomposition, HyperpolarCheck,
};
use hyperpolar_core::catalog::{build_classical, Catalog, Family, SymmetricPair, Triality};
use hyperpolar_core::liealg::{bracket, matrix_exp, AlgebraSubspace, Mat, Sampler, Tolerance};
use hyperpolar_core::spaces::{ProductSpace, SpaceFactor};
use proptest::prelude::*;

static CATALOG: LazyLock<Vec<CatalogAction>> =
    LazyLock::new(|| acceptance_catalog(&mut Catalog::new(Tolerance::default())).expect("catalog"));

fn tol() -> Tolerance {
    Tolerance::default()
}

fn family() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (3usize..8).prop_map(|n| (Family::So, n)),
        (2usize..5).prop_map(|n| (Family::Su, n)),
        (1usize..3).prop_map(|n| (Family::Sp, n)),
        (1usize..4).prop_map(|n| (Family::U, n)),
    ]
}

fn pair() -> impl Strategy<Value = SymmetricPair> {
    prop_oneof![
        (2usize..5).prop_map(|n| SymmetricPair::AI { n }),
        (2usize..4).prop_map(|n| SymmetricPair::AII { n }),
        (1usize..3, 1usize..3).prop_map(|(p, q)| SymmetricPair::AIII { p, q }),
        (1usize..5, 1usize..4).prop_filter("p + q >= 3", |(p, q)| p + q >= 3).prop_map(|(p, q)| SymmetricPair::BDI { p, q }),
        (2usize..4).prop_map(|n| SymmetricPair::DIII { n }),
        (1usize..3).prop_map(|n| SymmetricPair::CI { n }),
        (1usize..3, 1usize..2).prop_map(|(p, q)| SymmetricPair::CII { p, q }),
    ]
}

fn verdict(a: &CatalogAction, seed: u64) -> HyperpolarCheck {
    check_hyperpolar(&a.action, seed, &tol()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn classical_algebras_are_closed_invariant_and_jacobi((f, n) in family(), seed in any::<u64>()) {
        let g = build_classical(f, n).unwrap();
        let mut rng = Sampler::new(seed);
        prop_assert!(g.closure_residual(&mut rng) < 1e-8);
        prop_assert!(g.invariance_residual(&mut rng, 20) < 1e-8);
        prop_assert!(g.jacobi_residual(&mut rng, 20) < 1e-8);
    }

    #[test]
    fn orthocomplement_is_an_involution((f, n) in family(), k in 1usize..6, seed in any::<u64>()) {
        let g = std::sync::Arc::new(build_classical(f, n).unwrap());
        let mut rng = Sampler::new(seed);
        let elems: Vec<Mat> = (0..k).map(|_| g.random_element(&mut rng)).collect();
        let s = AlgebraSubspace::span(&g, &elems, &tol()).unwrap();
        let back = s.orthocomplement(&tol()).orthocomplement(&tol());
        prop_assert!(s.same_span(&back, &tol()));
        prop_assert_eq!(s.dim() + s.orthocomplement(&tol()).dim(), g.dim());
    }

    #[test]
    fn exp_of_skew_is_orthogonal_with_inverse_exp_minus((f, n) in family(), scale in 0.01f64..20.0, seed in any::<u64>()) {
        let g = build_classical(f, n).unwrap();
        let x = g.random_element(&mut Sampler::new(seed)).scale(scale);
        let e = matrix_exp(&x).unwrap();
        let einv = matrix_exp(&x.scale(-1.0)).unwrap();
        let id = Mat::identity(x.size());
        prop_assert!((&(&e * &einv) - &id).max_abs() < 1e-8);
        prop_assert!((&(&e * &e.transpose()) - &id).max_abs() < 1e-8);
    }

    #[test]
    fn involutions_square_to_identity_and_split_cartan(p in pair(), seed in any::<u64>()) {
        let t = tol();
        let mut cat = Catalog::new(t);
        let inv = cat.involution(p).unwrap();
        prop_assert!(inv.map().involution_residual() < 1e-8);
        prop_assert!(inv.map().automorphism_residual() < 1e-8);
        prop_assert_eq!(inv.k().dim(), p.fixed_dim());
        prop_assert_eq!(inv.p().dim(), p.space_dim());
        let mut rng = Sampler::new(seed);
        let k = inv.k().element(&rng.normal_vec(inv.k().dim()));
        let x = inv.p().element(&rng.normal_vec(inv.p().dim()));
        let y = inv.p().element(&rng.normal_vec(inv.p().dim()));
        prop_assert!(inv.p().contains(&bracket(&k, &x).unwrap(), &t) || bracket(&k, &x).unwrap().max_abs() < 1e-12);
        let xy = bracket(&x, &y).unwrap();
        prop_assert!(inv.k().contains(&xy, &t) || xy.max_abs() < 1e-12);
    }

    #[test]
    fn triality_images_are_linear_and_bracket_preserving(seed in any::<u64>()) {
        static T: LazyLock<Triality> = LazyLock::new(|| Triality::new(&Tolerance::default()));
        let mut rng = Sampler::new(seed);
        let a = T.so8().random_element(&mut rng);
        let b = T.so8().random_element(&mut rng);
        let (ba, ca) = T.images(&a).unwrap();
        let (bb, cb) = T.images(&b).unwrap();
        let (bs, cs) = T.images(&(&a + &b.scale(2.0))).unwrap();
        prop_assert!((&bs - &(&ba + &bb.scale(2.0))).max_abs() < 1e-9);
        prop_assert!((&cs - &(&ca + &cb.scale(2.0))).max_abs() < 1e-9);
        let (bk, ck) = T.images(&bracket(&a, &b).unwrap()).unwrap();
        prop_assert!((&bk - &bracket(&ba, &bb).unwrap()).max_abs() < 1e-8);
        prop_assert!((&ck - &bracket(&ca, &cb).unwrap()).max_abs() < 1e-8);
    }

    #[test]
    fn symmetric_spaces_are_homogeneous_and_rank_is_stable(p in pair(), seed in any::<u64>()) {
        let t = tol();
        let mut cat = Catalog::new(t);
        let inv = cat.involution(p).unwrap();
        let space = ProductSpace::new(vec![SpaceFactor::type_i(inv)]).unwrap();
        let mut rng = Sampler::new(seed);
        let pt = space.sample_point(&mut rng).unwrap();
        let full = AlgebraSubspace::full(space.ambient());
        let om = space.orbit_map_at(&pt).unwrap();
        let cols = om.image_columns(&full);
        prop_assert_eq!(hyperpolar_core::liealg::linear::rank(&cols, &t), space.dim());
        let ranks: Vec<usize> = (0..5).map(|k| space.rank(&mut Sampler::new(seed ^ k), &t)).collect();
        prop_assert!(ranks.iter().all(|&r| r == p.space_rank()), "{:?} vs {}", ranks, p.space_rank());
    }

    #[test]
    fn group_factor_orbit_map_of_full_algebra_is_onto((f, n) in family(), seed in any::<u64>()) {
        let t = tol();
        let g = std::sync::Arc::new(build_classical(f, n).unwrap());
        let space = ProductSpace::new(vec![SpaceFactor::type_ii(g)]).unwrap();
        let pt = space.sample_point(&mut Sampler::new(seed)).unwrap();
        let cols = space.orbit_map_at(&pt).unwrap().image_columns(&AlgebraSubspace::full(space.ambient()));
        prop_assert_eq!(hyperpolar_core::liealg::linear::rank(&cols, &t), space.dim());
    }

    #[test]
    fn hermann_actions_are_hyperpolar(tau in pair(), sigma in pair(), seed in any::<u64>()) {
        prop_assume!(tau.ambient() == sigma.ambient());
        let mut cat = Catalog::new(tol());
        let a = hermann(&mut cat, tau, sigma).unwrap();
        let hp = check_hyperpolar(&a, seed, &tol()).unwrap();
        prop_assert!(hp.verdict.is_yes(), "{} on {}: residual {:e}", tau.label(), sigma.label(), hp.flatness_residual);
        prop_assert!(dim_bound_holds(&a, seed, &tol()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn expansion_preserves_cohomogeneity_and_hyperpolarity(idx in 0usize..64, factor in 0usize..8, seed in any::<u64>()) {
        let a = &CATALOG[idx % CATALOG.len()];
        let i = factor % a.action.space().factor_count();
        let before = verdict(a, seed);
        let e = expand_factor(&a.action, i, &tol()).unwrap();
        let after = check_hyperpolar(&e, seed, &tol()).unwrap();
        prop_assert_eq!(before.cohomogeneity, after.cohomogeneity, "{} factor {}", a.id, i);
        prop_assert_eq!(before.verdict, after.verdict, "{} factor {}", a.id, i);
    }

    #[test]
    fn group_lift_preserves_verdicts(idx in 0usize..64, seed in any::<u64>()) {
        let a = &CATALOG[idx % CATALOG.len()];
        let lift = group_lift(&a.action, &tol()).unwrap();
        let (x, y) = (verdict(a, seed), check_hyperpolar(&lift, seed, &tol()).unwrap());
        prop_assert_eq!((x.cohomogeneity, x.verdict), (y.cohomogeneity, y.verdict), "{}", a.id);
    }

    #[test]
    fn verdicts_are_seed_independent(idx in 0usize..64, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = &CATALOG[idx % CATALOG.len()];
        let (x, y) = (verdict(a, s1), verdict(a, s2));
        prop_assert_eq!((x.cohomogeneity, x.verdict), (y.cohomogeneity, y.verdict), "{}", a.id);
        if x.verdict.is_yes() {
            prop_assert!(dim_bound_holds(&a.action, s1, &tol()));
        }
        if !dim_bound_holds(&a.action, s1, &tol()) {
            prop_assert!(!x.verdict.is_yes());
        }
    }

    #[test]
    fn projections_and_isotropy_behave(idx in 0usize..64, seed in any::<u64>()) {
        let a = &CATALOG[idx % CATALOG.len()];
        let t = tol();
        let space = a.action.space();
        let first = vec![0usize];
        let pr = projection_action(&a.action, &first, &t).unwrap();
        // the projected orbit contains the projected tangents
        let mut rng = Sampler::new(seed);
        let pt = space.sample_point(&mut rng).unwrap();
        let sub_pt = pt.restrict(&first);
        let full_rank = hyperpolar_core::liealg::linear::rank(&a.action.orbit_columns(&pt).unwrap(), &t);
        let pr_rank = hyperpolar_core::liealg::linear::rank(&pr.orbit_columns(&sub_pt).unwrap(), &t);
        let rest = space.dim() - space.factor(0).dim();
        prop_assert!(pr_rank + rest >= full_rank);
        let iso = partial_isotropy(&a.action, &first, &sub_pt, &t).unwrap();
        prop_assert!(iso.is_subalgebra(&t));
        prop_assert_eq!(iso.dim() + pr_rank, a.action.dim_h());
        prop_assert!(cohomogeneity(&pr, seed, &t).unwrap() <= space.factor(0).dim());
    }

    #[test]
    fn decomposition_verdict_is_symmetric(row in 0usize..6, seed in any::<u64>()) {
        const ROWS: [(&str, &str); 6] = [
            ("g2_in_so7", "so6_in_so7"),
            ("g2_in_so7", "so5xso2_in_so7"),
            ("spin7_in_so8", "so7_in_so8"),
            ("sp2_in_su4", "s(u3xu1)_in_su4"),
            ("so5_in_so6", "u3_in_so6"),
            ("g2_in_so7", "so5_in_so6"),
        ];
        let (l, r) = ROWS[row];
        let mut cat = Catalog::new(tol());
        let (a, b) = (cat.embedding(l).unwrap(), cat.embedding(r).unwrap());
        match (verify_decomposition(&a, &b, seed, &tol()), verify_decomposition(&b, &a, seed, &tol())) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x.holds, y.holds),
            (x, y) => prop_assert_eq!(x.is_err(), y.is_err()),
        }
    }
}
