//! Randomized invariants over exact rationals and floats.

use ncqm::coadjoint::{classify, coadjoint_action, orbit_representative, polynomial_invariants, DualVector};
use ncqm::gauge::{is_ncqm_preserving, random_preserving, tables_agree, transform_generators};
use ncqm::group::{compose, inverse, to_matrix, ExtensionParams, GroupElement};
use ncqm::hermite::deform::{deformed_gram, nc_gram_target};
use ncqm::hermite::{
    deform_matrix_polar, deformed_hermite, dual_deformed_hermite, gauss_inner, r_bounds, BiPoly, OscillatorParams,
};
use ncqm::scalar::{rat, Rational, C64};
use ncqm::weyl::{commutator_table, gauge_generators, GaugeCase, GaugeParams};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn params() -> impl Strategy<Value = ExtensionParams<Rational>> {
    (positive(), positive(), positive()).prop_map(|(a, b, g)| ExtensionParams::new(a, b, g).unwrap())
}

fn element() -> impl Strategy<Value = GroupElement<Rational>> {
    proptest::array::uniform7(rational()).prop_map(GroupElement::from_coords)
}

fn dual() -> impl Strategy<Value = DualVector<Rational>> {
    proptest::array::uniform7(rational()).prop_map(DualVector::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_two_sided(p in params(), g in element()) {
        let e = GroupElement::identity();
        prop_assert_eq!(compose(&g, &inverse(&g, &p), &p), e.clone());
        prop_assert_eq!(compose(&inverse(&g, &p), &g, &p), e);
    }

    #[test]
    fn matrix_form_is_a_homomorphism(p in params(), a in element(), b in element()) {
        prop_assert_eq!(to_matrix(&compose(&a, &b, &p), &p), &to_matrix(&a, &p) * &to_matrix(&b, &p));
    }

    #[test]
    fn coadjoint_action_is_a_left_action(p in params(), a in element(), b in element(), f in dual()) {
        let lhs = coadjoint_action(&compose(&a, &b, &p), &f, &p);
        let rhs = coadjoint_action(&a, &coadjoint_action(&b, &f, &p), &p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orbit_data_is_invariant(p in params(), g in element(), f in dual()) {
        let k = coadjoint_action(&g, &f, &p);
        prop_assert_eq!(polynomial_invariants(&k), polynomial_invariants(&f));
        prop_assert_eq!(classify(&k, &p), classify(&f, &p));
    }

    #[test]
    fn representative_lies_on_its_orbit(p in params(), f in dual()) {
        let c = classify(&f, &p);
        prop_assert_eq!(classify(&orbit_representative(&c, &p), &p), c);
    }

    #[test]
    fn random_members_preserve_the_table(h in positive(), t in rational(), b in rational(), seed in any::<u64>()) {
        prop_assume!(h.clone() * h.clone() != b.clone() * t.clone());
        let gp = GaugeParams::new(h, t, b).unwrap();
        let m = random_preserving(&gp, seed).unwrap();
        prop_assert!(is_ncqm_preserving(&m, &gp).unwrap());
        let l = gauge_generators(&GaugeCase::Landau(gp)).unwrap();
        let out = transform_generators(&m, &l).unwrap();
        prop_assert!(tables_agree(&out, &l, 0.0).unwrap());
        prop_assert_eq!(commutator_table(&out).unwrap(), commutator_table(&l).unwrap());
    }

    #[test]
    fn polar_matrices_meet_the_gram_target(x in 0.05f64..0.99, u in 0.0f64..1.0, kappa in -3.0f64..3.0, delta in -3.0f64..3.0) {
        let osc = OscillatorParams::constrained(1.0, x, 1.0, 1.0).unwrap();
        let (lo, hi) = r_bounds(&osc).unwrap();
        let g = deform_matrix_polar(lo + u * (hi - lo), kappa, delta, &osc).unwrap();
        let gram = deformed_gram(&g).unwrap();
        let target = nc_gram_target(&osc);
        for i in 0..2 {
            for j in 0..2 {
                prop_assert!((gram[i][j] - target[i][j]).norm() < 1e-9, "{:?} vs {:?}", gram, target);
            }
        }
    }

    #[test]
    fn deformed_families_are_biorthogonal(
        x in 0.05f64..0.99, u in 0.0f64..1.0, kappa in -3.0f64..3.0, delta in -3.0f64..3.0,
        n in 0u32..3, k in 0u32..3, m in 0u32..3, l in 0u32..3,
    ) {
        let osc = OscillatorParams::constrained(1.0, x, 1.0, 1.0).unwrap();
        let (lo, hi) = r_bounds(&osc).unwrap();
        let g = deform_matrix_polar(lo + u * (hi - lo), kappa, delta, &osc).unwrap();
        let d: BiPoly<C64> = dual_deformed_hermite(&g, n, k).unwrap();
        let h = deformed_hermite(&g, m, l).unwrap();
        let want = if (n, k) == (m, l) { 1.0 } else { 0.0 };
        prop_assert!((gauss_inner(&d, &h) - C64::new(want, 0.0)).norm() < 1e-9);
    }
}
