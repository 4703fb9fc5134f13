//! Property tests for the algebraic identities the certifiers rely on.
//! Every assertion here is exact; proptest only chooses the inputs.

use jetcert_core::dimension::f4_value;
use jetcert_core::kernel::{exp_bounds, quadratic_argmax_on_interval, Poly, Rat};
use jetcert_core::threefold::{build_profile, enumerate_candidates, Candidate, Mode};
use proptest::collection::vec;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=24).prop_map(|(n, d)| Rat::new(n, d))
}

fn small_poly() -> impl Strategy<Value = Poly> {
    vec(rat(), 0..=5).prop_map(Poly::new)
}

fn quadratic() -> impl Strategy<Value = Poly> {
    vec(rat(), 0..=3).prop_map(Poly::new)
}

fn candidate() -> impl Strategy<Value = Candidate> {
    prop::sample::select(enumerate_candidates(36))
}

/// `t = a + k/16 * (b - a)` for `k` in `0..=16` walks the interval.
fn lattice_point(a: &Rat, b: &Rat, k: i64) -> Rat {
    a + Rat::new(k, 16) * (b - a)
}

proptest! {
    #[test]
    fn affine_substitution_commutes_with_evaluation(
        f in small_poly(), a in rat(), b in rat(), t in rat()
    ) {
        let direct = f.eval(&(&a * &t + &b));
        let composed = f.compose_affine(&a, &b).eval(&t);
        prop_assert_eq!(direct, composed);
    }

    #[test]
    fn integration_is_linear(
        f in small_poly(), g in small_poly(), lo in rat(),
        num in 1i64..=30, den in 1i64..=8
    ) {
        let hi = &lo + Rat::new(num, den);
        let joint = (&f + &g).integrate_between(&lo, &hi).unwrap();
        let split = f.integrate_between(&lo, &hi).unwrap()
            + g.integrate_between(&lo, &hi).unwrap();
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn integrals_add_over_adjacent_intervals(
        f in small_poly(), lo in rat(), k1 in 0i64..=16, k2 in 0i64..=16
    ) {
        let hi = &lo + Rat::from_int(2);
        let (k1, k2) = (k1.min(k2), k1.max(k2));
        let m1 = lattice_point(&lo, &hi, k1);
        let m2 = lattice_point(&lo, &hi, k2);
        let total = f.integrate_between(&lo, &hi).unwrap();
        let parts = f.integrate_between(&lo, &m1).unwrap()
            + f.integrate_between(&m1, &m2).unwrap()
            + f.integrate_between(&m2, &hi).unwrap();
        prop_assert_eq!(total, parts);
    }

    #[test]
    fn argmax_dominates_every_lattice_point(
        f in quadratic(), a in rat(), width_num in 1i64..=20, width_den in 1i64..=6
    ) {
        let b = &a + Rat::new(width_num, width_den);
        let (arg, max) = quadratic_argmax_on_interval(&f, &a, &b).unwrap();
        prop_assert_eq!(f.eval(&arg), max.clone());
        prop_assert!(arg >= a && arg <= b);
        for k in 0..=16 {
            let t = lattice_point(&a, &b, k);
            prop_assert!(f.eval(&t) <= max);
        }
    }

    #[test]
    fn exp_enclosures_bracket_the_true_value(
        num in -12i64..=12, den in 12i64..=20, terms in 1u32..=12
    ) {
        // |x| <= 1 by construction
        let x = Rat::new(num, den);
        let bounds = exp_bounds(&x, terms).unwrap();
        prop_assert!(bounds.lower <= bounds.upper);
        prop_assert!(bounds.lower.is_positive());
        // e^x * e^(-x) = 1 pins the enclosure from both sides
        let mirror = exp_bounds(&-&x, terms).unwrap();
        prop_assert!(&bounds.lower * &mirror.lower <= Rat::one());
        prop_assert!(&bounds.upper * &mirror.upper >= Rat::one());
        // one more term never widens the enclosure
        let finer = exp_bounds(&x, terms + 1).unwrap();
        prop_assert!(finer.lower >= bounds.lower);
        prop_assert!(finer.upper <= bounds.upper);
    }

    #[test]
    fn jet_mass_is_monotone_and_homogeneous(
        alpha_num in 1i64..=40, alpha_den in 1i64..=12,
        k1 in 0i64..=16, k2 in 0i64..=16,
        d in 1u32..=8, lam_num in 1i64..=9, lam_den in 1i64..=9
    ) {
        let alpha = Rat::new(alpha_num, alpha_den);
        let (k1, k2) = (k1.min(k2), k1.max(k2));
        let eps1 = &alpha * Rat::new(k1, 16);
        let eps2 = &alpha * Rat::new(k2, 16);
        let f1 = f4_value(d, &alpha, &eps1).unwrap();
        let f2 = f4_value(d, &alpha, &eps2).unwrap();
        prop_assert!(f1 <= f2);
        if k1 < k2 {
            prop_assert!(f1 < f2);
        }
        let lam = Rat::new(lam_num, lam_den);
        let scaled = f4_value(d, &(&lam * &alpha), &(&lam * &eps1)).unwrap();
        prop_assert_eq!(scaled, lam.pow(d) * f1);
    }

    #[test]
    fn profile_mass_splits_at_any_interior_point(c in candidate(), k in 0i64..=16) {
        let g = build_profile(&c, Mode::SmallQ).unwrap();
        let (lo, hi) = g.domain();
        let (lo, hi) = (lo.clone(), hi.clone());
        let mid = lattice_point(&lo, &hi, k);
        let split = g.integrate_between(&lo, &mid).unwrap()
            + g.integrate_between(&mid, &hi).unwrap();
        prop_assert_eq!(split, g.total_integral());
    }

    #[test]
    fn doubling_a_profile_doubles_its_mass(c in candidate(), k in 0i64..=16) {
        let g = build_profile(&c, Mode::SmallQ).unwrap();
        let doubled = g.try_add(&g).unwrap();
        prop_assert_eq!(doubled.total_integral(), Rat::from_int(2) * g.total_integral());
        let (lo, hi) = g.domain();
        let t = lattice_point(lo, hi, k);
        prop_assert_eq!(
            doubled.eval(&t).unwrap(),
            Rat::from_int(2) * g.eval(&t).unwrap()
        );
    }

    #[test]
    fn rationals_round_trip_through_serde_and_display(r in rat()) {
        let json = serde_json::to_string(&r).unwrap();
        let back: Rat = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &r);
        let parsed: Rat = r.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &r);
    }

    #[test]
    fn polynomials_round_trip_through_serde(f in small_poly()) {
        let json = serde_json::to_string(&f).unwrap();
        let back: Poly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn profiles_round_trip_through_serde(c in candidate()) {
        let g = build_profile(&c, Mode::SmallQ).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        let back: jetcert_core::PiecewiseDensity = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, g);
    }
}
