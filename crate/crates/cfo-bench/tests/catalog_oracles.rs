//! Catalog ground truth: every entry with a known optimum evaluates at the
//! stated location to the stated value, plus the structural properties the
//! evaluator must satisfy.

use cfo_bench::{
    catalog, default_bounds, evaluate, evaluate_sgo_with_offsets, known_optimum, BenchmarkId,
    EvalError,
};
use cfo_core::SENTINEL_FITNESS;

fn assert_close(id: BenchmarkId, got: f64, want: f64) {
    let ok = if want == 0.0 {
        got.abs() <= 1e-9
    } else {
        (got - want).abs() <= 1e-6 * want.abs()
    };
    assert!(
        ok,
        "{id}: evaluate at known location gave {got}, cataloged {want}"
    );
}

#[test]
fn every_known_optimum_is_reproduced_at_its_location() {
    let mut checked = 0;
    for e in catalog() {
        if let Some((value, location)) = known_optimum(e.id) {
            let got = evaluate(e.id, &location, None).unwrap();
            assert_close(e.id, got, value);
            checked += 1;
        }
    }
    assert!(checked >= 25, "only {checked} entries carried an optimum");
}

#[test]
fn known_optimum_lookup_contract() {
    use BenchmarkId::*;
    let (value, location) = known_optimum(F20).unwrap();
    assert!((value - 3.32).abs() < 5e-3);
    assert_eq!(location, vec![0.201, 0.150, 0.477, 0.275, 0.311, 0.657]);
    let (value, location) = known_optimum(F1).unwrap();
    assert_eq!(value, 0.0);
    assert_eq!(location, vec![0.0; 30]);
    // the source flags this one as erroneous, so it carries no optimum
    assert!(known_optimum(RosenbrockF6).is_none());
}

#[test]
// the stated F17 location happens to round near pi; it is a catalog literal
#[allow(clippy::approx_constant)]
fn spot_values_from_the_source_comments() {
    use BenchmarkId::*;
    // exact statements
    assert_eq!(evaluate(Sphere, &[0.0, 0.0], None).unwrap(), 0.0);
    assert_eq!(evaluate(F18, &[0.0, -1.0], None).unwrap(), -3.0);
    assert_eq!(evaluate(Tripod, &[0.0, -50.0], None).unwrap(), 0.0);
    assert_eq!(evaluate(Himmelblau, &[3.0, 2.0], None).unwrap(), 200.0);
    // rounded statements: the catalog pins the full-precision value, these
    // tie it back to the stated figures
    let f8 = evaluate(F8, &[420.8687; 30], None).unwrap();
    assert!((f8 - 12_569.5).abs() < 0.1, "F8 gave {f8}");
    let f19 = evaluate(F19, &[0.114, 0.556, 0.852], None).unwrap();
    assert!((f19 - 3.86).abs() < 5e-3);
    let f20 = evaluate(F20, &[0.201, 0.150, 0.477, 0.275, 0.311, 0.657], None).unwrap();
    assert!((f20 - 3.32).abs() < 5e-3);
    let f17 = evaluate(F17, &[-3.142, 12.275], None).unwrap();
    assert!((f17 - -0.398).abs() < 5e-4);
    let f15 = evaluate(F15, &[0.1928, 0.1908, 0.1231, 0.1358], None).unwrap();
    assert!((f15 - -0.0003075).abs() < 5e-8);
    let hnlo = evaluate(
        HimmelblauNlo,
        &[78.0, 33.0, 27.0709971052, 45.0, 44.9692425501],
        None,
    )
    .unwrap();
    assert!((hnlo - 31025.5562644972).abs() < 1e-4);
}

#[test]
fn shifted_entries_peak_at_their_shifted_locations() {
    use BenchmarkId::*;
    // GP carries offsets (20, -10): the zero-offset optimum location moves
    assert_eq!(evaluate(Gp, &[20.0, -11.0], None).unwrap(), -3.0);
    assert!(evaluate(Gp, &[0.0, -1.0], None).unwrap() < -3.0);
    // STEP in 2-D is offset to (75, 35)
    assert_eq!(evaluate(Step, &[75.0, 35.0], None).unwrap(), 0.0);
    assert_eq!(evaluate(Step, &[75.4, 34.6], None).unwrap(), 0.0);
    assert!(evaluate(Step, &[0.0, 0.0], None).unwrap() < 0.0);
    // in other dimensions STEP has no offset
    assert_eq!(evaluate(Step, &[0.2, -0.3, 0.1], None).unwrap(), 0.0);
    // GRIEWANK's shift
    assert_eq!(evaluate(Griewank, &[75.123, 75.123], None).unwrap(), 0.0);
}

#[test]
fn permutation_symmetry_holds_exactly_where_the_formula_is_symmetric() {
    use BenchmarkId::*;
    let x = [0.31, -0.72, 0.11, -0.44];
    let permutations: [[usize; 4]; 4] = [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [1, 2, 3, 0]];

    for id in [F1, F2, F4, F6, F8, F9, F10] {
        let base = evaluate(id, &x, None).unwrap();
        for perm in &permutations {
            let shuffled: Vec<f64> = perm.iter().map(|&i| x[i]).collect();
            let v = evaluate(id, &shuffled, None).unwrap();
            assert!(
                (v - base).abs() <= 1e-12 * base.abs().max(1.0),
                "{id} changed under permutation: {base} vs {v}"
            );
        }
    }

    // order-dependent formulas: some permutation changes the value
    for id in [F3, F5, F12, F13] {
        let base = evaluate(id, &x, None).unwrap();
        let witness = permutations.iter().any(|perm| {
            let shuffled: Vec<f64> = perm.iter().map(|&i| x[i]).collect();
            (evaluate(id, &shuffled, None).unwrap() - base).abs() > 1e-9
        });
        assert!(witness, "{id} unexpectedly permutation-symmetric at {x:?}");
    }
}

#[test]
fn noisy_entry_is_seed_deterministic_with_bounded_noise() {
    let x = [0.2, -0.4, 0.9];
    let base: f64 = -(1.0 * 0.2f64.powi(4) + 2.0 * 0.4f64.powi(4) + 3.0 * 0.9f64.powi(4));
    let a = evaluate(BenchmarkId::F7, &x, Some(11)).unwrap();
    let b = evaluate(BenchmarkId::F7, &x, Some(11)).unwrap();
    let c = evaluate(BenchmarkId::F7, &x, Some(12)).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
    for v in [a, c] {
        assert!(
            v <= base && v > base - 1.0,
            "noise outside [0,1): {v} vs base {base}"
        );
    }
    // seed defaults to 0 when absent
    assert_eq!(
        evaluate(BenchmarkId::F7, &x, None).unwrap(),
        evaluate(BenchmarkId::F7, &x, Some(0)).unwrap()
    );
}

#[test]
fn constrained_entries_reject_below_any_feasible_value() {
    use BenchmarkId::*;
    let feasible = evaluate(
        HimmelblauNlo,
        &[78.0, 33.0, 27.0709971052, 45.0, 44.9692425501],
        None,
    )
    .unwrap();
    // g3 falls below 20 here
    let rejected = evaluate(HimmelblauNlo, &[78.0, 33.0, 27.0, 27.0, 27.0], None).unwrap();
    assert_eq!(rejected, SENTINEL_FITNESS);
    assert!(rejected < feasible);

    let rejected = evaluate(CompressionSpring, &[70.0, 0.6, 0.5], None).unwrap();
    assert_eq!(rejected, SENTINEL_FITNESS);
    // a classic feasible design; value hand-checked:
    // pi^2 * 1.2230410521 * 0.283^2 * (9+1)/4 = 2.41687...
    let feasible = evaluate(CompressionSpring, &[9.0, 1.2230410521, 0.283], None).unwrap();
    assert!(feasible > SENTINEL_FITNESS);
    assert!(
        (feasible - -2.41687205).abs() < 1e-6,
        "spring mass {feasible}"
    );
}

#[test]
fn spring_rounds_its_discrete_coordinates() {
    use BenchmarkId::*;
    let a = evaluate(CompressionSpring, &[9.4, 1.2230410521, 0.2831], None).unwrap();
    let b = evaluate(CompressionSpring, &[9.0, 1.2230410521, 0.283], None).unwrap();
    assert_eq!(a, b);
    let a = evaluate(GearTrain, &[19.4, 15.7, 42.9, 49.2], None).unwrap();
    let b = evaluate(GearTrain, &[19.0, 16.0, 43.0, 49.0], None).unwrap();
    assert_eq!(a, b);
    assert!((a - -2.7008571488860307e-12).abs() < 1e-20);
}

#[test]
fn unknown_and_misdimensioned_calls_error() {
    assert!(BenchmarkId::parse("F24").is_none());
    assert!(matches!(
        evaluate(BenchmarkId::F18, &[1.0, 2.0, 3.0], None),
        Err(EvalError::DimensionMismatch { .. })
    ));
    assert!(matches!(
        evaluate(BenchmarkId::F1, &[1.0], None),
        Err(EvalError::DimensionMismatch { .. })
    ));
    assert!(matches!(
        evaluate(BenchmarkId::F1, &[f64::NAN; 30], None),
        Err(EvalError::NonFiniteInput { .. })
    ));
    assert!(matches!(
        evaluate(BenchmarkId::ParrottF4, &[0.5], None),
        Err(EvalError::NotImplemented { .. })
    ));
}

#[test]
fn bounds_table_matches_the_source() {
    assert_eq!(
        default_bounds(BenchmarkId::F10, 30),
        vec![(-32.0, 32.0); 30]
    );
    assert_eq!(
        default_bounds(BenchmarkId::CompressionSpring, 3),
        vec![(1.0, 70.0), (0.6, 3.0), (0.207, 0.5)]
    );
    assert_eq!(
        default_bounds(BenchmarkId::F17, 2),
        vec![(-5.0, 10.0), (0.0, 15.0)]
    );
    assert_eq!(
        default_bounds(BenchmarkId::F8, 30),
        vec![(-500.0, 500.0); 30]
    );
    assert_eq!(
        default_bounds(BenchmarkId::HimmelblauNlo, 5),
        vec![
            (78.0, 102.0),
            (33.0, 45.0),
            (27.0, 45.0),
            (27.0, 45.0),
            (27.0, 45.0)
        ]
    );
}

#[test]
fn sgo_offsets_shift_the_landscape() {
    let x = [1.5, -2.0];
    let base = evaluate_sgo_with_offsets(&x, 0.0, 0.0);
    let shifted = evaluate_sgo_with_offsets(&[x[0] + 3.0, x[1] - 1.0], 3.0, -1.0);
    assert_eq!(base, shifted);
    assert_eq!(evaluate(BenchmarkId::Sgo, &x, None).unwrap(), base);
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn quartic_noise_band_is_tight(
            x0 in -1.28f64..1.28,
            x1 in -1.28f64..1.28,
            seed in 0u64..5000,
        ) {
            let base = -(x0.powi(4) + 2.0 * x1.powi(4));
            let v = evaluate(BenchmarkId::F7, &[x0, x1], Some(seed)).unwrap();
            prop_assert!(v <= base && v > base - 1.0);
        }

        #[test]
        fn symmetric_families_survive_random_swaps(
            a in -5.0f64..5.0,
            b in -5.0f64..5.0,
            c in -5.0f64..5.0,
            d in -5.0f64..5.0,
            i in 0usize..4,
            j in 0usize..4,
        ) {
            let mut x = [a, b, c, d];
            let base = evaluate(BenchmarkId::F9, &x, None).unwrap();
            x.swap(i, j);
            let v = evaluate(BenchmarkId::F9, &x, None).unwrap();
            prop_assert!((v - base).abs() <= 1e-12 * base.abs().max(1.0));
        }
    }
}
