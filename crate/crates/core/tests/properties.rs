//! Property tests for the invariants of the sequence, operator, resolvent and
//! classifier modules.

use std::f64::consts::TAU;

use hahn_core::operators::DenseMatrix;
use hahn_core::spectral::{GoldbergState, InverseCondition, RangeCondition};
use hahn_core::*;
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn complex() -> impl Strategy<Value = Complex64> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn nonempty_sequence(max_len: usize) -> impl Strategy<Value = TruncatedSequence> {
    prop::collection::vec(complex(), 1..max_len).prop_map(|v| TruncatedSequence::new(v).unwrap())
}

fn same_length_pair(max_len: usize) -> impl Strategy<Value = (TruncatedSequence, TruncatedSequence)> {
    (1..max_len).prop_flat_map(|n| {
        (prop::collection::vec(complex(), n), prop::collection::vec(complex(), n))
            .prop_map(|(a, b)| (TruncatedSequence::new(a).unwrap(), TruncatedSequence::new(b).unwrap()))
    })
}

fn scalar() -> impl Strategy<Value = ComplexScalar> {
    complex().prop_map(|z| ComplexScalar::checked(z).unwrap())
}

/// α with `|1 − α|` in `[lo, hi]`.
fn alpha_at_distance(lo: f64, hi: f64) -> impl Strategy<Value = ComplexScalar> {
    (lo..hi, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| {
        ComplexScalar::checked(Complex64::new(1.0, 0.0) - Complex64::from_polar(r, t)).unwrap()
    })
}

fn functionals(x: &TruncatedSequence) -> [f64; 5] {
    [hahn_norm(x), rao_norm(x), l1_norm(x), rho_inf_functional(x).unwrap(), abs_cesaro_functional(x).unwrap()]
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn l1_rao_hahn_chain(x in nonempty_sequence(40)) {
        let (l1, rao, hahn) = (l1_norm(&x), rao_norm(&x), hahn_norm(&x));
        let slack = 1e-10 * hahn.max(1.0);
        prop_assert!(l1 <= rao + slack);
        prop_assert!(rao <= hahn + slack);
        prop_assert!(hahn <= 2.0 * rao + slack);
    }

    #[test]
    fn functionals_are_absolutely_homogeneous(x in nonempty_sequence(30), c in complex()) {
        let cx = x.scaled(c).unwrap();
        for (fx, fcx) in functionals(&x).iter().zip(functionals(&cx)) {
            prop_assert!(close(c.norm() * fx, fcx, 1e-10), "{} vs {}", c.norm() * fx, fcx);
        }
    }

    #[test]
    fn functionals_satisfy_the_triangle_inequality((x, y) in same_length_pair(30)) {
        let sum: Vec<Complex64> =
            x.as_slice().iter().zip(y.as_slice()).map(|(a, b)| a + b).collect();
        let s = TruncatedSequence::new(sum).unwrap();
        let (fx, fy, fs) = (functionals(&x), functionals(&y), functionals(&s));
        for i in 0..5 {
            prop_assert!(fs[i] <= (fx[i] + fy[i]) * (1.0 + 1e-10) + 1e-12);
        }
    }

    #[test]
    fn rho_inf_is_dominated_by_abs_cesaro(x in nonempty_sequence(40)) {
        let rho = rho_inf_functional(&x).unwrap();
        let ces = abs_cesaro_functional(&x).unwrap();
        prop_assert!(rho <= ces * (1.0 + 1e-12));
    }

    #[test]
    fn zero_padding_changes_nothing(x in nonempty_sequence(30), extra in 0usize..20) {
        let p = x.padded(x.len() + extra);
        prop_assert_eq!(functionals(&x), functionals(&p));
    }

    #[test]
    fn apply_is_linear((x, y) in same_length_pair(30), a in complex(), b in complex(), alpha in scalar()) {
        let op = backward_difference().shifted(alpha);
        let combo: Vec<Complex64> =
            x.as_slice().iter().zip(y.as_slice()).map(|(p, q)| a * p + b * q).collect();
        let lhs = op.apply(&TruncatedSequence::new(combo).unwrap());
        let (ax, ay) = (op.apply(&x), op.apply(&y));
        for ((l, p), q) in lhs.as_slice().iter().zip(ax.as_slice()).zip(ay.as_slice()) {
            let r = a * p + b * q;
            prop_assert!((l - r).norm() <= 1e-12 * (1.0 + (a * p).norm() + (b * q).norm()));
        }
    }

    #[test]
    fn transpose_commutes_with_sections(alpha in scalar(), n in 1usize..12, fwd in any::<bool>()) {
        let base = if fwd { forward_difference() } else { backward_difference() };
        let op = base.shifted(alpha);
        prop_assert_eq!(op.transpose().truncate_dense(n).unwrap(), op.truncate_dense(n).unwrap().transpose());
    }

    #[test]
    fn apply_matches_the_dense_section(x in nonempty_sequence(20), alpha in scalar()) {
        let op = forward_difference().shifted(alpha);
        let dense = op.truncate_dense(x.len()).unwrap().mul_vec(x.as_slice());
        let applied = op.apply(&x);
        prop_assert_eq!(applied.as_slice(), &dense[..]);
    }

    #[test]
    fn shift_and_unshift_is_exact(re in -64i32..64, im in -64i32..64) {
        // dyadic shifts keep the diagonal arithmetic exact
        let alpha = ComplexScalar::new(re as f64 / 8.0, im as f64 / 8.0).unwrap();
        let op = backward_difference();
        prop_assert_eq!(op.shifted(alpha).shifted(-alpha), op);
    }

    #[test]
    fn section_inverse_is_exact(alpha in alpha_at_distance(1.0, 4.0), n in 1usize..64) {
        // with |1 − α| ≥ 1 all entries are bounded by 1, so the error is absolute
        let a = backward_difference().shifted(alpha).truncate_dense(n).unwrap();
        let b = resolvent_truncation(alpha, n).unwrap();
        prop_assert!((&a * &b).max_abs_diff(&DenseMatrix::identity(n)) <= 1e-13);
    }

    #[test]
    fn column_functional_is_translation_invariant(alpha in alpha_at_distance(0.2, 4.0), n_rows in 1usize..64) {
        let v0 = hahn_column_functional(alpha, 0, n_rows).unwrap();
        for k in [1, 5] {
            let vk = hahn_column_functional(alpha, k, n_rows).unwrap();
            prop_assert!(close(v0, vk, 1e-12), "k={k}: {v0} vs {vk}");
        }
    }

    #[test]
    fn series_partial_sums_are_monotone(alpha in alpha_at_distance(0.5, 4.0), n in 1usize..150) {
        let a = norm_bound_series(alpha, n).unwrap();
        let b = norm_bound_series(alpha, n + 1).unwrap();
        prop_assert!(b.partial_value >= a.partial_value);
    }

    #[test]
    fn series_error_within_tail_bound(alpha in alpha_at_distance(1.2, 4.0), n in 5usize..200) {
        let v = norm_bound_series(alpha, n).unwrap();
        let limit = v.closed_form().unwrap();
        let bound = v.tail_bound().unwrap();
        prop_assert!(limit - v.partial_value <= bound + 1e-12 * limit);
        prop_assert!(v.partial_value <= limit * (1.0 + 1e-12));
    }

    #[test]
    fn classification_depends_only_on_the_distance(r in 0.0..3.0f64, t1 in 0.0..TAU, t2 in 0.0..TAU) {
        let at = |t: f64| {
            classify_point(ComplexScalar::checked(Complex64::new(1.0, 0.0) + Complex64::from_polar(r, t)).unwrap())
        };
        let (p, q) = (at(t1), at(t2));
        // exact radial symmetry holds away from the tolerance band edge
        prop_assume!(((p.shift_modulus - 1.0).abs() - 1e-9).abs() > 1e-12);
        prop_assert_eq!(p.region, q.region);
        prop_assert_eq!(p.goldberg, q.goldberg);
        prop_assert_eq!(p.membership(), q.membership());
        prop_assert_eq!(p.adjoint_eigen, q.adjoint_eigen);
    }

    #[test]
    fn classification_matches_its_goldberg_cell(alpha in scalar()) {
        let p = classify_point(alpha);
        prop_assert_eq!(goldberg_membership(p.goldberg).unwrap(), p.membership());
    }

    #[test]
    fn point_spectrum_is_empty(alpha in scalar(), n in 1usize..80) {
        prop_assert_eq!(eigen_recursion_solve(alpha, n).verdict, KernelVerdict::OnlyTrivial);
    }
}

#[test]
fn boundedness_witness() {
    // ‖Δx‖_h ≤ C‖x‖_h on finitely supported x; pad so the image keeps its last entry.
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let mut worst = 0.0_f64;
    for _ in 0..500 {
        let x = nonempty_sequence(40).new_tree(&mut runner).unwrap().current();
        if hahn_norm(&x) == 0.0 {
            continue;
        }
        let padded = x.padded(x.len() + 1);
        let y = backward_difference().apply(&padded);
        worst = worst.max(hahn_norm(&y) / hahn_norm(&x));
    }
    println!("max observed ‖Δx‖_h / ‖x‖_h = {worst:.6}");
    assert!(worst <= 4.0);
    assert!(worst > 1.0);
}

#[test]
fn classifier_never_emits_excluded_states() {
    use InverseCondition::*;
    use RangeCondition::*;
    let excluded = [
        GoldbergState::new(A, Missing),
        GoldbergState::new(B, Missing),
        GoldbergState::new(C, Missing),
        GoldbergState::new(C, Bounded),
        GoldbergState::new(A, Unbounded),
    ];
    for ix in 0..201 {
        for iy in 0..201 {
            let alpha =
                ComplexScalar::new(-1.0 + 4.0 * ix as f64 / 200.0, -2.0 + 4.0 * iy as f64 / 200.0).unwrap();
            let p = classify_point(alpha);
            assert!(!excluded.contains(&p.goldberg), "{alpha}: {}", p.goldberg);
            assert_ne!(p.region, SpectralRegion::PointSpectrum);
        }
    }
}
