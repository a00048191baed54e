//! Resolvent of the shifted difference operator `Δ − αI`.
//!
//! `Δ − αI` is a triangle (lower bidiagonal, diagonal `1 − α`), so for `α ≠ 1` it
//! has a lower-triangular inverse with entries
//! `b_nk = (1 − α)^{−(n−k+1)}` for `k ≤ n` and `0` above the diagonal.
//! Finite sections invert exactly: the band entries that the truncation drops
//! all lie below the block.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};
use crate::operators::DenseMatrix;
use crate::scalar::ComplexScalar;
use crate::sequences::{TruncatedSequence, DEFAULT_DIVERGENCE_THRESHOLD};

pub const DEFAULT_SERIES_TERMS: usize = 200;

/// `1 − α`, rejecting the singular shift.
pub(crate) fn shifted_diagonal(alpha: ComplexScalar) -> Result<Complex64> {
    let d = Complex64::new(1.0, 0.0) - alpha.value();
    if d == Complex64::new(0.0, 0.0) {
        return Err(SpectrumError::SingularShift { re: alpha.re(), im: alpha.im() });
    }
    Ok(d)
}

/// `(1 − α)^{−m}` without any finiteness check.
fn inverse_power(diag: Complex64, m: usize) -> Complex64 {
    let m = i32::try_from(m).unwrap_or(i32::MAX);
    diag.powi(-m)
}

fn raw_entry(diag: Complex64, n: usize, k: usize) -> Complex64 {
    if k > n {
        Complex64::new(0.0, 0.0)
    } else {
        inverse_power(diag, n - k + 1)
    }
}

/// Entry `(n, k)` (0-based) of `(Δ − αI)^{−1}`.
pub fn resolvent_entry(alpha: ComplexScalar, n: usize, k: usize) -> Result<ComplexScalar> {
    let diag = shifted_diagonal(alpha)?;
    ComplexScalar::checked(raw_entry(diag, n, k))
}

/// Leading `n × n` block of `(Δ − αI)^{−1}`.
pub fn resolvent_truncation(alpha: ComplexScalar, n: usize) -> Result<DenseMatrix> {
    let diag = shifted_diagonal(alpha)?;
    if n == 0 {
        return Err(SpectrumError::EmptyInput("resolvent section of size 0"));
    }
    let mut b = DenseMatrix::zeros(n);
    for row in 0..n {
        for col in 0..=row {
            let v = raw_entry(diag, row, col);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(SpectrumError::NonFinite { context: "resolvent entry", value: v.norm() });
            }
            b[(row, col)] = v;
        }
    }
    Ok(b)
}

/// Solves `(Δ − αI)x = y` on the finite section by forward substitution.
///
/// Independent of [`resolvent_entry`]: only the recurrence
/// `x_n = (x_{n−1} + y_n)/(1 − α)` is used.
pub fn dense_solve_oracle(alpha: ComplexScalar, y: &TruncatedSequence) -> Result<TruncatedSequence> {
    let diag = shifted_diagonal(alpha)?;
    let mut prev = Complex64::new(0.0, 0.0);
    let xs = y
        .as_slice()
        .iter()
        .map(|&yn| {
            prev = (prev + yn) / diag;
            prev
        })
        .collect();
    TruncatedSequence::new(xs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConvergenceKind {
    Convergent,
    Divergent,
}

/// Ratio-test verdict on `Σ n·(x^{n+1} + x^{n+2})`, `x = 1/|1 − α|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceVerdict {
    pub kind: ConvergenceKind,
    /// `x = 1/|1 − α|`, the limit of successive term ratios.
    pub limit_ratio: f64,
    /// Last partial sum computed.
    pub partial_value: f64,
    /// Number of terms summed; less than requested when the divergence threshold stopped it.
    pub terms: usize,
}

impl ConvergenceVerdict {
    /// `x²(1 + x)/(1 − x)²` for a convergent series.
    pub fn closed_form(&self) -> Option<f64> {
        let x = self.limit_ratio;
        (self.kind == ConvergenceKind::Convergent).then(|| x * x * (1.0 + x) / ((1.0 - x) * (1.0 - x)))
    }

    /// Upper bound on the omitted tail, from the first omitted term and the
    /// largest ratio between later terms. `None` while that ratio is still ≥ 1.
    pub fn tail_bound(&self) -> Option<f64> {
        let x = self.limit_ratio;
        let m = (self.terms + 1) as f64;
        let first = m * (x.powf(m + 1.0) + x.powf(m + 2.0));
        let ratio = x * (m + 1.0) / m;
        (ratio < 1.0).then(|| first / (1.0 - ratio))
    }
}

/// Partial sums of the bound `Σ_n n/|1−α|^{n+1} + Σ_n n/|1−α|^{n+2}` on
/// `‖(Δ − αI)^{−1}‖_(h:h)`, with the default divergence threshold.
pub fn norm_bound_series(alpha: ComplexScalar, n_terms: usize) -> Result<ConvergenceVerdict> {
    norm_bound_series_with(alpha, n_terms, DEFAULT_DIVERGENCE_THRESHOLD)
}

pub fn norm_bound_series_with(
    alpha: ComplexScalar,
    n_terms: usize,
    threshold: f64,
) -> Result<ConvergenceVerdict> {
    let diag = shifted_diagonal(alpha)?;
    if n_terms == 0 {
        return Err(SpectrumError::EmptyInput("series needs at least one term"));
    }
    let x = 1.0 / diag.norm();
    // ratio test: terms n·x^{n+1} do not vanish at x = 1
    let kind = if x < 1.0 { ConvergenceKind::Convergent } else { ConvergenceKind::Divergent };

    let mut power = x; // x^{n}
    let mut partial = 0.0;
    let mut terms = 0;
    for n in 1..=n_terms {
        power *= x;
        partial += n as f64 * (power + power * x);
        terms = n;
        if partial.is_nan() || partial > threshold {
            break;
        }
    }
    Ok(ConvergenceVerdict { kind, limit_ratio: x, partial_value: partial, terms })
}

/// `Σ_{n=1}^{n_rows} n·|b_{k+n, k} − b_{k+n+1, k}|` down column `k` of the resolvent.
///
/// Row weights start at the first row below the diagonal, which makes the value
/// independent of `k` for this Toeplitz resolvent. Returns `+∞` once entries overflow.
pub fn hahn_column_functional(alpha: ComplexScalar, k: usize, n_rows: usize) -> Result<f64> {
    let diag = shifted_diagonal(alpha)?;
    let mut total = 0.0;
    let mut upper = raw_entry(diag, k + 1, k);
    for n in 1..=n_rows {
        let lower = raw_entry(diag, k + n + 1, k);
        if !(lower.re.is_finite() && lower.im.is_finite()) {
            return Ok(f64::INFINITY);
        }
        total += n as f64 * (upper - lower).norm();
        upper = lower;
    }
    Ok(total)
}

/// Largest column functional over the sampled columns.
pub fn hahn_column_bound(alpha: ComplexScalar, columns: &[usize], n_rows: usize) -> Result<f64> {
    let mut best = 0.0_f64;
    for &k in columns {
        best = best.max(hahn_column_functional(alpha, k, n_rows)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::backward_difference;

    fn a(re: f64) -> ComplexScalar {
        ComplexScalar::real(re)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn entries_at_zero_shift_are_prefix_sums() {
        for n in 0..6 {
            for k in 0..=n {
                assert_eq!(resolvent_entry(a(0.0), n, k).unwrap(), ComplexScalar::ONE);
            }
            assert!(resolvent_entry(a(0.0), n, n + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn entries_at_three() {
        assert_eq!(resolvent_entry(a(3.0), 0, 0).unwrap(), a(-0.5));
        assert_eq!(resolvent_entry(a(3.0), 1, 0).unwrap(), a(0.25));
        assert_eq!(resolvent_entry(a(3.0), 1, 1).unwrap(), a(-0.5));
    }

    #[test]
    fn singular_shift_is_reported() {
        let one = ComplexScalar::ONE;
        assert!(matches!(resolvent_entry(one, 0, 0), Err(SpectrumError::SingularShift { .. })));
        assert!(matches!(resolvent_truncation(one, 3), Err(SpectrumError::SingularShift { .. })));
        let y = TruncatedSequence::from_real(&[1.0, 2.0]).unwrap();
        assert!(matches!(dense_solve_oracle(one, &y), Err(SpectrumError::SingularShift { .. })));
        assert!(matches!(norm_bound_series(one, 10), Err(SpectrumError::SingularShift { .. })));
        assert!(matches!(hahn_column_functional(one, 0, 10), Err(SpectrumError::SingularShift { .. })));
    }

    #[test]
    fn truncation_examples() {
        let b = resolvent_truncation(a(0.0), 3).unwrap();
        let rows: Vec<Vec<Complex64>> =
            vec![vec![c(1.0), c(0.0), c(0.0)], vec![c(1.0), c(1.0), c(0.0)], vec![c(1.0), c(1.0), c(1.0)]];
        assert_eq!(b, DenseMatrix::from_rows(&rows).unwrap());

        let b = resolvent_truncation(a(3.0), 2).unwrap();
        let rows = vec![vec![c(-0.5), c(0.0)], vec![c(0.25), c(-0.5)]];
        assert_eq!(b, DenseMatrix::from_rows(&rows).unwrap());
    }

    #[test]
    fn section_times_resolvent_is_identity() {
        for alpha in [a(3.0), a(-1.0), a(0.0), a(2.0), ComplexScalar::new(1.5, -2.0).unwrap()] {
            let n = 32;
            let shifted = backward_difference().shifted(alpha).truncate_dense(n).unwrap();
            let b = resolvent_truncation(alpha, n).unwrap();
            assert!((&shifted * &b).max_abs_diff(&DenseMatrix::identity(n)) <= 1e-13, "{alpha}");
        }
    }

    /// The inverse as typeset, `(1 − α)^{−(n+1)}` on every entry of row `n`.
    fn printed_entry(alpha: f64, n: usize, k: usize) -> f64 {
        if k > n {
            0.0
        } else {
            (1.0 - alpha).powi(-(n as i32 + 1))
        }
    }

    #[test]
    fn k_independent_entries_do_not_invert() {
        let alpha = 3.0;
        // Column 0 agrees with the corrected entries.
        for n in 0..5 {
            assert_eq!(printed_entry(alpha, n, 0), resolvent_entry(a(alpha), n, 0).unwrap().re());
        }
        // Row 1 of (Δ − 3I)·B at column 1: (1 − 3)·b_11 − b_01 = −2·(1/4) − 0 ≠ 1.
        let product_11 = (1.0 - alpha) * printed_entry(alpha, 1, 1) - printed_entry(alpha, 0, 1);
        assert_eq!(product_11, -0.5);
        // Every diagonal entry past the first comes out as (1 − α)^{−n} instead of 1.
        let product_22 = (1.0 - alpha) * printed_entry(alpha, 2, 2) - printed_entry(alpha, 1, 2);
        assert_eq!(product_22, 0.25);
    }

    #[test]
    fn oracle_examples() {
        let y = TruncatedSequence::from_real(&[1.0, 1.0, 1.0]).unwrap();
        let x = dense_solve_oracle(a(0.0), &y).unwrap();
        assert_eq!(x, TruncatedSequence::from_real(&[1.0, 2.0, 3.0]).unwrap());

        let y = TruncatedSequence::from_real(&[1.0, 0.0]).unwrap();
        let x = dense_solve_oracle(a(3.0), &y).unwrap();
        assert_eq!(x, TruncatedSequence::from_real(&[-0.5, 0.25]).unwrap());
    }

    #[test]
    fn series_converges_to_three_halves() {
        for alpha in [a(3.0), a(-1.0)] {
            let v = norm_bound_series(alpha, DEFAULT_SERIES_TERMS).unwrap();
            assert_eq!(v.kind, ConvergenceKind::Convergent);
            assert_eq!(v.limit_ratio, 0.5);
            assert!((v.partial_value - 1.5).abs() < 1e-9);
            assert!((v.closed_form().unwrap() - 1.5).abs() < 1e-15);
        }
    }

    #[test]
    fn series_diverges_inside_closed_disk() {
        for alpha in [a(1.5), a(0.0), a(0.5), a(2.0)] {
            let v = norm_bound_series(alpha, DEFAULT_SERIES_TERMS).unwrap();
            assert_eq!(v.kind, ConvergenceKind::Divergent, "{alpha}");
            assert!(v.closed_form().is_none());
        }
        // x = 2 blows past the threshold long before 200 terms.
        let v = norm_bound_series(a(1.5), DEFAULT_SERIES_TERMS).unwrap();
        assert!(v.partial_value > DEFAULT_DIVERGENCE_THRESHOLD);
        assert!(v.terms < DEFAULT_SERIES_TERMS);
    }

    #[test]
    fn column_functional_examples() {
        // |b_{n,0} − b_{n+1,0}| = (3/2)·2^{−(n+1)}, so the sum is 3/2.
        let v = hahn_column_functional(a(3.0), 0, 64).unwrap();
        assert!((v - 1.5).abs() < 1e-9);

        for n_rows in [1, 7, 64] {
            assert_eq!(hahn_column_functional(a(0.0), 0, n_rows).unwrap(), 0.0);
        }

        let v16 = hahn_column_functional(a(0.5), 0, 16).unwrap();
        let v32 = hahn_column_functional(a(0.5), 0, 32).unwrap();
        assert!(v32 > 1024.0 * v16);
    }

    #[test]
    fn column_functional_on_unit_circle_is_quadratic() {
        // α = 2: the differences have constant modulus 2, so the sum is N(N+1).
        for n in [1usize, 10, 32, 64] {
            let v = hahn_column_functional(a(2.0), 0, n).unwrap();
            assert_eq!(v, (n * (n + 1)) as f64);
        }
    }

    #[test]
    fn column_functional_overflows_to_infinity() {
        let alpha = ComplexScalar::new(1.0 + 1e-3, 0.0).unwrap();
        assert_eq!(hahn_column_functional(alpha, 0, 200).unwrap(), f64::INFINITY);
    }

    #[test]
    fn column_bound_takes_the_max() {
        let v = hahn_column_bound(a(3.0), &[0, 1, 5], 64).unwrap();
        assert!((v - 1.5).abs() < 1e-9);
    }
}
