//! Finite-section checks of the analytic classification.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};
use crate::resolvent::{hahn_column_functional, norm_bound_series_with, DEFAULT_SERIES_TERMS};
use crate::scalar::ComplexScalar;
use crate::sequences::{abs_cesaro_functional, TruncatedSequence, DEFAULT_DIVERGENCE_THRESHOLD};

use super::{classify_point_with, ClassifierConfig, Diagnostics, PointClassification, DEFAULT_BOUNDARY_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelVerdict {
    OnlyTrivial,
    Nontrivial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenRecursion {
    pub verdict: KernelVerdict,
    pub trace: TruncatedSequence,
}

/// Solves `(Δ − αI)x = 0` row by row: `(1 − α)x_0 = 0` and
/// `−x_{j−1} + (1 − α)x_j = 0`.
///
/// For `α ≠ 1` the rows determine `x_j` from `x_{j−1}` starting at zero. For
/// `α = 1` the diagonal vanishes and row `j + 1` reads `x_j = 0` directly, so the
/// first `n` entries use `n + 1` rows of the infinite system.
pub fn eigen_recursion_solve(alpha: ComplexScalar, n: usize) -> EigenRecursion {
    let diag = Complex64::new(1.0, 0.0) - alpha.value();
    let zero = Complex64::new(0.0, 0.0);
    let trace: Vec<Complex64> = if diag != zero {
        let mut prev = zero;
        (0..n)
            .map(|_| {
                prev /= diag;
                prev
            })
            .collect()
    } else {
        // row j + 1 reads x_j = (1 − α)·x_{j+1} whatever x_{j+1} is
        let free = Complex64::new(1.0, 0.0);
        vec![diag * free; n]
    };
    let verdict =
        if trace.iter().all(|z| *z == zero) { KernelVerdict::OnlyTrivial } else { KernelVerdict::Nontrivial };
    EigenRecursion { verdict, trace: TruncatedSequence::new(trace).expect("zero trace is finite") }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AdjointVerdict {
    /// `|1 − α| < 1`: the eigen-sequence lies in the dual.
    InsideDual,
    /// `|1 − α| > 1`: the Cesàro averages grow geometrically.
    Divergent,
    /// `|1 − α| = 1`: the test value is exactly 1, which is finite.
    BoundaryCase,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdjointTest {
    /// `x_k = (1 − α)^k` for `k = 1..=n`, cut short if the powers overflow.
    pub sequence: TruncatedSequence,
    pub test_value: f64,
    /// `test_value` passed the divergence threshold.
    pub exceeded: bool,
    pub verdict: AdjointVerdict,
}

/// Eigen-sequence of the adjoint `Δ^t − αI` and its Cesàro test value
/// `sup_n n⁻¹ Σ_{k≤n} |1 − α|^k`.
pub fn adjoint_eigen_test(alpha: ComplexScalar, n: usize, threshold: f64) -> Result<AdjointTest> {
    adjoint_eigen_test_with(alpha, n, threshold, DEFAULT_BOUNDARY_TOL)
}

pub fn adjoint_eigen_test_with(
    alpha: ComplexScalar,
    n: usize,
    threshold: f64,
    boundary_tol: f64,
) -> Result<AdjointTest> {
    if n == 0 {
        return Err(SpectrumError::EmptyInput("adjoint test needs at least one term"));
    }
    let ratio = Complex64::new(1.0, 0.0) - alpha.value();
    let mut values = Vec::with_capacity(n);
    let mut power = Complex64::new(1.0, 0.0);
    let mut overflowed = false;
    for _ in 0..n {
        power *= ratio;
        if !(power.re.is_finite() && power.im.is_finite()) {
            overflowed = true;
            break;
        }
        values.push(power);
    }
    let sequence = TruncatedSequence::new(values)?;
    let test_value = if overflowed { f64::INFINITY } else { abs_cesaro_functional(&sequence)? };

    let r = ratio.norm();
    let verdict = if (r - 1.0).abs() <= boundary_tol {
        AdjointVerdict::BoundaryCase
    } else if r < 1.0 {
        AdjointVerdict::InsideDual
    } else {
        AdjointVerdict::Divergent
    };
    Ok(AdjointTest { sequence, test_value, exceeded: test_value.is_nan() || test_value > threshold, verdict })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GrowthClass {
    Saturating,
    Growing,
}

impl GrowthClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthClass::Saturating => "saturating",
            GrowthClass::Growing => "growing",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "saturating" => Some(GrowthClass::Saturating),
            "growing" => Some(GrowthClass::Growing),
            _ => None,
        }
    }
}

/// Relative slack below the critical growth factor before a column counts as saturating.
const CRITICAL_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub sizes: Vec<usize>,
    pub values: Vec<f64>,
    /// `v(last) / v(previous)`.
    pub ratio: f64,
    /// Growth factor of a column on `|1 − α| = 1` over the same two sizes.
    pub critical_ratio: f64,
    pub class: GrowthClass,
}

/// Column functional of the resolvent at increasing section sizes, column 0.
pub fn finite_section_growth(alpha: ComplexScalar, sizes: &[usize]) -> Result<GrowthReport> {
    finite_section_growth_at(alpha, 0, sizes)
}

/// Column functional of the resolvent at increasing section sizes.
///
/// On the unit circle `|1 − α| = 1` the functional is exactly `|α|·N(N+1)/2`, so
/// its growth between the last two sizes is the critical factor. Outside the
/// disk the partial sums converge geometrically and grow strictly slower;
/// inside the disk they grow geometrically and strictly faster. The column
/// counts as saturating when its growth stays below the critical factor.
pub fn finite_section_growth_at(
    alpha: ComplexScalar,
    column: usize,
    sizes: &[usize],
) -> Result<GrowthReport> {
    if sizes.len() < 2 {
        return Err(SpectrumError::InvalidArgument("growth check needs at least two section sizes".into()));
    }
    if sizes[0] == 0 || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SpectrumError::InvalidArgument(
            "section sizes must be positive and strictly increasing".into(),
        ));
    }
    let values =
        sizes.iter().map(|&n| hahn_column_functional(alpha, column, n)).collect::<Result<Vec<_>>>()?;

    let (prev, last) = (values[values.len() - 2], values[values.len() - 1]);
    let (a, b) = (sizes[sizes.len() - 2] as f64, sizes[sizes.len() - 1] as f64);
    let critical_ratio = b * (b + 1.0) / (a * (a + 1.0));
    let ratio = if last == prev { 1.0 } else { last / prev };
    let class = if ratio < critical_ratio * (1.0 - CRITICAL_MARGIN) {
        GrowthClass::Saturating
    } else {
        GrowthClass::Growing
    };
    Ok(GrowthReport { sizes: sizes.to_vec(), values, ratio, critical_ratio, class })
}

/// Settings for the numeric evidence attached by [`classify_point_with_numerics`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericsConfig {
    /// Largest section size; the growth check also uses a quarter and half of it.
    pub truncation: usize,
    pub column: usize,
    pub divergence_threshold: f64,
    pub series_terms: usize,
}

impl Default for NumericsConfig {
    fn default() -> Self {
        Self {
            truncation: 64,
            column: 0,
            divergence_threshold: DEFAULT_DIVERGENCE_THRESHOLD,
            series_terms: DEFAULT_SERIES_TERMS,
        }
    }
}

impl NumericsConfig {
    pub fn growth_sizes(&self) -> Vec<usize> {
        let t = self.truncation;
        let mut sizes = vec![(t / 4).max(1), (t / 2).max(1), t.max(1)];
        sizes.dedup();
        sizes
    }
}

/// [`classify_point_with`] plus resolvent, growth and adjoint evidence.
///
/// Never fails: a singular shift or an unusable size lands in the note.
pub fn classify_point_with_numerics(
    alpha: ComplexScalar,
    config: &ClassifierConfig,
    numerics: &NumericsConfig,
) -> PointClassification {
    let mut point = classify_point_with(alpha, config);
    let mut notes = Vec::new();

    let resolvent_bound =
        match norm_bound_series_with(alpha, numerics.series_terms, numerics.divergence_threshold) {
            Ok(v) => Some(v.partial_value),
            Err(e) => {
                notes.push(e.to_string());
                None
            }
        };
    let (growth_ratio, growth_class) =
        match finite_section_growth_at(alpha, numerics.column, &numerics.growth_sizes()) {
            Ok(g) => (Some(g.ratio), Some(g.class)),
            Err(SpectrumError::SingularShift { .. }) => (None, None),
            Err(e) => {
                notes.push(e.to_string());
                (None, None)
            }
        };
    let adjoint = adjoint_eigen_test_with(
        alpha,
        numerics.truncation.max(1),
        numerics.divergence_threshold,
        config.boundary_tol,
    );
    let (adjoint_test_value, adjoint_verdict) = match adjoint {
        Ok(t) => (Some(t.test_value), Some(t.verdict)),
        Err(e) => {
            notes.push(e.to_string());
            (None, None)
        }
    };

    point.diagnostics = Some(Diagnostics {
        resolvent_bound,
        growth_ratio,
        growth_class,
        adjoint_test_value,
        adjoint_verdict,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    });
    point
}
