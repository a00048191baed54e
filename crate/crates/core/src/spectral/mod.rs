//! Fine spectrum of the difference operator `Δ` on `h`.
//!
//! Everything is decided by `r = |1 − α|`:
//!
//! | `r`   | region     | Goldberg | σ_ap | σ_δ | σ_co |
//! |-------|------------|----------|------|-----|------|
//! | `> 1` | resolvent  | A1       |      |     |      |
//! | `= 1` | continuous | B2       | ✓    | ✓   |      |
//! | `< 1` | residual   | C2       | ✓    | ✓   | ✓    |
//!
//! The point spectrum is empty. The numerical routines in [`numerics`] check this
//! picture on finite sections; [`consistency`] checks it against the general
//! identities relating the subspectra.

mod consistency;
mod goldberg;
mod numerics;

use serde::{Deserialize, Serialize};

use crate::scalar::ComplexScalar;

pub use consistency::{consistency_suite, consistency_suite_with, ConsistencyReport, Violation, CHECKS};
pub use goldberg::{goldberg_membership, GoldbergState, InverseCondition, Membership, RangeCondition};
pub use numerics::{
    adjoint_eigen_test, adjoint_eigen_test_with, classify_point_with_numerics, eigen_recursion_solve,
    finite_section_growth, finite_section_growth_at, AdjointTest, AdjointVerdict, EigenRecursion,
    GrowthClass, GrowthReport, KernelVerdict, NumericsConfig,
};

pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectralRegion {
    ResolventSet,
    PointSpectrum,
    ContinuousSpectrum,
    ResidualSpectrum,
}

impl SpectralRegion {
    pub const ALL: [SpectralRegion; 4] = [
        SpectralRegion::ResolventSet,
        SpectralRegion::PointSpectrum,
        SpectralRegion::ContinuousSpectrum,
        SpectralRegion::ResidualSpectrum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpectralRegion::ResolventSet => "resolvent",
            SpectralRegion::PointSpectrum => "point",
            SpectralRegion::ContinuousSpectrum => "continuous",
            SpectralRegion::ResidualSpectrum => "residual",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.as_str() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifierConfig {
    /// Absolute tolerance for `|1 − α| = 1`.
    pub boundary_tol: f64,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        Self { boundary_tol: DEFAULT_BOUNDARY_TOL }
    }
}

/// Numeric evidence attached to a classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Last partial sum of the `(h:h)` norm bound series.
    pub resolvent_bound: Option<f64>,
    pub growth_ratio: Option<f64>,
    pub growth_class: Option<GrowthClass>,
    pub adjoint_test_value: Option<f64>,
    pub adjoint_verdict: Option<AdjointVerdict>,
    pub note: Option<String>,
}

/// Full verdict for one `α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointClassification {
    pub alpha: ComplexScalar,
    /// `|1 − α|`.
    pub shift_modulus: f64,
    pub region: SpectralRegion,
    pub goldberg: GoldbergState,
    pub in_ap: bool,
    pub in_delta: bool,
    pub in_co: bool,
    /// `α` is an eigenvalue of the adjoint.
    pub adjoint_eigen: bool,
    /// `|1 − α|` fell within the boundary tolerance of 1.
    pub boundary: bool,
    pub diagnostics: Option<Diagnostics>,
}

impl PointClassification {
    pub fn in_spectrum(&self) -> bool {
        self.region != SpectralRegion::ResolventSet
    }

    /// The flags of this verdict in the same shape as [`goldberg_membership`].
    pub fn membership(&self) -> Membership {
        Membership {
            resolvent: self.region == SpectralRegion::ResolventSet,
            point: self.region == SpectralRegion::PointSpectrum,
            continuous: self.region == SpectralRegion::ContinuousSpectrum,
            residual: self.region == SpectralRegion::ResidualSpectrum,
            ap: self.in_ap,
            delta: self.in_delta,
            co: self.in_co,
        }
    }
}

/// Classifies `α` with the default boundary tolerance.
pub fn classify_point(alpha: ComplexScalar) -> PointClassification {
    classify_point_with(alpha, &ClassifierConfig::default())
}

pub fn classify_point_with(alpha: ComplexScalar, config: &ClassifierConfig) -> PointClassification {
    use InverseCondition::*;
    use RangeCondition::*;

    let r = (ComplexScalar::ONE - alpha).modulus();
    let boundary = (r - 1.0).abs() <= config.boundary_tol;
    let (region, goldberg, in_ap, in_delta, in_co, adjoint_eigen) = if boundary {
        // The adjoint test value is exactly 1 here; the eigenvalue criterion is strict.
        (SpectralRegion::ContinuousSpectrum, GoldbergState::new(B, Unbounded), true, true, false, false)
    } else if r > 1.0 {
        (SpectralRegion::ResolventSet, GoldbergState::new(A, Bounded), false, false, false, false)
    } else {
        (SpectralRegion::ResidualSpectrum, GoldbergState::new(C, Unbounded), true, true, true, true)
    };

    PointClassification {
        alpha,
        shift_modulus: r,
        region,
        goldberg,
        in_ap,
        in_delta,
        in_co,
        adjoint_eigen,
        boundary,
        diagnostics: None,
    }
}
