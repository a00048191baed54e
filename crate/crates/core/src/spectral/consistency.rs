//! Cross-checks of a classification against the identities every bounded
//! operator satisfies, independent of which operator produced it.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};
use crate::scalar::ComplexScalar;

use super::{
    classify_point_with, goldberg_membership, ClassifierConfig, PointClassification, SpectralRegion,
};

/// Names of the identities checked at every point.
pub const CHECKS: [&str; 6] = [
    "partition",
    "residual_is_compression_minus_point",
    "continuous_is_spectrum_minus_point_and_compression",
    "adjoint_point_is_compression",
    "spectrum_is_ap_or_adjoint_point",
    "subspectrum_inclusions",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub alpha: ComplexScalar,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub violations: Vec<Violation>,
    /// Number of (point, identity) pairs evaluated.
    pub total_checked: usize,
}

impl ConsistencyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn consistency_suite(grid: &[ComplexScalar]) -> Result<ConsistencyReport> {
    consistency_suite_with(grid, &ClassifierConfig::default())
}

pub fn consistency_suite_with(
    grid: &[ComplexScalar],
    config: &ClassifierConfig,
) -> Result<ConsistencyReport> {
    if grid.is_empty() {
        return Err(SpectrumError::EmptyInput("consistency suite needs at least one point"));
    }
    let mut report = ConsistencyReport::default();
    for &alpha in grid {
        let p = classify_point_with(alpha, config);
        for (check, ok) in CHECKS.iter().zip(check_point(&p)) {
            report.total_checked += 1;
            if !ok {
                report.violations.push(Violation { alpha, check: check.to_string() });
            }
        }
    }
    Ok(report)
}

/// One boolean per entry of [`CHECKS`].
pub(crate) fn check_point(p: &PointClassification) -> [bool; 6] {
    let sigma = p.in_spectrum();
    let point = p.region == SpectralRegion::PointSpectrum;
    let continuous = p.region == SpectralRegion::ContinuousSpectrum;
    let residual = p.region == SpectralRegion::ResidualSpectrum;

    // the region must be the single region of the reported Goldberg cell, and
    // the resolvent set is exactly where no subspectrum flag is raised
    let partition = goldberg_membership(p.goldberg).is_ok_and(|m| m == p.membership())
        && (p.region == SpectralRegion::ResolventSet) == !(p.in_ap || p.in_delta || p.in_co);

    [
        partition,
        residual == (p.in_co && !point),
        continuous == (sigma && !point && !p.in_co),
        p.adjoint_eigen == p.in_co,
        sigma == (p.in_ap || p.adjoint_eigen) && sigma == (p.in_ap || p.in_delta),
        (!point || p.in_ap) && (!p.in_co || p.in_delta),
    ]
}
