use std::path::PathBuf;

use hahn_core::spectral::NumericsConfig;
use hahn_core::{
    classify_point_with, classify_point_with_numerics, consistency_suite_with, ClassifierConfig,
    ComplexScalar, PointClassification, SpectralRegion, DEFAULT_DIVERGENCE_THRESHOLD,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ScanError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Pgm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub nx: usize,
    pub ny: usize,
    pub truncation: usize,
    pub column: usize,
    pub boundary_tol: f64,
    pub divergence_threshold: f64,
    pub with_numerics: bool,
    pub output_path: PathBuf,
    pub format: OutputFormat,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            re_min: -1.0,
            re_max: 3.0,
            im_min: -2.0,
            im_max: 2.0,
            nx: 41,
            ny: 41,
            truncation: 64,
            column: 0,
            boundary_tol: hahn_core::spectral::DEFAULT_BOUNDARY_TOL,
            divergence_threshold: DEFAULT_DIVERGENCE_THRESHOLD,
            with_numerics: false,
            output_path: PathBuf::new(),
            format: OutputFormat::Csv,
        }
    }
}

impl ScanConfig {
    /// The 41 × 41 lattice over `[−1, 3] × [−2, 2]`, which holds the whole disk
    /// `|1 − α| ≤ 1` with a margin of one on every side.
    pub fn reference() -> Self {
        Self::default()
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        let bad = |field, reason: &str| Err(ScanError::Config { field, reason: reason.into() });
        for (field, v) in [
            ("re_min", self.re_min),
            ("re_max", self.re_max),
            ("im_min", self.im_min),
            ("im_max", self.im_max),
        ] {
            if !v.is_finite() {
                return bad(field, "must be finite");
            }
        }
        if self.re_min >= self.re_max {
            return bad("re_min", "must be less than re_max");
        }
        if self.im_min >= self.im_max {
            return bad("im_min", "must be less than im_max");
        }
        if self.nx == 0 {
            return bad("nx", "must be at least 1");
        }
        if self.ny == 0 {
            return bad("ny", "must be at least 1");
        }
        if self.truncation == 0 {
            return bad("truncation", "must be at least 1");
        }
        if !(self.boundary_tol > 0.0 && self.boundary_tol.is_finite()) {
            return bad("boundary_tol", "must be positive and finite");
        }
        if self.divergence_threshold.is_nan() || self.divergence_threshold <= 0.0 {
            return bad("divergence_threshold", "must be positive");
        }
        Ok(())
    }

    fn axis(min: f64, max: f64, n: usize, i: usize) -> f64 {
        if n == 1 {
            min
        } else {
            min + (max - min) * i as f64 / (n - 1) as f64
        }
    }

    pub fn re_at(&self, ix: usize) -> f64 {
        Self::axis(self.re_min, self.re_max, self.nx, ix)
    }

    /// Rows run from `im_max` down, as in an image.
    pub fn im_at(&self, iy: usize) -> f64 {
        if self.ny == 1 {
            self.im_min
        } else {
            Self::axis(self.im_max, self.im_min, self.ny, iy)
        }
    }

    /// Lattice points in row-major order: index `iy·nx + ix`.
    pub fn lattice(&self) -> Vec<ComplexScalar> {
        (0..self.ny)
            .flat_map(|iy| (0..self.nx).map(move |ix| (ix, iy)))
            .map(|(ix, iy)| {
                ComplexScalar::new(self.re_at(ix), self.im_at(iy)).expect("validated finite bounds")
            })
            .collect()
    }

    pub fn classifier(&self) -> ClassifierConfig {
        ClassifierConfig { boundary_tol: self.boundary_tol }
    }

    pub fn numerics(&self) -> NumericsConfig {
        NumericsConfig {
            truncation: self.truncation,
            column: self.column,
            divergence_threshold: self.divergence_threshold,
            ..NumericsConfig::default()
        }
    }
}

/// One lattice point, with fields named after the CSV columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub re: f64,
    pub im: f64,
    pub region: String,
    pub goldberg: String,
    pub in_ap: bool,
    pub in_delta: bool,
    pub in_co: bool,
    pub adjoint_eigen: bool,
    pub resolvent_bound: Option<f64>,
    pub growth_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&PointClassification> for ScanRow {
    fn from(p: &PointClassification) -> Self {
        let d = p.diagnostics.as_ref();
        Self {
            re: p.alpha.re(),
            im: p.alpha.im(),
            region: p.region.as_str().to_string(),
            goldberg: p.goldberg.to_string(),
            in_ap: p.in_ap,
            in_delta: p.in_delta,
            in_co: p.in_co,
            adjoint_eigen: p.adjoint_eigen,
            resolvent_bound: d.and_then(|d| d.resolvent_bound),
            growth_class: d.and_then(|d| d.growth_class).map(|g| g.as_str().to_string()),
            note: d.and_then(|d| d.note.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RegionCensus {
    pub resolvent: usize,
    pub point: usize,
    pub continuous: usize,
    pub residual: usize,
}

impl RegionCensus {
    pub fn add(&mut self, region: SpectralRegion) {
        match region {
            SpectralRegion::ResolventSet => self.resolvent += 1,
            SpectralRegion::PointSpectrum => self.point += 1,
            SpectralRegion::ContinuousSpectrum => self.continuous += 1,
            SpectralRegion::ResidualSpectrum => self.residual += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.resolvent + self.point + self.continuous + self.residual
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub census: RegionCensus,
    pub violations: usize,
    pub total_checked: usize,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn regions(&self) -> impl Iterator<Item = Option<SpectralRegion>> + '_ {
        self.rows.iter().map(|r| SpectralRegion::parse(&r.region))
    }
}

/// Classifies every lattice point and runs the consistency suite over the lattice.
///
/// Points are classified in parallel; rows come back in lattice order.
pub fn run_scan(config: &ScanConfig) -> Result<ScanReport, ScanError> {
    config.validate()?;
    let grid = config.lattice();
    let classifier = config.classifier();
    let numerics = config.numerics();

    let points: Vec<PointClassification> = grid
        .par_iter()
        .map(|&alpha| {
            if config.with_numerics {
                classify_point_with_numerics(alpha, &classifier, &numerics)
            } else {
                classify_point_with(alpha, &classifier)
            }
        })
        .collect();

    let mut census = RegionCensus::default();
    for p in &points {
        census.add(p.region);
    }
    let consistency = consistency_suite_with(&grid, &classifier)?;

    Ok(ScanReport {
        config: config.clone(),
        census,
        violations: consistency.violations.len(),
        total_checked: consistency.total_checked,
        rows: points.iter().map(ScanRow::from).collect(),
    })
}
