//! Fine-spectrum toolkit for the difference operator on the Hahn sequence space `h`.
//!
//! The crate is split along the lines of the analysis:
//!
//! - [`sequences`]: truncated sequences and the norms/functionals of `h`, `ℓ1` and `ρ∞`.
//! - [`operators`]: constant-coefficient band matrices (the difference operator, its
//!   shifts and transpose) and their dense finite sections.
//! - [`resolvent`]: closed-form resolvent entries of `Δ − αI`, a forward-substitution
//!   oracle and the ratio-test bound on the `(h:h)` norm.
//! - [`spectral`]: the analytic classifier (resolvent set, point/continuous/residual,
//!   approximate point/defect/compression, Goldberg states) with its numerical
//!   cross-checks.
//!
//! The canonical `Δ` used throughout is the lower-bidiagonal matrix
//! (`1` on the diagonal, `−1` below it); the upper-bidiagonal form is its transpose.
//!
//! ```
//! use hahn_core::{classify_point, hahn_norm, ComplexScalar, SpectralRegion, TruncatedSequence};
//!
//! let alpha = ComplexScalar::new(1.5, 0.0)?;
//! let c = classify_point(alpha);
//! assert_eq!(c.region, SpectralRegion::ResidualSpectrum);
//! assert_eq!(c.goldberg.to_string(), "C2");
//!
//! let x = TruncatedSequence::from_real(&[1.0, 0.5, 0.25])?;
//! assert_eq!(hahn_norm(&x), 2.75);
//! # Ok::<(), hahn_core::SpectrumError>(())
//! ```

pub mod error;
pub mod operators;
pub mod resolvent;
pub mod scalar;
pub mod sequences;
pub mod spectral;

pub use error::{Result, SpectrumError};
pub use operators::{backward_difference, forward_difference, BandedOperator, DenseMatrix};
pub use resolvent::{
    dense_solve_oracle, hahn_column_bound, hahn_column_functional, norm_bound_series, norm_bound_series_with,
    resolvent_entry, resolvent_truncation, ConvergenceKind, ConvergenceVerdict,
};
pub use scalar::ComplexScalar;
pub use sequences::{
    abs_cesaro_functional, hahn_norm, l1_norm, rao_norm, rho_inf_functional, Gauge, TruncatedSequence,
    DEFAULT_DIVERGENCE_THRESHOLD,
};
pub use spectral::{
    adjoint_eigen_test, classify_point, classify_point_with, classify_point_with_numerics, consistency_suite,
    consistency_suite_with, eigen_recursion_solve, finite_section_growth, finite_section_growth_at,
    goldberg_membership, AdjointTest, AdjointVerdict, ClassifierConfig, ConsistencyReport, Diagnostics,
    EigenRecursion, GoldbergState, GrowthClass, GrowthReport, InverseCondition, KernelVerdict, Membership,
    NumericsConfig, PointClassification, RangeCondition, SpectralRegion, Violation,
};
