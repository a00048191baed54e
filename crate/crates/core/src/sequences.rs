//! Finite prefixes of complex sequences and the functionals of `h`, `ℓ1` and `ρ∞`.
//!
//! Storage is 0-based: `values[i]` holds `x_{i+1}` and carries weight `i + 1` in the
//! weighted sums. Everything past the stored prefix is zero, so the last forward
//! difference is `Δx_N = x_N`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};
use crate::scalar::ComplexScalar;

/// Values past this are reported as divergent by [`Gauge`].
pub const DEFAULT_DIVERGENCE_THRESHOLD: f64 = 1e12;

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TruncatedSequence {
    values: Vec<Complex64>,
}

impl TruncatedSequence {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|z| !(z.re.is_finite() && z.im.is_finite())) {
            let value = if bad.re.is_finite() { bad.im } else { bad.re };
            return Err(SpectrumError::NonFinite { context: "sequence entry", value });
        }
        Ok(Self { values })
    }

    pub fn from_scalars(values: &[ComplexScalar]) -> Self {
        Self { values: values.iter().map(|z| z.value()).collect() }
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Builds `x_k = f(k)` for `k = 1..=n`.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> Complex64) -> Result<Self> {
        Self::new((1..=n).map(f).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self { values: vec![Complex64::new(0.0, 0.0); n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.values
    }

    /// Entry `x_k` in 1-based notation; zero past the prefix.
    pub fn term(&self, k: usize) -> Complex64 {
        match k {
            0 => Complex64::new(0.0, 0.0),
            _ => self.values.get(k - 1).copied().unwrap_or_default(),
        }
    }

    /// Extends the prefix with zeros; the represented sequence does not change.
    pub fn padded(&self, n: usize) -> Self {
        let mut values = self.values.clone();
        if n > values.len() {
            values.resize(n, Complex64::new(0.0, 0.0));
        }
        Self { values }
    }

    pub fn scaled(&self, c: Complex64) -> Result<Self> {
        Self::new(self.values.iter().map(|&z| c * z).collect())
    }

    /// Forward differences `x_k − x_{k+1}` for `k = 1..=N`, zero tail included.
    pub fn forward_differences(&self) -> impl Iterator<Item = Complex64> + '_ {
        let n = self.values.len();
        (0..n).map(move |i| {
            let next = if i + 1 < n { self.values[i + 1] } else { Complex64::new(0.0, 0.0) };
            self.values[i] - next
        })
    }

    pub fn sup_modulus(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// A functional value together with its divergence flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gauge {
    pub value: f64,
    pub exceeded: bool,
}

impl Gauge {
    pub fn of(value: f64, threshold: f64) -> Self {
        Self { value, exceeded: value.is_nan() || value > threshold }
    }
}

/// `Σ_k k·|x_k − x_{k+1}| + sup_k |x_k|`.
pub fn hahn_norm(x: &TruncatedSequence) -> f64 {
    rao_norm(x) + x.sup_modulus()
}

/// `Σ_k k·|x_k − x_{k+1}|`.
pub fn rao_norm(x: &TruncatedSequence) -> f64 {
    x.forward_differences().enumerate().map(|(i, d)| (i + 1) as f64 * d.norm()).sum()
}

pub fn l1_norm(x: &TruncatedSequence) -> f64 {
    x.as_slice().iter().map(|z| z.norm()).sum()
}

/// `sup_n n⁻¹·|Σ_{k≤n} x_k|`, the gauge of the β-dual `ρ∞`.
pub fn rho_inf_functional(x: &TruncatedSequence) -> Result<f64> {
    if x.is_empty() {
        return Err(SpectrumError::EmptyInput("ρ∞ functional needs at least one term"));
    }
    let mut partial = Complex64::new(0.0, 0.0);
    let mut best = 0.0_f64;
    for (i, &z) in x.as_slice().iter().enumerate() {
        partial += z;
        best = best.max(partial.norm() / (i + 1) as f64);
    }
    Ok(best)
}

/// `sup_n n⁻¹·Σ_{k≤n} |x_k|`.
pub fn abs_cesaro_functional(x: &TruncatedSequence) -> Result<f64> {
    if x.is_empty() {
        return Err(SpectrumError::EmptyInput("Cesàro functional needs at least one term"));
    }
    let mut partial = 0.0_f64;
    let mut best = 0.0_f64;
    for (i, z) in x.as_slice().iter().enumerate() {
        partial += z.norm();
        best = best.max(partial / (i + 1) as f64);
    }
    Ok(best)
}
