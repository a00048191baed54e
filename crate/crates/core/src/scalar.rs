use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};

/// A finite complex number: the spectral parameter and every matrix entry.
///
/// Construction through [`ComplexScalar::new`] rejects NaN and infinities. The
/// arithmetic operators do not re-check; callers that may overflow should go
/// through [`ComplexScalar::checked`].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "Complex64", into = "Complex64")]
pub struct ComplexScalar(Complex64);

impl ComplexScalar {
    pub const ZERO: Self = Self(Complex64::new(0.0, 0.0));
    pub const ONE: Self = Self(Complex64::new(1.0, 0.0));

    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::checked(Complex64::new(re, im))
    }

    pub fn checked(z: Complex64) -> Result<Self> {
        if !z.re.is_finite() {
            return Err(SpectrumError::NonFinite { context: "real part", value: z.re });
        }
        if !z.im.is_finite() {
            return Err(SpectrumError::NonFinite { context: "imaginary part", value: z.im });
        }
        Ok(Self(z))
    }

    /// Real scalar; panics on non-finite input, so only use it with literals.
    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0).expect("finite real literal")
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn modulus(self) -> f64 {
        self.0.norm()
    }

    pub fn is_zero(self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

impl From<ComplexScalar> for Complex64 {
    fn from(z: ComplexScalar) -> Self {
        z.0
    }
}

impl TryFrom<Complex64> for ComplexScalar {
    type Error = SpectrumError;

    fn try_from(z: Complex64) -> Result<Self> {
        Self::checked(z)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ComplexScalar {
            type Output = ComplexScalar;

            fn $method(self, rhs: ComplexScalar) -> ComplexScalar {
                ComplexScalar(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ComplexScalar {
    type Output = ComplexScalar;

    fn neg(self) -> ComplexScalar {
        ComplexScalar(-self.0)
    }
}
