//! Goldberg's states for `αI − T` and the subspectra each state places `α` in.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};

/// Condition on the range `R(αI − T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RangeCondition {
    /// `R = X`.
    A,
    /// `R ≠ closure(R) = X`.
    B,
    /// `closure(R) ≠ X`.
    C,
}

/// Condition on the inverse `(αI − T)^{−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InverseCondition {
    /// Exists and is continuous.
    Bounded,
    /// Exists but is discontinuous.
    Unbounded,
    /// Does not exist.
    Missing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct GoldbergState {
    pub range: RangeCondition,
    pub inverse: InverseCondition,
}

impl GoldbergState {
    pub const fn new(range: RangeCondition, inverse: InverseCondition) -> Self {
        Self { range, inverse }
    }

    /// All nine combinations, row by row.
    pub fn all() -> [GoldbergState; 9] {
        use InverseCondition::*;
        use RangeCondition::*;
        let mut out = [Self::new(A, Bounded); 9];
        let mut i = 0;
        for range in [A, B, C] {
            for inverse in [Bounded, Unbounded, Missing] {
                out[i] = Self::new(range, inverse);
                i += 1;
            }
        }
        out
    }
}

impl fmt::Display for GoldbergState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = match self.range {
            RangeCondition::A => 'A',
            RangeCondition::B => 'B',
            RangeCondition::C => 'C',
        };
        let col = match self.inverse {
            InverseCondition::Bounded => '1',
            InverseCondition::Unbounded => '2',
            InverseCondition::Missing => '3',
        };
        write!(f, "{row}{col}")
    }
}

impl FromStr for GoldbergState {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || SpectrumError::InvalidArgument(format!("not a Goldberg state: {s:?}"));
        let mut chars = s.chars();
        let (Some(row), Some(col), None) = (chars.next(), chars.next(), chars.next()) else {
            return Err(bad());
        };
        let range = match row {
            'A' => RangeCondition::A,
            'B' => RangeCondition::B,
            'C' => RangeCondition::C,
            _ => return Err(bad()),
        };
        let inverse = match col {
            '1' => InverseCondition::Bounded,
            '2' => InverseCondition::Unbounded,
            '3' => InverseCondition::Missing,
            _ => return Err(bad()),
        };
        Ok(Self::new(range, inverse))
    }
}

impl From<GoldbergState> for String {
    fn from(s: GoldbergState) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for GoldbergState {
    type Error = SpectrumError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Which parts of the plane a value of `α` belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Membership {
    pub resolvent: bool,
    pub point: bool,
    pub continuous: bool,
    pub residual: bool,
    pub ap: bool,
    pub delta: bool,
    pub co: bool,
}

impl Membership {
    pub fn in_spectrum(&self) -> bool {
        !self.resolvent
    }
}

/// Table lookup from a Goldberg state to the subspectra it implies.
///
/// `A2` is rejected: a bounded operator that is onto with an inverse has a
/// bounded inverse by the closed graph theorem.
pub fn goldberg_membership(state: GoldbergState) -> Result<Membership> {
    use InverseCondition::*;
    use RangeCondition::*;
    let none = Membership::default();
    let m = match (state.range, state.inverse) {
        (A, Bounded) | (B, Bounded) => Membership { resolvent: true, ..none },
        (A, Unbounded) => return Err(SpectrumError::ImpossibleState(state.to_string())),
        (A, Missing) => Membership { point: true, ap: true, ..none },
        (B, Unbounded) => Membership { continuous: true, ap: true, delta: true, ..none },
        (B, Missing) => Membership { point: true, ap: true, delta: true, ..none },
        (C, Bounded) => Membership { residual: true, delta: true, co: true, ..none },
        (C, Unbounded) => Membership { residual: true, ap: true, delta: true, co: true, ..none },
        (C, Missing) => Membership { point: true, ap: true, delta: true, co: true, ..none },
    };
    Ok(m)
}
