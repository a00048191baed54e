use thiserror::Error;

pub type Result<T> = std::result::Result<T, SpectrumError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// `1 − α = 0`: the diagonal of `Δ − αI` vanishes and the triangle has no inverse.
    #[error("singular shift: the diagonal of Δ − αI vanishes at α = {re} + {im}i")]
    SingularShift { re: f64, im: f64 },

    #[error("non-finite value {value} in {context}")]
    NonFinite { context: &'static str, value: f64 },

    /// A Goldberg state that cannot occur for a bounded operator on a Banach space.
    #[error("Goldberg state {0} cannot occur for a bounded operator on a Banach space")]
    ImpossibleState(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
