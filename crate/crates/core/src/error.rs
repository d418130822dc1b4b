use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain violation: {0}")]
    Domain(String),

    /// The exponential factor of the result does not fit the `f64` range.
    /// Use the `*_scaled` variants to obtain a mantissa and exponent.
    #[error("overflow: result scale e^{exponent} is outside the floating range")]
    Overflow { exponent: f64 },

    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    #[error("iteration failed to converge after {iterations} steps: {what}")]
    NonConvergence { what: String, iterations: usize },

    #[error("zero-norm input")]
    ZeroNorm,

    #[error("window-empty: no admissible beta in (3/2, pi/|gamma|) for gamma = {gamma}")]
    WindowEmpty { gamma: f64 },

    #[error("beta = {beta} outside the admissible window ({lo}, {hi})")]
    BetaOutsideWindow { beta: f64, lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
