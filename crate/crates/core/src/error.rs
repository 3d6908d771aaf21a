//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Binary series operation on operands of different truncation order.
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Reciprocal of a series whose constant term is numerically zero.
    #[error("constant term modulus {modulus:.3e} is below the invertibility threshold")]
    SingularConstant { modulus: f64 },

    /// A series did not satisfy the required normalization.
    #[error("normalization error: {expected}")]
    NotNormalized { expected: &'static str },

    /// A parameter fell outside its admissible range.
    #[error("invalid parameter {name} = {value}")]
    InvalidParam { name: &'static str, value: f64 },

    /// A formula was evaluated outside the interval where it is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The positivity scan hit a zero of the witness denominator.
    #[error("denominator vanishes at r = {radius}, theta = {angle}")]
    PoleOnGrid { radius: f64, angle: f64 },

    /// Bisection bracket does not straddle a root; signals a transcription bug.
    #[error("no sign change of X' on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Search configuration failed validation.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
