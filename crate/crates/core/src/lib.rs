//! Numerical certification of sharp bounds on the second Hankel determinant
//! of logarithmic coefficients, `|gamma1 gamma3 - gamma2^2|`, over five
//! classes of close-to-convex functions.
//!
//! The pipeline: Schur parameters map to Caratheodory coefficients
//! ([`caratheodory`]), each class builds its member function from `p`
//! through its defining differential relation ([`classes`]), the functional
//! is evaluated by three independent routes ([`functionals`]), and the
//! verifier sweeps the full parameter domain, compares against each sharp
//! bound, and emits machine-readable reports ([`verifier`], [`report`]).
//! The disk-maximum lemma backing the proofs ships with a brute-force
//! oracle ([`ykm`]).
//!
//! Everything is generic over the floating-point scalar ([`scalar::Scalar`]);
//! the aliases below fix `f64`, which is what the CLI and the acceptance
//! suite use.

pub mod caratheodory;
pub mod classes;
pub mod error;
pub mod eta;
pub mod functionals;
pub mod report;
pub mod scalar;
pub mod series;
pub mod verifier;
pub mod ykm;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// f64 series.
pub type Series = series::TruncatedSeries<f64>;
/// f64 Schur parameters.
pub type Schur = caratheodory::SchurParams<f64>;
/// f64 Caratheodory coefficient triple.
pub type Coeffs = caratheodory::CaratheodoryCoeffs<f64>;
/// f64 rational witness.
pub type Witness = caratheodory::RationalWitness<f64>;
/// f64 class member.
pub type Function = classes::ClassFunction<f64>;
/// f64 logarithmic coefficients.
pub type LogCoeffs = functionals::LogCoeffVector<f64>;
/// f64 case-coefficient triple.
pub type CaseCoeffs = functionals::CaseCoefficients<f64>;
/// f64 verification report.
pub type Report = verifier::BoundReport<f64>;
/// f64 complex value.
pub type C64 = num_complex::Complex<f64>;
