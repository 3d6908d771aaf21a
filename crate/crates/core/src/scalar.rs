//! Floating-point scalar abstraction.
//!
//! Everything numeric in this crate is generic over [`Scalar`] so the same
//! formulas run in `f32` or `f64`. The certification suite and the CLI use
//! the `f64` aliases exported from the crate root; `f32` is only exercised
//! as a genericity smoke test at loose tolerances.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar backing all series and functional arithmetic.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Exact small-integer constant.
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer constant fits in scalar")
    }

    /// Rational constant n/d.
    fn ratio(n: i64, d: i64) -> Self {
        Self::int(n) / Self::int(d)
    }

    /// Decimal literal (tolerances, printed constants).
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    /// Lossy view as f64, for diagnostics and report serialization.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
