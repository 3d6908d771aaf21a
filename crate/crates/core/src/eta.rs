//! The per-class bound polynomials `X(x)` and their stationary points.
//!
//! Three of the sharp bounds are `X(eta)` (up to a fixed scale) where `eta`
//! is the unique real root of `X'(x) = 0` inside a known bracket. The
//! quartics are differentiated term-wise; the rational `X` is
//! differentiated in closed form by the quotient rule so the bracket stays
//! robust.

use crate::classes::GeometricClass;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Bisection tolerance on the bracket width.
pub const ETA_TOL: f64 = 1e-12;

/// How a class's sharp bound is produced.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundKind {
    /// The constant 1/4.
    Quarter,
    /// Quartic `X` (ascending coefficients) evaluated at `eta` and divided
    /// by 2304.
    QuarticOver2304([i64; 5]),
    /// `(1+x)(x^4 + 20x^3 - 114x^2 + 4x + 125) / (48 (17+x))` at `eta`.
    RationalX,
}

/// Static description of a class's bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundSpec {
    pub tag: GeometricClass,
    pub kind: BoundKind,
    /// Bisection bracket for `X'(x) = 0`; `None` for constant bounds.
    pub eta_bracket: Option<(f64, f64)>,
}

/// The bound descriptor for each class.
pub fn bound_spec(tag: GeometricClass) -> BoundSpec {
    let (kind, eta_bracket) = match tag {
        GeometricClass::Ss | GeometricClass::F2 => (BoundKind::Quarter, None),
        GeometricClass::F1 => (
            BoundKind::QuarticOver2304([357, 24, -392, -96, -48]),
            Some((0.0, 0.1)),
        ),
        GeometricClass::F3 => (
            BoundKind::QuarticOver2304([469, 328, -264, -224, -176]),
            Some((0.2, 0.5)),
        ),
        GeometricClass::F4 => (BoundKind::RationalX, Some((0.3369, 0.9))),
    };
    BoundSpec {
        tag,
        kind,
        eta_bracket,
    }
}

fn horner<T: Scalar>(coeffs: &[i64], x: T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * x + T::int(c))
}

/// Numerator `P(x) = (1 + x)(x^4 + 20 x^3 - 114 x^2 + 4 x + 125)` of the
/// rational bound.
fn rational_numerator<T: Scalar>(x: T) -> T {
    (T::one() + x) * horner(&[125, 4, -114, 20, 1], x)
}

fn rational_numerator_prime<T: Scalar>(x: T) -> T {
    horner(&[125, 4, -114, 20, 1], x) + (T::one() + x) * horner(&[4, -228, 60, 4], x)
}

/// The class's bound function `X(x)` (unscaled for the quartics).
pub fn x_value<T: Scalar>(tag: GeometricClass, x: T) -> Result<T> {
    match bound_spec(tag).kind {
        BoundKind::Quarter => Err(Error::Domain(format!(
            "class {tag} has no bound polynomial"
        ))),
        BoundKind::QuarticOver2304(c) => Ok(horner(&c, x)),
        BoundKind::RationalX => Ok(rational_numerator(x) / (T::int(48) * (T::int(17) + x))),
    }
}

/// Closed-form `X'(x)`; the rational case uses the quotient rule.
pub fn x_prime<T: Scalar>(tag: GeometricClass, x: T) -> Result<T> {
    match bound_spec(tag).kind {
        BoundKind::Quarter => Err(Error::Domain(format!(
            "class {tag} has no bound polynomial"
        ))),
        BoundKind::QuarticOver2304(c) => {
            let d = [c[1], 2 * c[2], 3 * c[3], 4 * c[4]];
            Ok(horner(&d, x))
        }
        BoundKind::RationalX => {
            let s = T::int(17) + x;
            Ok((s * rational_numerator_prime(x) - rational_numerator(x)) / (T::int(48) * s * s))
        }
    }
}

/// Unique root of `X'(x) = 0` in the class's bracket, by bisection to
/// [`ETA_TOL`].
pub fn eta_root<T: Scalar>(tag: GeometricClass) -> Result<T> {
    let (lo_f, hi_f) = bound_spec(tag)
        .eta_bracket
        .ok_or_else(|| Error::Domain(format!("class {tag} has no eta root")))?;
    let mut lo = T::lit(lo_f);
    let mut hi = T::lit(hi_f);
    let flo = x_prime(tag, lo)?;
    let fhi = x_prime(tag, hi)?;
    if flo == T::zero() {
        return Ok(lo);
    }
    if fhi == T::zero() {
        return Ok(hi);
    }
    if (flo > T::zero()) == (fhi > T::zero()) {
        return Err(Error::NoSignChange { lo: lo_f, hi: hi_f });
    }
    let tol = T::lit(ETA_TOL);
    while hi - lo > tol {
        let mid = (lo + hi) / T::int(2);
        if mid <= lo || mid >= hi {
            break; // bracket narrower than scalar resolution
        }
        let fmid = x_prime(tag, mid)?;
        if fmid == T::zero() {
            return Ok(mid);
        }
        if (fmid > T::zero()) == (flo > T::zero()) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / T::int(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_roots_match_reference_values() {
        let e1: f64 = eta_root(GeometricClass::F1).unwrap();
        let e3: f64 = eta_root(GeometricClass::F3).unwrap();
        let e4: f64 = eta_root(GeometricClass::F4).unwrap();
        assert!((e1 - 0.0302689).abs() < 1e-5);
        assert!((e3 - 0.373776).abs() < 1e-5);
        assert!((e4 - 0.381423).abs() < 1e-5);
        // high-precision references
        assert!((e1 - 0.03026888794527576).abs() < 1e-12);
        assert!((e3 - 0.373775625749452).abs() < 1e-12);
        assert!((e4 - 0.38142302700250413).abs() < 1e-12);
    }

    #[test]
    fn eta_roots_are_stationary() {
        for tag in [GeometricClass::F1, GeometricClass::F3, GeometricClass::F4] {
            let eta: f64 = eta_root(tag).unwrap();
            assert!(
                x_prime(tag, eta).unwrap().abs() <= 1e-8,
                "{tag}: X'(eta) not stationary"
            );
        }
    }

    #[test]
    fn quartic_derivatives_match_printed_expansions() {
        // F1: X' = -192 x^3 - 288 x^2 - 784 x + 24
        for &x in &[0.0, 0.25, 0.7] {
            let direct = -192.0 * x * x * x - 288.0 * x * x - 784.0 * x + 24.0;
            assert!((x_prime::<f64>(GeometricClass::F1, x).unwrap() - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn brackets_straddle_and_lie_inside_unit_interval() {
        for tag in [GeometricClass::F1, GeometricClass::F3, GeometricClass::F4] {
            let (lo, hi) = bound_spec(tag).eta_bracket.unwrap();
            assert!(0.0 <= lo && lo < hi && hi < 1.0);
            let flo: f64 = x_prime(tag, lo).unwrap();
            let fhi: f64 = x_prime(tag, hi).unwrap();
            assert!(flo * fhi < 0.0, "{tag}: bracket must straddle the root");
        }
    }

    #[test]
    fn no_bound_polynomial_for_constant_bound_classes() {
        assert!(eta_root::<f64>(GeometricClass::Ss).is_err());
        assert!(eta_root::<f64>(GeometricClass::F2).is_err());
        assert_eq!(bound_spec(GeometricClass::Ss).kind, BoundKind::Quarter);
    }

    #[test]
    fn f32_root_is_close() {
        let e1: f32 = eta_root(GeometricClass::F1).unwrap();
        assert!((e1 - 0.030268888).abs() < 1e-5);
    }
}
