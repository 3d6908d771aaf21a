//! Logarithmic coefficients and the determinant functional.
//!
//! The target quantity is `H = gamma1 gamma3 - gamma2^2` where `gamma_n` are
//! half the Taylor coefficients of `log(f(z)/z)`. It is computed by three
//! independent routes: the series route ([`log_coeffs`] + [`h21_log`]), the
//! closed quartic in `(a2, a3, a4)` ([`h21_log_from_a`]), and the per-class
//! expansions in Schur parameters ([`zeta_form_value`]). The quartic is the
//! primary route (it is the expression the bounds constrain); the others are
//! cross-checks.

use num_complex::Complex;

use crate::caratheodory::{CaratheodoryCoeffs, SchurParams};
use crate::classes::{closed_form_a234, ss_printed_a234, ClassFunction, GeometricClass};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// First three logarithmic coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogCoeffVector<T> {
    pub gamma1: Complex<T>,
    pub gamma2: Complex<T>,
    pub gamma3: Complex<T>,
}

/// Which `a4` convention feeds the symmetric-points functional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsVariant {
    /// `a4 = (c1 c2 - 2 c3)/8` as circulated in print.
    Printed,
    /// `a4 = (c1 c2 + 2 c3)/8`, forced by the defining relation.
    Recurrence,
}

/// `gamma_n = [log(f/z)]_n / 2` for `n = 1, 2, 3`, via the series route.
pub fn log_coeffs<T: Scalar>(f: &ClassFunction<T>) -> LogCoeffVector<T> {
    let s = f.series();
    assert!(s.order() >= 4, "need coefficients through a4");
    // f/z: drop the vanishing constant term
    let shifted = TruncatedSeries::new(s.coeffs()[1..].to_vec());
    let l = shifted.log().expect("class functions have a1 = 1");
    let half = Complex::new(T::ratio(1, 2), T::zero());
    LogCoeffVector {
        gamma1: l.coeff(1) * half,
        gamma2: l.coeff(2) * half,
        gamma3: l.coeff(3) * half,
    }
}

/// The printed closed forms
/// `gamma1 = a2/2`, `gamma2 = (a3 - a2^2/2)/2`, `gamma3 = (a4 - a2 a3 + a2^3/3)/4`.
///
/// The `gamma3` prefactor 1/4 is kept verbatim even though the series
/// expansion of `log(f/z)` gives 1/2 (see [`gamma_from_coeffs`]); the unit
/// tests pin both conventions so the discrepancy stays visible.
pub fn gamma_closed_form<T: Scalar>(
    a2: Complex<T>,
    a3: Complex<T>,
    a4: Complex<T>,
) -> LogCoeffVector<T> {
    let r = |n: i64, d: i64| Complex::new(T::ratio(n, d), T::zero());
    LogCoeffVector {
        gamma1: a2 * r(1, 2),
        gamma2: (a3 - a2 * a2 * r(1, 2)) * r(1, 2),
        gamma3: (a4 - a2 * a3 + a2 * a2 * a2 * r(1, 3)) * r(1, 4),
    }
}

/// Series-consistent closed forms: same as [`gamma_closed_form`] but with
/// `gamma3 = (a4 - a2 a3 + a2^3/3)/2`, which is what `log(f/z)` yields and
/// what makes `h21_log` agree with [`h21_log_from_a`].
pub fn gamma_from_coeffs<T: Scalar>(
    a2: Complex<T>,
    a3: Complex<T>,
    a4: Complex<T>,
) -> LogCoeffVector<T> {
    let r = |n: i64, d: i64| Complex::new(T::ratio(n, d), T::zero());
    LogCoeffVector {
        gamma1: a2 * r(1, 2),
        gamma2: (a3 - a2 * a2 * r(1, 2)) * r(1, 2),
        gamma3: (a4 - a2 * a3 + a2 * a2 * a2 * r(1, 3)) * r(1, 2),
    }
}

/// `gamma1 gamma3 - gamma2^2`.
pub fn h21_log<T: Scalar>(g: &LogCoeffVector<T>) -> Complex<T> {
    g.gamma1 * g.gamma3 - g.gamma2 * g.gamma2
}

/// `H = (a2 a4 - a3^2 + a2^4/12) / 4`, the quartic form of the functional.
pub fn h21_log_from_a<T: Scalar>(a2: Complex<T>, a3: Complex<T>, a4: Complex<T>) -> Complex<T> {
    let r = |n: i64, d: i64| Complex::new(T::ratio(n, d), T::zero());
    (a2 * a4 - a3 * a3 + a2 * a2 * a2 * a2 * r(1, 12)) * r(1, 4)
}

/// The Fekete-Szego functional `a3 - a2^2`.
pub fn fekete_szego<T: Scalar>(a2: Complex<T>, a3: Complex<T>) -> Complex<T> {
    a3 - a2 * a2
}

/// Quartic-route `H` straight from Schur parameters.
pub fn h21_schur<T: Scalar>(tag: GeometricClass, params: &SchurParams<T>) -> Complex<T> {
    h21_schur_raw(
        tag,
        params.zeta1(),
        params.zeta2(),
        params.zeta3(),
        SsVariant::Recurrence,
    )
}

/// Same as [`h21_schur`] but skipping parameter validation; the grid sweep
/// and polish call this with values already projected into the domain.
pub fn h21_schur_raw<T: Scalar>(
    tag: GeometricClass,
    zeta1: T,
    zeta2: Complex<T>,
    zeta3: Complex<T>,
    variant: SsVariant,
) -> Complex<T> {
    let two = Complex::new(T::int(2), T::zero());
    let z1 = Complex::new(zeta1, T::zero());
    let w = Complex::new(T::one() - zeta1 * zeta1, T::zero());
    let defect = Complex::new(T::one() - zeta2.norm_sqr(), T::zero());
    let c1 = two * z1;
    let c2 = two * z1 * z1 + two * w * zeta2;
    let c3 = two * z1 * z1 * z1 + two * two * w * z1 * zeta2 - two * w * z1 * zeta2 * zeta2
        + two * w * defect * zeta3;
    let cs = CaratheodoryCoeffs { c1, c2, c3 };
    let t = match (tag, variant) {
        (GeometricClass::Ss, SsVariant::Printed) => ss_printed_a234(&cs),
        _ => closed_form_a234(tag, &cs),
    };
    h21_log_from_a(t.a2, t.a3, t.a4)
}

/// Evaluates the printed Schur-parameter expansion of the functional for
/// the class. For the symmetric-points class this is the printed-sign
/// variant; see [`zeta_form_value_variant`].
pub fn zeta_form_value<T: Scalar>(tag: GeometricClass, params: &SchurParams<T>) -> Complex<T> {
    zeta_form_value_variant(tag, params, SsVariant::Printed)
}

/// Printed expansion with an explicit variant choice for the
/// symmetric-points class (the other classes have a single form).
pub fn zeta_form_value_variant<T: Scalar>(
    tag: GeometricClass,
    params: &SchurParams<T>,
    variant: SsVariant,
) -> Complex<T> {
    let t = params.zeta1();
    let z2 = params.zeta2();
    let z3 = params.zeta3();
    let m2 = z2.norm_sqr();
    let cr = |x: T| Complex::new(x, T::zero());
    let ri = |n: i64| cr(T::int(n));
    let one = ri(1);
    let two = ri(2);
    let t1 = cr(t);
    let t2 = cr(t * t);
    let t3 = cr(t * t * t);
    let t4 = cr(t * t * t * t);

    match tag {
        GeometricClass::Ss => match variant {
            SsVariant::Printed => {
                // (6 z2^2 (5t^2 - 3t^4 - 2) - 11 t^4
                //  - 6 t (1-t^2) z3 (1-|z2|^2) - 30 z2 t^2 (1-t^2)) / 48
                let w = T::one() - t * t;
                (ri(6) * z2 * z2 * cr(T::int(5) * t * t - T::int(3) * t * t * t * t - T::int(2))
                    - ri(11) * t4
                    - ri(6) * cr(t * w) * z3 * cr(T::one() - m2)
                    - ri(30) * z2 * cr(t * t * w))
                    * cr(T::ratio(1, 48))
            }
            SsVariant::Recurrence => {
                // (t^4 - 6 t^2 (1-t^2) z2 - 6 (1-t^2)(2-t^2) z2^2
                //  + 6 t (1-t^2)(1-|z2|^2) z3) / 48
                let w = T::one() - t * t;
                (t4 - ri(6) * cr(t * t * w) * z2 - ri(6) * cr(w * (T::int(2) - t * t)) * z2 * z2
                    + ri(6) * cr(t * w * (T::one() - m2)) * z3)
                    * cr(T::ratio(1, 48))
            }
        },
        GeometricClass::F2 => {
            // (t^4 (5 - 4 z2 + 2 z2^2) + 2 t^2 (1 + 10 z2 + 7 z2^2)
            //  - 4 (1 + 2 z2)^2 + 18 t z3 (1-t^2)(1-|z2|^2)) / 144
            let w = T::one() - t * t;
            let lin = one + two * z2;
            (t4 * (ri(5) - ri(4) * z2 + two * z2 * z2)
                + two * t2 * (one + ri(10) * z2 + ri(7) * z2 * z2)
                - ri(4) * lin * lin
                + ri(18) * cr(t * w * (T::one() - m2)) * z3)
                * cr(T::ratio(1, 144))
        }
        GeometricClass::F1 => {
            // (72 (1+2t) (1 + 2 z3 (1-|z2|^2) + 2t (1 + 2 z2 - z2^2) + 2 z2
            //             + 2 t^3 (1-z2)^2 - 2 t^2 (z3 (1-|z2|^2) + z2 - 1))
            //  + 3 (1+2t)^4 - 64 (1 + 2(t+z2) + 2 t^2 (1-z2))^2) / 2304
            let defect = cr(T::one() - m2);
            let u = T::one() + T::int(2) * t;
            let inner = one
                + two * z3 * defect
                + two * t1 * (one + two * z2 - z2 * z2)
                + two * z2
                + two * t3 * (one - z2) * (one - z2)
                - two * t2 * (z3 * defect + z2 - one);
            let quad = one + two * (t1 + z2) + two * t2 * (one - z2);
            (cr(T::int(72) * u) * inner + cr(T::int(3) * u * u * u * u) - ri(64) * quad * quad)
                * cr(T::ratio(1, 2304))
        }
        GeometricClass::F3 => {
            // (1+2t)(2 t^3 (1-z2)^2 + 2 t z2 (2-z2) + 2 (z2+z3) - 1
            //        + 2 t^2 (1 - z2 - z3 (1-|z2|^2)) - 2 z3 |z2|^2) / 32
            // + (1+2t)^4 / 768 - (t + z2 + (1-z2) t^2)^2 / 9
            let defect = cr(T::one() - m2);
            let u = T::one() + T::int(2) * t;
            let inner =
                two * t3 * (one - z2) * (one - z2) + two * t1 * z2 * (two - z2) + two * (z2 + z3)
                    - one
                    + two * t2 * (one - z2 - z3 * defect)
                    - two * z3 * cr(m2);
            let quad = t1 + z2 + (one - z2) * t2;
            cr(u) * inner * cr(T::ratio(1, 32)) + cr(u * u * u * u * T::ratio(1, 768))
                - quad * quad * cr(T::ratio(1, 9))
        }
        GeometricClass::F4 => {
            // (18 (1+t)^2 (t^2 (1-z2)^2 - t (z2^2 - 1 + z3 (1-|z2|^2))
            //              - z3 |z2|^2 + 2 z2 + z3 + 2)
            //  + 3 (1+t)^4 - 4 (3 + 4t + 2 z2 - 2 t^2 (z2-1))^2) / 144
            let defect = cr(T::one() - m2);
            let u = T::one() + t;
            let inner =
                t2 * (one - z2) * (one - z2) - t1 * (z2 * z2 - one + z3 * defect) - z3 * cr(m2)
                    + two * z2
                    + z3
                    + two;
            let quad = ri(3) + ri(4) * t1 + two * z2 - two * t2 * (z2 - one);
            (cr(T::int(18) * u * u) * inner + cr(T::int(3) * u * u * u * u) - ri(4) * quad * quad)
                * cr(T::ratio(1, 144))
        }
    }
}

/// The real triple `(A, B, C)` feeding the disk-maximum lemma for a class
/// at a given `zeta1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaseCoefficients<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

fn check_zeta1_domain<T: Scalar>(tag: GeometricClass, t: T) -> Result<()> {
    let open_at_zero = matches!(tag, GeometricClass::Ss | GeometricClass::F2);
    let ok = if open_at_zero {
        t > T::zero() && t < T::one()
    } else {
        t >= T::zero() && t < T::one()
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "zeta1 = {t} outside the valid range for class {tag}"
        )))
    }
}

/// The printed `(A, B, C)` for the class.
pub fn case_coefficients<T: Scalar>(tag: GeometricClass, zeta1: T) -> Result<CaseCoefficients<T>> {
    check_zeta1_domain(tag, zeta1)?;
    let t = zeta1;
    let w = T::one() - t * t;
    let r = T::ratio;
    let (a, b, c) = match tag {
        GeometricClass::Ss => (
            -T::int(11) * t * t * t / (T::int(6) * w),
            -T::int(5) * t,
            T::int(3) * t - T::int(2) / t,
        ),
        GeometricClass::F2 => (
            (T::int(5) * t.powi(4) + T::int(2) * t * t - T::int(4)) / (T::int(18) * t * w),
            -r(2, 9) * (T::int(4) - t * t) / t,
            -r(1, 9) * (T::int(8) + t * t) / t,
        ),
        GeometricClass::F1 => {
            let u = T::one() + T::int(2) * t;
            (
                (T::int(11) + T::int(56) * t - T::int(8) * t * t
                    + T::int(16) * t.powi(3)
                    + T::int(80) * t.powi(4))
                    / (T::int(144) * u * w),
                (T::int(4) * t * t + T::int(4) * t - T::int(7)) / (T::int(9) * u),
                -(T::int(2) * t * t + T::int(9) * t + T::int(16)) / (T::int(9) * u),
            )
        }
        GeometricClass::F3 => {
            let u = T::one() + T::int(2) * t;
            (
                (T::int(80) * t.powi(4) + T::int(16) * t.powi(3)
                    - T::int(40) * t * t
                    - T::int(120) * t
                    - T::int(69))
                    / (T::int(144) * u * w),
                (T::int(4) * t * t + T::int(4) * t + T::int(9)) / (T::int(9) * u),
                -(T::int(2) * t * t + T::int(9) * t + T::int(16)) / (T::int(9) * u),
            )
        }
        GeometricClass::F4 => {
            let u = T::one() + t;
            (
                (T::int(5) * t.powi(4) + T::int(2) * t.powi(3) - T::int(4) * t * t
                    + T::int(6) * t
                    + T::int(3))
                    / (T::int(18) * (T::one() - t) * u * u),
                -T::int(2) * (T::one() - t) * (T::int(3) + t) / (T::int(9) * u),
                -(T::int(8) + t) * r(1, 9),
            )
        }
    };
    Ok(CaseCoefficients { a, b, c })
}

/// Prefactor of the class's envelope inequality.
pub fn envelope_prefactor<T: Scalar>(tag: GeometricClass, zeta1: T) -> T {
    let t = zeta1;
    match tag {
        GeometricClass::Ss | GeometricClass::F2 => T::ratio(1, 8) * t * (T::one() - t * t),
        GeometricClass::F1 | GeometricClass::F3 => {
            T::ratio(1, 16) * (T::one() + T::int(2) * t) * (T::one() - t * t)
        }
        GeometricClass::F4 => T::ratio(1, 8) * (T::one() - t) * (T::one() + t) * (T::one() + t),
    }
}

/// Right-hand side of the class's envelope inequality:
/// `prefactor(zeta1) * (|A + B z2 + C z2^2| + 1 - |z2|^2)`.
pub fn envelope_value<T: Scalar>(tag: GeometricClass, zeta1: T, zeta2: Complex<T>) -> Result<T> {
    let cc = case_coefficients(tag, zeta1)?;
    let cr = |x: T| Complex::new(x, T::zero());
    let q = cr(cc.a) + cr(cc.b) * zeta2 + cr(cc.c) * zeta2 * zeta2;
    Ok(envelope_prefactor(tag, zeta1) * (q.norm() + T::one() - zeta2.norm_sqr()))
}
