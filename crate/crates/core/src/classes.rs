//! The five function classes and their coefficient recipes.
//!
//! Each class is defined by a differential relation against a function `p`
//! with positive real part: `w(z) f'(z) = p(z)` for the four weighted
//! classes, and `2 z f'(z) = p(z) (f(z) - f(-z))` for functions starlike
//! with respect to symmetric points. `build_from_p` is the ground truth;
//! the closed-form coefficient recipes are documentation and cross-check.

use num_complex::Complex;

use crate::caratheodory::{CaratheodoryCoeffs, SchurParams};
use crate::error::{Error, Result};
use crate::eta;
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeometricClass {
    F1,
    F2,
    F3,
    F4,
    /// Starlike with respect to symmetric points.
    Ss,
}

impl GeometricClass {
    pub const ALL: [GeometricClass; 5] = [
        GeometricClass::F1,
        GeometricClass::F2,
        GeometricClass::F3,
        GeometricClass::F4,
        GeometricClass::Ss,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeometricClass::F1 => "f1",
            GeometricClass::F2 => "f2",
            GeometricClass::F3 => "f3",
            GeometricClass::F4 => "f4",
            GeometricClass::Ss => "ss",
        }
    }

    /// Ascending coefficients of the weight polynomial `w(z)`; `None` for
    /// the symmetric-points class, which has no weight.
    pub fn weight_coeffs<T: Scalar>(self) -> Option<[T; 3]> {
        let one = T::one();
        match self {
            GeometricClass::F1 => Some([one, -one, T::zero()]),
            GeometricClass::F2 => Some([one, T::zero(), -one]),
            GeometricClass::F3 => Some([one, -one, one]),
            GeometricClass::F4 => Some([one, -T::int(2), one]),
            GeometricClass::Ss => None,
        }
    }
}

impl std::str::FromStr for GeometricClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(GeometricClass::F1),
            "f2" => Ok(GeometricClass::F2),
            "f3" => Ok(GeometricClass::F3),
            "f4" => Ok(GeometricClass::F4),
            "ss" => Ok(GeometricClass::Ss),
            other => Err(Error::Domain(format!("unknown class '{other}'"))),
        }
    }
}

impl std::fmt::Display for GeometricClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Normalized class member: `a0 = 0` and `a1 = 1` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction<T> {
    tag: GeometricClass,
    f: TruncatedSeries<T>,
}

impl<T: Scalar> ClassFunction<T> {
    pub fn tag(&self) -> GeometricClass {
        self.tag
    }

    pub fn series(&self) -> &TruncatedSeries<T> {
        &self.f
    }

    /// Taylor coefficient `a_n`.
    pub fn a(&self, n: usize) -> Complex<T> {
        self.f.coeff(n)
    }
}

/// Constructs the class member determined by `p` through the defining
/// relation, truncated to `order`.
///
/// For the weighted classes `f = integral of p(t)/w(t)`; for the
/// symmetric-points class the coefficients satisfy
/// `n a_n = sum over odd k <= n of c_{n-k} a_k` with `a_1 = 1, c_0 = 1`
/// (for odd `n` the `k = n` term cancels onto the left side).
pub fn build_from_p<T: Scalar>(
    tag: GeometricClass,
    p: &TruncatedSeries<T>,
    order: usize,
) -> Result<ClassFunction<T>> {
    let one = Complex::new(T::one(), T::zero());
    if (p.coeff(0) - one).norm() > T::lit(1e-12) {
        return Err(Error::NotNormalized {
            expected: "p must have constant term 1",
        });
    }
    assert!(order >= 1, "class functions need at least the linear term");

    let f = match tag.weight_coeffs::<T>() {
        Some(w) => {
            let weight = TruncatedSeries::from_real(&w).resized(order.saturating_sub(1));
            let fprime = p.resized(order - 1).mul(&weight.reciprocal()?)?;
            fprime.integrate()
        }
        None => {
            let mut a = vec![Complex::new(T::zero(), T::zero()); order + 1];
            a[1] = one;
            for n in 2..=order {
                let mut s = Complex::new(T::zero(), T::zero());
                let mut k = 1;
                while k < n {
                    s += p.coeff(n - k) * a[k];
                    k += 2;
                }
                let divisor = if n % 2 == 1 { n - 1 } else { n };
                a[n] = s / Complex::new(T::int(divisor as i64), T::zero());
            }
            TruncatedSeries::new(a)
        }
    };
    Ok(ClassFunction { tag, f })
}

/// The coefficients `(a2, a3, a4)` of a class member.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoeffTriple<T> {
    pub a2: Complex<T>,
    pub a3: Complex<T>,
    pub a4: Complex<T>,
}

/// Closed-form `(a2, a3, a4)` in terms of `(c1, c2, c3)`.
///
/// For the symmetric-points class this returns the recurrence-consistent
/// form `a4 = (c1 c2 + 2 c3) / 8`, the one forced by the defining relation;
/// [`ss_printed_a234`] exposes the variant with the opposite `c3` sign that
/// circulates in print. The two differ by exactly `c3 / 2` in `a4`.
pub fn closed_form_a234<T: Scalar>(
    tag: GeometricClass,
    c: &CaratheodoryCoeffs<T>,
) -> CoeffTriple<T> {
    let re = |n: i64, d: i64| Complex::new(T::ratio(n, d), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let (c1, c2, c3) = (c.c1, c.c2, c.c3);
    match tag {
        GeometricClass::F1 => CoeffTriple {
            a2: (one + c1) * re(1, 2),
            a3: (one + c1 + c2) * re(1, 3),
            a4: (one + c1 + c2 + c3) * re(1, 4),
        },
        GeometricClass::F2 => CoeffTriple {
            a2: c1 * re(1, 2),
            a3: (one + c2) * re(1, 3),
            a4: (c1 + c3) * re(1, 4),
        },
        GeometricClass::F3 => CoeffTriple {
            a2: (one + c1) * re(1, 2),
            a3: (c1 + c2) * re(1, 3),
            a4: (c2 + c3 - one) * re(1, 4),
        },
        GeometricClass::F4 => CoeffTriple {
            a2: (c1 + re(2, 1)) * re(1, 2),
            a3: (re(2, 1) * c1 + c2 + re(3, 1)) * re(1, 3),
            a4: (re(3, 1) * c1 + re(2, 1) * c2 + c3 + re(4, 1)) * re(1, 4),
        },
        GeometricClass::Ss => CoeffTriple {
            a2: c1 * re(1, 2),
            a3: c2 * re(1, 2),
            a4: (c1 * c2 + re(2, 1) * c3) * re(1, 8),
        },
    }
}

/// The symmetric-points `(a2, a3, a4)` with the printed `a4` sign,
/// `a4 = (c1 c2 - 2 c3) / 8`. Inconsistent with the defining relation
/// (witness: `f = z/(1-z)` pairs with the Moebius `p`, forcing `a4 = 1`);
/// kept verbatim so the discrepancy stays observable.
pub fn ss_printed_a234<T: Scalar>(c: &CaratheodoryCoeffs<T>) -> CoeffTriple<T> {
    let re = |n: i64, d: i64| Complex::new(T::ratio(n, d), T::zero());
    CoeffTriple {
        a2: c.c1 * re(1, 2),
        a3: c.c2 * re(1, 2),
        a4: (c.c1 * c.c2 - re(2, 1) * c.c3) * re(1, 8),
    }
}

/// Schur parameters of the function attaining each sharp bound.
pub fn extremal_witness<T: Scalar>(tag: GeometricClass) -> SchurParams<T> {
    let (z1, z2, z3) = match tag {
        GeometricClass::Ss | GeometricClass::F2 => (T::zero(), T::one(), T::one()),
        GeometricClass::F1 => (
            eta::eta_root(tag).expect("F1 eta bracket is valid"),
            T::one(),
            T::zero(),
        ),
        GeometricClass::F3 => (
            eta::eta_root(tag).expect("F3 eta bracket is valid"),
            -T::one(),
            T::zero(),
        ),
        GeometricClass::F4 => (
            eta::eta_root(tag).expect("F4 eta bracket is valid"),
            T::lit(-0.0871127),
            T::one(),
        ),
    };
    SchurParams::new(z1, Complex::new(z2, T::zero()), Complex::new(z3, T::zero()))
        .expect("extremal parameters lie in the domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caratheodory::{expand_p, rational_from_schur, schur_to_coeffs};

    type S = TruncatedSeries<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn real_coeffs(c1: f64, c2: f64, c3: f64) -> CaratheodoryCoeffs<f64> {
        CaratheodoryCoeffs {
            c1: c(c1, 0.0),
            c2: c(c2, 0.0),
            c3: c(c3, 0.0),
        }
    }

    #[test]
    fn ss_from_symmetric_witness() {
        // p = (1+z^2)/(1-z^2); f should match the antiderivative of
        // (1+t^2)/(1-t^2)^2 = 1 + 3t^2 + 5t^4 + ...
        let params = SchurParams::from_real(0.0, 1.0, 1.0).unwrap();
        let p = expand_p(&rational_from_schur(&params), 8).unwrap();
        let f = build_from_p(GeometricClass::Ss, &p, 8).unwrap();
        assert!(f.a(2).norm() < 1e-14);
        assert!((f.a(3) - c(1.0, 0.0)).norm() < 1e-14);
        assert!(f.a(4).norm() < 1e-14);
        assert!((f.a(5) - c(1.0, 0.0)).norm() < 1e-14);

        // same expansion as the direct integral route
        let integrand = S::from_real(&[1.0, 0.0, 3.0, 0.0, 5.0, 0.0, 7.0, 0.0]);
        let direct = integrand.integrate();
        assert!(f.series().max_deviation(&direct) < 1e-13);
    }

    #[test]
    fn f1_with_constant_p() {
        let f = build_from_p(GeometricClass::F1, &S::one(8), 8).unwrap();
        for n in 2..=8 {
            assert!(
                (f.a(n) - c(1.0 / n as f64, 0.0)).norm() < 1e-14,
                "a_{n} should be 1/{n}"
            );
        }
    }

    #[test]
    fn ss_with_moebius_p() {
        // p = (1+z)/(1-z) pairs with f = z/(1-z): every a_n = 1
        let half = S::from_real(&[1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let geom = S::from_real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let p = half.mul(&geom.reciprocal().unwrap()).unwrap();
        let f = build_from_p(GeometricClass::Ss, &p, 8).unwrap();
        for n in 1..=8 {
            assert!((f.a(n) - c(1.0, 0.0)).norm() < 1e-13, "a_{n} of z/(1-z)");
        }
        // defining relation holds: 2 z f' - p (f - f(-z)) = 0 through order 8
        let two_z_fprime = {
            let d = f.series().differentiate();
            let shifted: Vec<_> = std::iter::once(c(0.0, 0.0))
                .chain(d.coeffs().iter().copied())
                .take(9)
                .collect();
            S::new(shifted)
                .linear(&S::zero(8), c(2.0, 0.0), c(0.0, 0.0))
                .unwrap()
        };
        let odd_part = f.series().sub(&f.series().reflect()).unwrap();
        let rhs = p.mul(&odd_part).unwrap();
        assert!(two_z_fprime.max_deviation(&rhs) < 1e-12);
    }

    #[test]
    fn rejects_unnormalized_p() {
        let p = S::from_real(&[1.5, 0.0, 0.0]);
        assert!(build_from_p::<f64>(GeometricClass::F1, &p, 2).is_err());
    }

    #[test]
    fn closed_forms_at_spot_values() {
        let t = closed_form_a234(GeometricClass::F2, &real_coeffs(2.0, 2.0, 2.0));
        assert!((t.a2 - c(1.0, 0.0)).norm() < 1e-15);
        assert!((t.a3 - c(1.0, 0.0)).norm() < 1e-15);
        assert!((t.a4 - c(1.0, 0.0)).norm() < 1e-15);

        let t = closed_form_a234(GeometricClass::F4, &real_coeffs(0.0, 0.0, 0.0));
        assert!((t.a2 - c(1.0, 0.0)).norm() < 1e-15);
        assert!((t.a3 - c(1.0, 0.0)).norm() < 1e-15);
        assert!((t.a4 - c(1.0, 0.0)).norm() < 1e-15);

        let t = closed_form_a234(GeometricClass::Ss, &real_coeffs(2.0, 2.0, 2.0));
        assert!((t.a4 - c(1.0, 0.0)).norm() < 1e-15);
        let printed = ss_printed_a234(&real_coeffs(2.0, 2.0, 2.0));
        assert!(printed.a4.norm() < 1e-15);
    }

    #[test]
    fn printed_ss_variant_differs_by_half_c3() {
        let cs = real_coeffs(1.3, -0.4, 0.9);
        let cons = closed_form_a234(GeometricClass::Ss, &cs);
        let printed = ss_printed_a234(&cs);
        assert!((cons.a4 - printed.a4 - cs.c3 * c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn extremal_witnesses() {
        let w = extremal_witness::<f64>(GeometricClass::Ss);
        assert_eq!(w.zeta1(), 0.0);
        assert!((w.zeta2() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((w.zeta3() - c(1.0, 0.0)).norm() < 1e-15);

        let w = extremal_witness::<f64>(GeometricClass::F3);
        assert!((w.zeta1() - 0.373776).abs() < 1e-5);
        assert!((w.zeta2() + c(1.0, 0.0)).norm() < 1e-15);

        let w = extremal_witness::<f64>(GeometricClass::F4);
        assert!((w.zeta1() - 0.381423).abs() < 1e-5);
        assert!((w.zeta2() - c(-0.0871127, 0.0)).norm() < 1e-15);
        assert!((w.zeta3() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn closed_form_matches_series_route() {
        let params = SchurParams::from_real(0.5, 0.5, 1.0).unwrap();
        let cs = schur_to_coeffs(&params);
        let p = S::new(vec![
            c(1.0, 0.0),
            cs.c1,
            cs.c2,
            cs.c3,
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ]);
        for tag in GeometricClass::ALL {
            let f = build_from_p(tag, &p, 8).unwrap();
            let t = closed_form_a234(tag, &cs);
            assert!((f.a(2) - t.a2).norm() < 1e-14, "{tag} a2");
            assert!((f.a(3) - t.a3).norm() < 1e-14, "{tag} a3");
            assert!((f.a(4) - t.a4).norm() < 1e-14, "{tag} a4");
            assert!(f.a(0).norm() == 0.0);
            assert!((f.a(1) - c(1.0, 0.0)).norm() == 0.0);
        }
    }
}
