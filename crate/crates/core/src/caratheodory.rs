//! Schur parameterization of Caratheodory coefficients.
//!
//! Maps a triple `(zeta1, zeta2, zeta3)` with `zeta1 in [0,1]` and
//! `zeta2, zeta3` in the closed unit disk to the first three Taylor
//! coefficients of a function `p` with positive real part, constructs the
//! rational witness attaining those coefficients, and provides a sampled
//! positivity check of `Re p` on interior circles.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// Slack admitted on the closed-disk constraints.
pub const DISK_TOL: f64 = 1e-12;

/// Dispatch tolerance for treating `|zeta2|` as lying on the unit circle.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Schur coordinates `(zeta1, zeta2, zeta3)` of a coefficient triple.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchurParams<T> {
    zeta1: T,
    zeta2: Complex<T>,
    zeta3: Complex<T>,
}

impl<T: Scalar> SchurParams<T> {
    pub fn new(zeta1: T, zeta2: Complex<T>, zeta3: Complex<T>) -> Result<Self> {
        if !(zeta1 >= T::zero() && zeta1 <= T::one()) {
            return Err(Error::InvalidParam {
                name: "zeta1",
                value: zeta1.as_f64(),
            });
        }
        let lim = T::one() + T::lit(DISK_TOL);
        let in_disk = |z: Complex<T>| {
            let n = z.norm();
            n.is_finite() && n <= lim
        };
        if !in_disk(zeta2) {
            return Err(Error::InvalidParam {
                name: "zeta2",
                value: zeta2.norm().as_f64(),
            });
        }
        if !in_disk(zeta3) {
            return Err(Error::InvalidParam {
                name: "zeta3",
                value: zeta3.norm().as_f64(),
            });
        }
        Ok(Self {
            zeta1,
            zeta2,
            zeta3,
        })
    }

    /// Convenience constructor for real parameter triples.
    pub fn from_real(zeta1: T, zeta2: T, zeta3: T) -> Result<Self> {
        Self::new(
            zeta1,
            Complex::new(zeta2, T::zero()),
            Complex::new(zeta3, T::zero()),
        )
    }

    pub fn zeta1(&self) -> T {
        self.zeta1
    }

    pub fn zeta2(&self) -> Complex<T> {
        self.zeta2
    }

    pub fn zeta3(&self) -> Complex<T> {
        self.zeta3
    }
}

/// First three Taylor coefficients of `p(z) = 1 + c1 z + c2 z^2 + c3 z^3 + ...`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaratheodoryCoeffs<T> {
    pub c1: Complex<T>,
    pub c2: Complex<T>,
    pub c3: Complex<T>,
}

/// Coefficient map of the Schur parameterization:
///
/// ```text
/// c1 = 2 z1
/// c2 = 2 z1^2 + 2 (1 - z1^2) z2
/// c3 = 2 z1^3 + 4 (1 - z1^2) z1 z2 - 2 (1 - z1^2) z1 z2^2
///      + 2 (1 - z1^2) (1 - |z2|^2) z3
/// ```
pub fn schur_to_coeffs<T: Scalar>(params: &SchurParams<T>) -> CaratheodoryCoeffs<T> {
    let two = Complex::new(T::int(2), T::zero());
    let z1 = Complex::new(params.zeta1, T::zero());
    let z2 = params.zeta2;
    let z3 = params.zeta3;
    let w = Complex::new(T::one() - params.zeta1 * params.zeta1, T::zero());
    let disk_defect = Complex::new(T::one() - z2.norm_sqr(), T::zero());

    let c1 = two * z1;
    let c2 = two * z1 * z1 + two * w * z2;
    let c3 = two * z1 * z1 * z1 + two * two * w * z1 * z2 - two * w * z1 * z2 * z2
        + two * w * disk_defect * z3;
    CaratheodoryCoeffs { c1, c2, c3 }
}

/// Rational function `num/den` with polynomial degree at most 3 on each side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RationalWitness<T> {
    numerator: [Complex<T>; 4],
    denominator: [Complex<T>; 4],
}

impl<T: Scalar> RationalWitness<T> {
    /// The denominator constant term must be 1.
    pub fn new(numerator: [Complex<T>; 4], denominator: [Complex<T>; 4]) -> Result<Self> {
        let one = Complex::new(T::one(), T::zero());
        if (denominator[0] - one).norm() > T::lit(DISK_TOL) {
            return Err(Error::NotNormalized {
                expected: "witness denominator constant term must be 1",
            });
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[Complex<T>; 4] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Complex<T>; 4] {
        &self.denominator
    }

    /// Direct rational evaluation (not the truncation).
    pub fn evaluate(&self, z: Complex<T>) -> Result<Complex<T>> {
        let den = horner(&self.denominator, z);
        if den.norm() <= T::lit(1e-12) {
            let (r, theta) = z.to_polar();
            return Err(Error::PoleOnGrid {
                radius: r.as_f64(),
                angle: theta.as_f64(),
            });
        }
        Ok(horner(&self.numerator, z) / den)
    }
}

fn horner<T: Scalar>(coeffs: &[Complex<T>; 4], z: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Unique positive-real-part witness for the given Schur parameters.
///
/// With `|zeta2| = 1` (within [`BOUNDARY_TOL`]) the degree-2 witness applies
/// and `zeta3` is ignored:
///
/// ```text
/// p(z) = (1 + (z1 z2 + z1) z + z2 z^2) / (1 + (z1 z2 - z1) z - z2 z^2)
/// ```
///
/// otherwise the degree-3 witness:
///
/// ```text
///        1 + (z1 z2 + conj(z2) z3 + z1) z + (z1 z3 + z1 conj(z2) z3 + z2) z^2 + z3 z^3
/// p(z) = -------------------------------------------------------------------------------
///        1 + (z1 z2 + conj(z2) z3 - z1) z + (z1 z3 - z1 conj(z2) z3 - z2) z^2 - z3 z^3
/// ```
///
/// (`zeta1` is real, so its conjugate is written plainly.)
pub fn rational_from_schur<T: Scalar>(params: &SchurParams<T>) -> RationalWitness<T> {
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let z1 = Complex::new(params.zeta1, T::zero());
    let z2 = params.zeta2;
    let z3 = params.zeta3;

    let on_circle = (z2.norm() - T::one()).abs() <= T::lit(BOUNDARY_TOL);
    let (numerator, denominator) = if on_circle {
        (
            [one, z1 * z2 + z1, z2, zero],
            [one, z1 * z2 - z1, -z2, zero],
        )
    } else {
        let z2c = z2.conj();
        (
            [
                one,
                z1 * z2 + z2c * z3 + z1,
                z1 * z3 + z1 * z2c * z3 + z2,
                z3,
            ],
            [
                one,
                z1 * z2 + z2c * z3 - z1,
                z1 * z3 - z1 * z2c * z3 - z2,
                -z3,
            ],
        )
    };
    RationalWitness {
        numerator,
        denominator,
    }
}

/// Series form of a witness: numerator times the reciprocal of the
/// denominator, truncated to `order`.
pub fn expand_p<T: Scalar>(w: &RationalWitness<T>, order: usize) -> Result<TruncatedSeries<T>> {
    let num = poly_series(&w.numerator, order);
    let den = poly_series(&w.denominator, order);
    num.mul(&den.reciprocal()?)
}

fn poly_series<T: Scalar>(coeffs: &[Complex<T>; 4], order: usize) -> TruncatedSeries<T> {
    let mut v = vec![Complex::new(T::zero(), T::zero()); order + 1];
    for (k, &c) in coeffs.iter().enumerate().take(order + 1) {
        v[k] = c;
    }
    TruncatedSeries::new(v)
}

/// Minimum of `Re p` over the polar sample grid `radii x angles_per_radius`,
/// evaluating the rational form directly. Radii must lie in `[0, 1)`.
pub fn positivity_scan<T: Scalar>(
    w: &RationalWitness<T>,
    radii: &[T],
    angles_per_radius: usize,
) -> Result<T> {
    let mut min = T::infinity();
    for &r in radii {
        if !(r >= T::zero() && r < T::one()) {
            return Err(Error::InvalidParam {
                name: "radius",
                value: r.as_f64(),
            });
        }
        for j in 0..angles_per_radius {
            let theta = T::int(2) * T::PI() * T::int(j as i64) / T::int(angles_per_radius as i64);
            let z = Complex::from_polar(r, theta);
            min = min.min(w.evaluate(z)?.re);
        }
    }
    Ok(min)
}

/// Draws Schur parameters with `zeta1` uniform on `[0,1]` and `zeta2`,
/// `zeta3` uniform on the unit disk (uniform modulus-squared times uniform
/// angle). Callers fix the RNG seed for reproducibility.
pub fn sample_schur<T: Scalar, R: Rng>(rng: &mut R) -> SchurParams<T> {
    let zeta1 = T::lit(rng.gen::<f64>());
    let zeta2 = sample_disk(rng);
    let zeta3 = sample_disk(rng);
    SchurParams::new(zeta1, zeta2, zeta3).expect("sampled parameters lie in the domain")
}

/// Uniform sample of the closed unit disk.
pub fn sample_disk<T: Scalar, R: Rng>(rng: &mut R) -> Complex<T> {
    let r = rng.gen::<f64>().sqrt();
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex::from_polar(T::lit(r), T::lit(theta))
}
