//! Truncated complex power series.
//!
//! A [`TruncatedSeries`] stores the coefficients of `z^0 .. z^N` for a fixed
//! truncation order `N`. Binary operations require equal orders and return
//! that order; degrees above `N` are discarded. Values are immutable after
//! construction and all operations are pure.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Truncation order used throughout the certification pipeline. The
/// functionals only consume coefficients up to `z^4`; the headroom guards
/// against off-by-one truncation bugs and supports the `gamma_n = 1/n`
/// sanity test.
pub const DEFAULT_ORDER: usize = 8;

/// Constant-term threshold below which a series is treated as non-invertible.
pub const SINGULAR_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    /// Coefficient of `z^n` at index `n`; length is exactly `order + 1`.
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Builds a series from its coefficient vector (index n holds `z^n`).
    pub fn new(coeffs: Vec<Complex<T>>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series carries at least the constant term"
        );
        Self { coeffs }
    }

    /// Series with the given real coefficients.
    pub fn from_real(coeffs: &[T]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, T::zero())).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Complex::new(T::zero(), T::zero()); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex::new(T::one(), T::zero()), order)
    }

    pub fn constant(c: Complex<T>, order: usize) -> Self {
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); order + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; zero for `n` above the truncation order.
    pub fn coeff(&self, n: usize) -> Complex<T> {
        self.coeffs
            .get(n)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Same coefficients, re-truncated (or zero-extended) to `order`.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex::new(T::zero(), T::zero()));
        coeffs.truncate(order + 1);
        Self::new(coeffs)
    }

    fn require_same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise `alpha * self + beta * other`.
    pub fn linear(&self, other: &Self, alpha: Complex<T>, beta: Complex<T>) -> Result<Self> {
        self.require_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| alpha * a + beta * b)
            .collect();
        Ok(Self::new(coeffs))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let one = Complex::new(T::one(), T::zero());
        self.linear(other, one, one)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let one = Complex::new(T::one(), T::zero());
        self.linear(other, one, -one)
    }

    /// Cauchy product; degrees above the common order are discarded.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_same_order(other)?;
        let n = self.order();
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::new(coeffs))
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() <= T::lit(SINGULAR_TOL) {
            return Err(Error::SingularConstant {
                modulus: a0.norm().as_f64(),
            });
        }
        let n = self.order();
        let mut b = vec![Complex::new(T::zero(), T::zero()); n + 1];
        b[0] = a0.inv();
        for k in 1..=n {
            let mut s = Complex::new(T::zero(), T::zero());
            for j in 1..=k {
                s += self.coeffs[j] * b[k - j];
            }
            b[k] = -s / a0;
        }
        Ok(Self::new(b))
    }

    /// Principal-branch logarithm of a series with constant term 1
    /// (convention `log 1 = 0`), via the recurrence obtained from
    /// integrating `a'/a`.
    pub fn log(&self) -> Result<Self> {
        let one = Complex::new(T::one(), T::zero());
        if (self.coeffs[0] - one).norm() > T::lit(SINGULAR_TOL) {
            return Err(Error::NotNormalized {
                expected: "log requires constant term 1",
            });
        }
        let n = self.order();
        let mut l = vec![Complex::new(T::zero(), T::zero()); n + 1];
        // n*L_n = n*a_n - sum_{k=1}^{n-1} a_k (n-k) L_{n-k}
        for m in 1..=n {
            let mut s = Complex::new(T::zero(), T::zero());
            for k in 1..m {
                s += self.coeffs[k] * l[m - k] * Complex::new(T::int((m - k) as i64), T::zero());
            }
            let m_t = Complex::new(T::int(m as i64), T::zero());
            l[m] = self.coeffs[m] - s / m_t;
        }
        Ok(Self::new(l))
    }

    /// Term-wise antiderivative with integration constant 0; the order
    /// grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 2);
        coeffs.push(Complex::new(T::zero(), T::zero()));
        for (k, &a) in self.coeffs.iter().enumerate() {
            coeffs.push(a / Complex::new(T::int((k + 1) as i64), T::zero()));
        }
        Self::new(coeffs)
    }

    /// Term-wise derivative; the order shrinks by one (a constant series
    /// differentiates to the zero constant).
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| a * Complex::new(T::int(k as i64), T::zero()))
            .collect();
        Self::new(coeffs)
    }

    /// `a(-z)`: sign flip on odd coefficients.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &a)| if k % 2 == 1 { -a } else { a })
            .collect();
        Self::new(coeffs)
    }

    /// Disk rotation of a normalized function, `f(z) -> e^{-i theta} f(e^{i theta} z)`:
    /// coefficient `a_n` picks up `e^{i (n-1) theta}`. Requires `a_0 = 0`.
    pub fn rotate(&self, theta: T) -> Result<Self> {
        if self.coeffs[0].norm() != T::zero() {
            return Err(Error::NotNormalized {
                expected: "rotation requires constant term 0",
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &a)| {
                if n == 0 {
                    a
                } else {
                    a * Complex::from_polar(T::one(), theta * T::int(n as i64 - 1))
                }
            })
            .collect();
        Ok(Self::new(coeffs))
    }

    /// Horner evaluation of the truncation at `z0`.
    pub fn evaluate(&self, z0: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for &a in self.coeffs.iter().rev() {
            acc = acc * z0 + a;
        }
        acc
    }

    /// Largest coefficient-wise deviation from `other`.
    pub fn max_deviation(&self, other: &Self) -> T {
        let n = self.order().max(other.order());
        (0..=n).fold(T::zero(), |acc, k| {
            acc.max((self.coeff(k) - other.coeff(k)).norm())
        })
    }
}
