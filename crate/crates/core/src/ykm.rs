//! Closed-form maximum of `|A + B z + C z^2| + 1 - |z|^2` on the closed
//! unit disk, for real `A`, `B`, `C`, together with a brute-force oracle.
//!
//! Misprinted variants of two branch expressions are in circulation; the
//! forms used here — `B^2` compared against `4 (1 + |C|)^2` in the middle
//! `AC < 0` branch, and `B^2 / (4 (1 - |C|))` added in the first — are the
//! ones the oracle confirms over random triples.

use num_complex::Complex;

use crate::scalar::Scalar;

/// Which closed-form branch produced the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YBranch {
    /// `|A| + |B| + |C|` (aligned corner, `AC >= 0`).
    CornerSum,
    /// `1 + |A| + B^2 / (4 (1 - |C|))` (`AC >= 0`, small `|B|`).
    InteriorPlus,
    /// `1 - |A| + B^2 / (4 (1 - |C|))` (`AC < 0`, first branch).
    NegSaddle,
    /// `1 + |A| + B^2 / (4 (1 + |C|))` (`AC < 0`, middle branch).
    NegInterior,
    /// `|A| + |B| - |C|`.
    RCorner,
    /// `-|A| + |B| + |C|`.
    ROpposite,
    /// `(|C| + |A|) sqrt(1 - B^2 / (4 A C))`.
    RSqrt,
    /// Grid sweep plus local refinement.
    Oracle,
}

/// Maximum value, the branch that produced it, and (oracle only) the
/// argmax point in the disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct YOutcome<T> {
    pub value: T,
    pub branch: YBranch,
    pub witness: Option<Complex<T>>,
}

/// Closed-form `Y(A, B, C)`. Boundary ties between branch conditions
/// resolve to the first matching branch in the printed order; adjacent
/// branches agree at true boundaries, so the choice is value-neutral.
pub fn y_closed<T: Scalar>(a: T, b: T, c: T) -> YOutcome<T> {
    let (aa, ab, ac) = (a.abs(), b.abs(), c.abs());
    let four = T::int(4);
    let (value, branch) = if a * c >= T::zero() {
        if ab >= T::int(2) * (T::one() - ac) {
            (aa + ab + ac, YBranch::CornerSum)
        } else {
            (
                T::one() + aa + b * b / (four * (T::one() - ac)),
                YBranch::InteriorPlus,
            )
        }
    } else {
        // -4 A C (C^{-2} - 1); AC < 0 guarantees C != 0
        let tau = -four * a * c * (T::one() / (c * c) - T::one());
        if tau <= b * b && ab < T::int(2) * (T::one() - ac) {
            (
                T::one() - aa + b * b / (four * (T::one() - ac)),
                YBranch::NegSaddle,
            )
        } else if b * b < (four * (T::one() + ac) * (T::one() + ac)).min(tau) {
            (
                T::one() + aa + b * b / (four * (T::one() + ac)),
                YBranch::NegInterior,
            )
        } else {
            r_branch(a, b, c)
        }
    };
    YOutcome {
        value,
        branch,
        witness: None,
    }
}

/// The boundary maximum `R(A, B, C)` used by the `AC < 0` "otherwise" case.
pub fn r_closed<T: Scalar>(a: T, b: T, c: T) -> T {
    r_branch(a, b, c).0
}

fn r_branch<T: Scalar>(a: T, b: T, c: T) -> (T, YBranch) {
    let (aa, ab, ac) = (a.abs(), b.abs(), c.abs());
    if ac * (ab + T::int(4) * aa) <= aa * ab {
        (aa + ab - ac, YBranch::RCorner)
    } else if aa * ab <= ac * (ab - T::int(4) * aa) {
        (-aa + ab + ac, YBranch::ROpposite)
    } else {
        (
            (ac + aa) * (T::one() - b * b / (T::int(4) * a * c)).sqrt(),
            YBranch::RSqrt,
        )
    }
}

fn objective<T: Scalar>(a: T, b: T, c: T, z: Complex<T>) -> T {
    let cr = |x: T| Complex::new(x, T::zero());
    (cr(a) + cr(b) * z + cr(c) * z * z).norm() + T::one() - z.norm_sqr()
}

/// Brute-force maximum over a polar grid `r in [0, 1]`, `theta in [0, 2 pi)`,
/// then two rounds of 10x local subdivision around the best cell. Ties break
/// to smaller radius, then smaller angle, so the sweep is deterministic.
pub fn y_oracle<T: Scalar>(a: T, b: T, c: T, radial: usize, angular: usize) -> YOutcome<T> {
    assert!(
        radial >= 64 && angular >= 64,
        "grid too coarse for the oracle"
    );
    let tau = T::int(2) * T::PI();
    let mut best = T::neg_infinity();
    let mut best_r = T::zero();
    let mut best_th = T::zero();
    for i in 0..=radial {
        let r = T::int(i as i64) / T::int(radial as i64);
        for j in 0..angular {
            let th = tau * T::int(j as i64) / T::int(angular as i64);
            let v = objective(a, b, c, Complex::from_polar(r, th));
            if v > best {
                best = v;
                best_r = r;
                best_th = th;
            }
        }
    }
    let mut dr = T::one() / T::int(radial as i64);
    let mut dth = tau / T::int(angular as i64);
    for _ in 0..2 {
        let (r0, th0) = (best_r, best_th);
        for i in 0..=20 {
            let r = (r0 - dr + dr * T::int(i) / T::int(10))
                .max(T::zero())
                .min(T::one());
            for j in 0..=20 {
                let th = th0 - dth + dth * T::int(j) / T::int(10);
                let v = objective(a, b, c, Complex::from_polar(r, th));
                if v > best {
                    best = v;
                    best_r = r;
                    best_th = th;
                }
            }
        }
        dr /= T::int(10);
        dth /= T::int(10);
    }
    YOutcome {
        value: best,
        branch: YBranch::Oracle,
        witness: Some(Complex::from_polar(best_r, best_th)),
    }
}
