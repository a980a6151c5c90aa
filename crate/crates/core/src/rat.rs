//! Exact rational scalars.
//!
//! All structural computations in this crate run over arbitrary-precision
//! rationals; floating point appears only in the symmetric eigensolver and
//! the geodesic simulator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Scalar type for every exact computation. Always in canonical form
/// (positive denominator, gcd 1) by construction.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rint(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn rfrac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

/// Parse a rational literal: `p`, `-p`, `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Recognize a floating value as a rational with bounded denominator, within
/// `tol`. Continued-fraction expansion; used to recertify restricted-root
/// eigenvalues exactly.
pub fn recognize_rational(x: f64, max_den: u64, tol: f64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    // Convergents p/q of the continued fraction of x.
    let (mut p0, mut q0): (i128, i128) = (1, 0);
    let (mut p1, mut q1): (i128, i128) = (x.floor() as i128, 1);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if q1 as u64 <= max_den {
            let approx = p1 as f64 / q1 as f64;
            if (approx - x).abs() <= tol {
                return Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)));
            }
        } else {
            break;
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor() as i128;
        frac = inv - inv.floor();
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    None
}

/// True when `x` has absolute value below `eps` after conversion to f64.
pub fn rat_is_small(x: &Rat, eps: f64) -> bool {
    rat_to_f64(&x.abs()) < eps
}
