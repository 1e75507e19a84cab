use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand constructor `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or an integer literal, allowing a leading sign and
/// surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    let err = || AlgebraError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Nearest `f64`; saturates to infinities for huge values.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Scale both sides down until they fit.
    let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
    while n.bits() > 1000 || d.bits() > 1000 {
        n >>= 64u32;
        d >>= 64u32;
        if d.is_zero() {
            return if n.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
    }
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
