use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::rational_to_f64;
use super::{AlgebraError, Rational};

/// Element `rational + coeff * sqrt(radicand)` of a quadratic field.
///
/// Canonical form: `radicand` is a squarefree integer different from 1 and 0
/// whenever `coeff != 0`; a purely rational value has `coeff == 0` and
/// `radicand == 1`. A negative radicand encodes a complex number, so
/// `1/2 + 1/2 sqrt(-3)` is a primitive cube root of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    rational: Rational,
    coeff: Rational,
    radicand: BigInt,
}

/// Splits `n` into `(s, f)` with `n = s^2 * f` and `f` squarefree. The sign
/// of `n` is carried by `f`.
///
/// Trial division; meant for the modest integers that appear in this crate.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        if count > 0 {
            square *= p.pow(count / 2);
            if count % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    free *= rest;
    (square, free * sign)
}

impl QuadSurd {
    pub fn from_rational(r: Rational) -> Self {
        QuadSurd { rational: r, coeff: Rational::zero(), radicand: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    /// `rational + coeff * sqrt(radicand)` brought to canonical form.
    pub fn new(rational: Rational, coeff: Rational, radicand: Rational) -> Self {
        Self::sqrt(&radicand).scale(&coeff).add_rational(&rational)
    }

    /// Exact square root of a rational; negative input yields an imaginary
    /// surd.
    pub fn sqrt(r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        // sqrt(n/d) = sqrt(n*d)/d
        let nd = r.numer() * r.denom();
        let (s, f) = squarefree_decompose(&nd);
        let c = Rational::new(s, r.denom().clone());
        if f.is_one() {
            Self::from_rational(c)
        } else {
            QuadSurd { rational: Rational::zero(), coeff: c, radicand: f }
        }
    }

    fn normalize(mut self) -> Self {
        if self.coeff.is_zero() || self.radicand.is_one() {
            if self.radicand.is_one() {
                self.rational += &self.coeff;
            }
            self.coeff = Rational::zero();
            self.radicand = BigInt::one();
        }
        self
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.coeff.is_zero()
    }

    /// True when the value is real (no negative radicand).
    pub fn is_real(&self) -> bool {
        self.is_rational() || self.radicand.is_positive()
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt, AlgebraError> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(BigInt::one()),
            (false, true) => Ok(self.radicand.clone()),
            (true, false) => Ok(other.radicand.clone()),
            (false, false) if self.radicand == other.radicand => Ok(self.radicand.clone()),
            _ => Err(AlgebraError::IncompatibleRadicands(self.radicand.to_string(), other.radicand.to_string())),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let d = self.common_radicand(other)?;
        Ok(QuadSurd { rational: &self.rational + &other.rational, coeff: &self.coeff + &other.coeff, radicand: d }.normalize())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let d = self.common_radicand(other)?;
        let dr = Rational::from_integer(d.clone());
        Ok(QuadSurd {
            rational: &self.rational * &other.rational + &self.coeff * &other.coeff * dr,
            coeff: &self.rational * &other.coeff + &self.coeff * &other.rational,
            radicand: d,
        }
        .normalize())
    }

    pub fn conjugate(&self) -> Self {
        QuadSurd { rational: self.rational.clone(), coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    /// Field norm `p^2 - q^2 d`.
    pub fn norm(&self) -> Rational {
        &self.rational * &self.rational - &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone())
    }

    pub fn try_inv(&self) -> Result<Self, AlgebraError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.conjugate().scale(&n.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadSurd { rational: &self.rational * r, coeff: &self.coeff * r, radicand: self.radicand.clone() }.normalize()
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        out.rational += r;
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn try_pow(&self, e: u32) -> Result<Self, AlgebraError> {
        let mut acc = Self::from_rational(Rational::one());
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Sign of a real surd, decided exactly. `None` for complex values.
    pub fn signum(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        let zero = Rational::zero();
        let ps = self.rational.cmp(&zero);
        let qs = self.coeff.cmp(&zero);
        if qs == Ordering::Equal {
            return Some(ps);
        }
        if ps == Ordering::Equal || ps == qs {
            return Some(qs);
        }
        // opposite signs: compare p^2 with q^2 d
        let p2 = &self.rational * &self.rational;
        let q2d = &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone());
        Some(match p2.cmp(&q2d) {
            Ordering::Greater => ps,
            Ordering::Less => qs,
            Ordering::Equal => Ordering::Equal,
        })
    }

    pub fn to_complex(&self) -> Complex64 {
        let p = rational_to_f64(&self.rational);
        let q = rational_to_f64(&self.coeff);
        if self.is_rational() {
            return Complex64::new(p, 0.0);
        }
        let d = rational_to_f64(&Rational::from_integer(self.radicand.clone()));
        if d >= 0.0 {
            Complex64::new(p + q * d.sqrt(), 0.0)
        } else {
            Complex64::new(p, q * (-d).sqrt())
        }
    }

    /// Real part as `f64` (the value itself for real surds).
    pub fn to_f64(&self) -> f64 {
        self.to_complex().re
    }

    /// Roots of `x^2 + p x + q`, as a pair in the order `-p/2 + root, -p/2 - root`.
    pub fn quadratic_roots(p: &Rational, q: &Rational) -> (Self, Self) {
        let half = -p / Rational::from_integer(BigInt::from(2));
        let disc = &half * &half - q;
        let root = Self::sqrt(&disc);
        (root.add_rational(&half), root.neg().add_rational(&half))
    }

    /// Integer `n`-th root if this is a rational perfect power.
    pub(crate) fn exact_root(&self, n: u32) -> Option<Rational> {
        let r = self.as_rational()?;
        if n == 0 {
            return None;
        }
        let neg = r.is_negative();
        if neg && n % 2 == 0 {
            return None;
        }
        let num = r.numer().abs().nth_root(n);
        let den = r.denom().nth_root(n);
        if num.pow(n) == r.numer().abs() && den.pow(n) == *r.denom() {
            let v = Rational::new(num, den);
            Some(if neg { -v } else { v })
        } else {
            None
        }
    }
}

impl From<Rational> for QuadSurd {
    fn from(r: Rational) -> Self {
        QuadSurd::from_rational(r)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let coeff = if self.coeff.is_one() {
            String::new()
        } else if self.coeff == -Rational::one() {
            "-".to_string()
        } else {
            format!("{}*", self.coeff)
        };
        if self.rational.is_zero() {
            write!(f, "{coeff}sqrt({})", self.radicand)
        } else {
            write!(f, "{} + {coeff}sqrt({})", self.rational, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(squarefree_decompose(&BigInt::from(-12)), (BigInt::from(2), BigInt::from(-3)));
        assert_eq!(squarefree_decompose(&BigInt::from(49)), (BigInt::from(7), BigInt::from(1)));
    }

    #[test]
    fn perfect_square_collapses() {
        assert_eq!(QuadSurd::sqrt(&rat(9, 4)), QuadSurd::from(rat(3, 2)));
        let s = QuadSurd::sqrt(&rat(5, 4));
        assert_eq!(s.surd_coeff(), &rat(1, 2));
        assert_eq!(s.radicand(), &BigInt::from(5));
        assert_eq!(QuadSurd::sqrt(&rat(1, 2)).surd_coeff(), &rat(1, 2));
    }

    #[test]
    fn golden_ratio_roots() {
        // x^2 - x - 1
        let (r1, r2) = QuadSurd::quadratic_roots(&rat(-1, 1), &rat(-1, 1));
        for r in [&r1, &r2] {
            let v = r.try_mul(r).unwrap().try_sub(r).unwrap().add_rational(&rat(-1, 1));
            assert!(v.is_zero());
        }
        assert_eq!(r1.signum(), Some(Ordering::Greater));
        assert_eq!(r2.signum(), Some(Ordering::Less));
        assert!((r1.to_f64() - 1.618033988749895).abs() < 1e-15);
    }

    #[test]
    fn complex_roots_are_flagged() {
        let (r1, _) = QuadSurd::quadratic_roots(&rat(0, 1), &rat(1, 1));
        assert!(!r1.is_real());
        assert_eq!(r1.signum(), None);
        let c = r1.to_complex();
        assert!((c.im - 1.0).abs() < 1e-15);
        assert!(r1.try_mul(&r1).unwrap().add_rational(&rat(1, 1)).is_zero());
    }

    #[test]
    fn inverse_and_incompatible() {
        let a = QuadSurd::new(rat(1, 1), rat(1, 1), rat(2, 1));
        let inv = a.try_inv().unwrap();
        assert_eq!(a.try_mul(&inv).unwrap(), QuadSurd::from(rat(1, 1)));
        let b = QuadSurd::sqrt(&rat(3, 1));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(QuadSurd::from(rat(27, 8)).exact_root(3), Some(rat(3, 2)));
        assert_eq!(QuadSurd::from(rat(-8, 1)).exact_root(3), Some(rat(-2, 1)));
        assert_eq!(QuadSurd::from(rat(2, 1)).exact_root(2), None);
    }
}
