use std::fmt;

use num_traits::Zero;

use super::{AlgebraError, Rational, UniPoly};

/// Quotient of two polynomials in canonical form: numerator and denominator
/// coprime, denominator monic. Structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

/// Reduces `num/den` to canonical form.
pub fn ratfun_simplify(num: &UniPoly, den: &UniPoly) -> Result<RationalFunction, AlgebraError> {
    RationalFunction::new(num.clone(), den.clone())
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g)?;
        let (mut d, _) = den.div_rem(&g)?;
        let lead = d.leading().recip();
        n = n.scale(&lead);
        d = d.scale(&lead);
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn zero() -> Self {
        RationalFunction { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(num, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let n = self.num.to_string_in(var);
        if self.den == UniPoly::one() {
            return n;
        }
        let wrap = |s: String, p: &UniPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(self.den.to_string_in(var), &self.den))
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn simplify_examples() {
        let r = ratfun_simplify(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(r, RationalFunction::from_poly(p(&[1, 1])));
        let r = ratfun_simplify(&p(&[0, 2]), &p(&[4])).unwrap();
        assert_eq!(r.num(), &UniPoly::new(vec![rat(0, 1), rat(1, 2)]));
        assert_eq!(r.den(), &UniPoly::one());
        let r = ratfun_simplify(&p(&[0, 1, 0, 1]), &p(&[1, 0, 1])).unwrap();
        assert_eq!(r, RationalFunction::from_poly(p(&[0, 1])));
        assert_eq!(ratfun_simplify(&p(&[1]), &UniPoly::zero()), Err(AlgebraError::ZeroDenominator));
    }

    #[test]
    fn monic_denominator_and_sign() {
        let r = ratfun_simplify(&p(&[1]), &p(&[0, -2])).unwrap();
        assert_eq!(r.den(), &p(&[0, 1]));
        assert_eq!(r.num(), &UniPoly::constant(rat(-1, 2)));
        assert_eq!(r.to_string_in("t"), "-1/2/t");
    }

    #[test]
    fn quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let r = ratfun_simplify(&p(&[1]), &p(&[0, 1])).unwrap();
        let d = r.derivative();
        assert_eq!(d, ratfun_simplify(&p(&[-1]), &p(&[0, 0, 1])).unwrap());
    }

    fn small_ratfun() -> impl Strategy<Value = RationalFunction> {
        let poly = prop::collection::vec(-4i64..=4, 0..=4).prop_map(|v| UniPoly::from_ints(&v));
        (poly.clone(), poly).prop_filter_map("zero den", |(n, d)| RationalFunction::new(n, d).ok())
    }

    proptest! {
        #[test]
        fn simplify_is_idempotent(r in small_ratfun()) {
            let again = ratfun_simplify(r.num(), r.den()).unwrap();
            prop_assert_eq!(again, r);
        }

        #[test]
        fn field_laws(a in small_ratfun(), b in small_ratfun()) {
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            if !b.is_zero() {
                prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
            }
            let lhs = a.mul(&b).derivative();
            let rhs = a.derivative().mul(&b).add(&a.mul(&b.derivative()));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
