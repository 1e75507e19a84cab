use num_traits::Zero;
use serde::Serialize;

use super::TransformError;
use crate::algebra::{rat, rational_to_f64, LinearODE, Rational, UniPoly};
use crate::pzfield::PZParams;

/// `lhs(t) z' = c0 + c1 t z + c2 z^2`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RiccatiEq {
    pub lhs_coeff: UniPoly,
    pub rhs_c0: Rational,
    pub rhs_c1: Rational,
    pub rhs_c2: Rational,
}

impl RiccatiEq {
    /// `dz/dt`, undefined where the left coefficient vanishes.
    pub fn slope_f64(&self, t: f64, z: f64) -> f64 {
        self.rhs_f64(t, z) / self.lhs_coeff.eval_f64(t)
    }

    pub fn rhs_f64(&self, t: f64, z: f64) -> f64 {
        rational_to_f64(&self.rhs_c0) + rational_to_f64(&self.rhs_c1) * t * z + rational_to_f64(&self.rhs_c2) * z * z
    }

    pub fn to_strings(&self) -> Vec<String> {
        vec![self.lhs_coeff.to_string_in("t"), self.rhs_c0.to_string(), self.rhs_c1.to_string(), self.rhs_c2.to_string()]
    }
}

impl std::fmt::Display for RiccatiEq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) z' = {} + ({})*t*z + ({})*z^2", self.lhs_coeff.to_string_in("t"), self.rhs_c0, self.rhs_c1, self.rhs_c2)
    }
}

impl Serialize for RiccatiEq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// `(-m t^2 + 2mab - c) z' = bk + k t z + ak z^2`
pub fn lienard_to_riccati(params: &PZParams) -> RiccatiEq {
    let PZParams { a, b, m, k, .. } = params;
    RiccatiEq { lhs_coeff: UniPoly::new(vec![-params.c0(), Rational::zero(), -m.clone()]), rhs_c0: b * k, rhs_c1: k.clone(), rhs_c2: a * k }
}

/// `(m t^2 + c0)^2 w'' + (2m+k) t (m t^2 + c0) w' + a b k^2 w = 0`, obtained
/// with `z = (m t^2 + c0)/(ak) w'/w`.
pub fn riccati_to_linear(params: &PZParams) -> Result<LinearODE, TransformError> {
    let PZParams { a, b, m, k, .. } = params;
    if (a * k).is_zero() {
        return Err(TransformError::SubstitutionUndefined);
    }
    let r = UniPoly::new(vec![params.c0(), Rational::zero(), m.clone()]);
    let s = UniPoly::monomial(rat(2, 1) * m + k, 1);
    let ode = LinearODE::from_polys("t", vec![&r * &r, &s * &r, UniPoly::constant(a * b * k * k)])?;
    Ok(ode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational as q;

    #[test]
    fn riccati_coefficients() {
        let params = PZParams::from_ints(1, 1, 3, 1, 1);
        let r = lienard_to_riccati(&params);
        assert_eq!(r.to_strings(), vec!["-t^2 - 1", "1", "1", "1"]);
        let six = PZParams::new(q("0").unwrap(), q("1").unwrap(), q("1").unwrap(), q("3/2").unwrap(), q("1/2").unwrap());
        let r = lienard_to_riccati(&six);
        assert_eq!(r.lhs_coeff, UniPoly::new(vec![rat(-1, 1), rat(0, 1), rat(-3, 2)]));
        assert_eq!((r.rhs_c0, r.rhs_c1, r.rhs_c2), (rat(1, 2), rat(1, 2), rat(0, 1)));
        let r = lienard_to_riccati(&PZParams::from_ints(2, 3, 5, 1, 0));
        assert!(r.rhs_c0.is_zero() && r.rhs_c1.is_zero() && r.rhs_c2.is_zero());
        assert_eq!(r.lhs_coeff.to_string_in("t"), "-t^2 + 7");
    }

    #[test]
    fn linear_coefficients() {
        let ode = riccati_to_linear(&PZParams::from_ints(1, 1, 3, 1, 1)).unwrap();
        assert_eq!(ode.to_strings(), vec!["t^4 + 2*t^2 + 1", "3*t^3 + 3*t", "1"]);
        let ode = riccati_to_linear(&PZParams::from_ints(2, 0, 5, 1, 1)).unwrap();
        assert!(ode.coeffs()[2].is_zero());
        assert_eq!(ode.to_strings()[0], "t^4 + 10*t^2 + 25");
        assert_eq!(riccati_to_linear(&PZParams::from_ints(0, 1, 1, 1, 1)), Err(TransformError::SubstitutionUndefined));
        assert_eq!(riccati_to_linear(&PZParams::from_ints(1, 1, 1, 1, 0)), Err(TransformError::SubstitutionUndefined));
    }
}
