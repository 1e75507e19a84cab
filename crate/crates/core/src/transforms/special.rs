use num_traits::{One, Zero};
use serde::Serialize;

use super::{NormalizedSecondOrder, TransformError};
use crate::algebra::{rat, LinearODE, QuadSurd, Rational, UniPoly};
use crate::pzfield::PZParams;

/// `(1 - xi^2) u'' + (l1 - 3) xi u' + (lambda/q0) u = 0`, the image of the
/// normalized equation under `xi = tau / sqrt(tau^2 + q0)`.
pub fn to_gegenbauer(ns: &NormalizedSecondOrder) -> Result<LinearODE, TransformError> {
    if !ns.l0.is_zero() {
        return Err(TransformError::NonzeroL0);
    }
    if ns.q0.is_zero() {
        return Err(TransformError::ZeroQ0);
    }
    Ok(LinearODE::from_polys(
        "xi",
        vec![UniPoly::from_ints(&[1, 0, -1]), UniPoly::monomial(&ns.l1 - rat(3, 1), 1), UniPoly::constant(&ns.lambda / &ns.q0)],
    )?)
}

fn rational_or_err(v: QuadSurd, what: &str) -> Result<Rational, TransformError> {
    v.as_rational().cloned().ok_or_else(|| TransformError::IrrationalCoefficient(format!("{what} = {v}")))
}

/// `nu (nu + 1)`, which is rational whenever `nu` solves a rational
/// quadratic `nu^2 + nu + C = 0`.
fn nu_nu1(nu: &QuadSurd) -> Result<Rational, TransformError> {
    rational_or_err(nu.try_mul(&nu.add_rational(&Rational::one()))?, "nu(nu+1)")
}

/// `z(1-z) y'' + (c - (a+b+1) z) y' - a b y = 0`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HypergeomParams {
    pub a: QuadSurd,
    pub b: QuadSurd,
    pub c: Rational,
}

impl HypergeomParams {
    pub fn to_ode(&self) -> Result<LinearODE, TransformError> {
        let apb = rational_or_err(self.a.try_add(&self.b)?, "a+b")?;
        let ab = rational_or_err(self.a.try_mul(&self.b)?, "ab")?;
        Ok(LinearODE::from_polys(
            "z",
            vec![UniPoly::from_ints(&[0, 1, -1]), UniPoly::new(vec![self.c.clone(), -(apb + Rational::one())]), UniPoly::constant(-ab)],
        )?)
    }
}

impl Serialize for HypergeomParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HypergeomParams", 3)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.serialize_field("c", &self.c.to_string())?;
        st.end()
    }
}

/// Parameters of the hypergeometric equation reached from the Gegenbauer
/// equation `(1-x^2) w'' - 2(mu+1) x w' + (nu-mu)(nu+mu+1) w = 0` by
/// `x = 1 - 2z`.
pub fn gegenbauer_to_hypergeometric(mu: &Rational, nu: &QuadSurd) -> HypergeomParams {
    HypergeomParams { a: nu.neg().add_rational(mu), b: nu.add_rational(&(mu + Rational::one())), c: mu + Rational::one() }
}

/// `(1-x^2) w'' - 2(mu+1) x w' + (nu-mu)(nu+mu+1) w = 0`
pub fn gegenbauer_ode(mu: &Rational, nu: &QuadSurd) -> Result<LinearODE, TransformError> {
    let zeroth = nu_nu1(nu)? - mu * (mu + Rational::one());
    Ok(LinearODE::from_polys(
        "x",
        vec![UniPoly::from_ints(&[1, 0, -1]), UniPoly::monomial(rat(-2, 1) * (mu + Rational::one()), 1), UniPoly::constant(zeroth)],
    )?)
}

/// Legendre equation multiplied through by `1 - x^2`:
/// `(1-x^2)^2 y'' - 2x(1-x^2) y' + [nu(nu+1)(1-x^2) - mu^2] y = 0`.
pub fn legendre_ode(mu: &Rational, nu: &QuadSurd) -> Result<LinearODE, TransformError> {
    let w = UniPoly::from_ints(&[1, 0, -1]);
    let zeroth = &w.scale(&nu_nu1(nu)?) - &UniPoly::constant(mu * mu);
    Ok(LinearODE::from_polys("x", vec![&w * &w, &UniPoly::from_ints(&[0, -2]) * &w, zeroth])?)
}

/// The hypergeometric form `xi(xi-1) w'' - (mu+1)(1-2xi) w' + (mu-nu)(mu+nu+1) w = 0`
/// reached from the Legendre equation by `y = (x^2-1)^(mu/2) w`, `x = 1 - 2xi`.
pub fn legendre_to_hypergeometric(mu: &Rational, nu: &QuadSurd) -> Result<LinearODE, TransformError> {
    let zeroth = mu * (mu + Rational::one()) - nu_nu1(nu)?;
    let mu1 = mu + Rational::one();
    Ok(LinearODE::from_polys(
        "xi",
        vec![UniPoly::from_ints(&[0, -1, 1]), UniPoly::new(vec![-mu1.clone(), rat(2, 1) * &mu1]), UniPoly::constant(zeroth)],
    )?)
}

/// The reverse direction of [`legendre_to_hypergeometric`]: the Legendre
/// equation with the same `(mu, nu)`.
pub fn hypergeometric_to_legendre(mu: &Rational, nu: &QuadSurd) -> Result<LinearODE, TransformError> {
    legendre_ode(mu, nu)
}

/// `mu = -(m+k)/(2m)` and both roots of
/// `nu^2 + nu + (m^2-k^2)/(4m^2) - abk^2/(m c0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LegendreParams {
    pub mu: Rational,
    pub nu: [QuadSurd; 2],
    pub c0: Rational,
    /// Constant term of the monic quadratic for `nu`.
    pub constant: Rational,
}

impl LegendreParams {
    /// `nu^2 + nu + constant` at the `i`-th root, in surd arithmetic.
    pub fn residual(&self, i: usize) -> Result<QuadSurd, TransformError> {
        let nu = &self.nu[i];
        Ok(nu.try_mul(nu)?.try_add(nu)?.add_rational(&self.constant))
    }
}

impl Serialize for LegendreParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LegendreParams", 3)?;
        st.serialize_field("mu", &self.mu.to_string())?;
        st.serialize_field("nu", &[self.nu[0].to_string(), self.nu[1].to_string()])?;
        st.serialize_field("c0", &self.c0.to_string())?;
        st.end()
    }
}

pub fn legendre_parameters(params: &PZParams) -> Result<LegendreParams, TransformError> {
    let PZParams { a, b, m, k, .. } = params;
    if m.is_zero() {
        return Err(TransformError::ZeroM);
    }
    let c0 = params.c0();
    if c0.is_zero() {
        return Err(TransformError::ZeroC0);
    }
    let mu = -(m + k) / (rat(2, 1) * m);
    let constant = (m * m - k * k) / (rat(4, 1) * m * m) - a * b * k * k / (m * &c0);
    let (r1, r2) = QuadSurd::quadratic_roots(&Rational::one(), &constant);
    Ok(LegendreParams { mu, nu: [r1, r2], c0, constant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, RationalFunction};
    use crate::transforms::complete_square;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn qs(s: &str) -> QuadSurd {
        QuadSurd::from_rational(q(s))
    }

    #[test]
    fn gegenbauer_examples() {
        let ns = complete_square(&q("1"), &q("0"), &q("1"), &q("1"), &q("0"), &q("2")).unwrap();
        let ode = to_gegenbauer(&ns).unwrap();
        assert_eq!(ode.to_strings(), vec!["-xi^2 + 1", "-2*xi", "2"]);
        let ns = complete_square(&q("1"), &q("0"), &q("1"), &q("3"), &q("0"), &q("1")).unwrap();
        assert!(to_gegenbauer(&ns).unwrap().coeffs()[1].is_zero());
        let ns = complete_square(&q("1"), &q("0"), &q("0"), &q("3"), &q("0"), &q("1")).unwrap();
        assert_eq!(to_gegenbauer(&ns), Err(TransformError::ZeroQ0));
        let ns = complete_square(&q("1"), &q("0"), &q("1"), &q("3"), &q("1"), &q("1")).unwrap();
        assert_eq!(to_gegenbauer(&ns), Err(TransformError::NonzeroL0));
    }

    #[test]
    fn hypergeometric_parameters() {
        let h = gegenbauer_to_hypergeometric(&q("0"), &qs("0"));
        assert_eq!((h.a, h.b, h.c), (qs("0"), qs("1"), q("1")));
        let h = gegenbauer_to_hypergeometric(&q("1/2"), &qs("3/2"));
        assert_eq!((h.a.clone(), h.b.clone(), h.c.clone()), (qs("-1"), qs("3"), q("3/2")));
        assert_eq!(h.to_ode().unwrap().to_strings(), vec!["-z^2 + z", "-3*z + 3/2", "3"]);
    }

    #[test]
    fn legendre_forms() {
        let ode = legendre_to_hypergeometric(&q("0"), &qs("1")).unwrap();
        assert_eq!(ode.to_strings(), vec!["xi^2 - xi", "2*xi - 1", "-2"]);
        let ode = legendre_to_hypergeometric(&q("3/2"), &qs("3/2")).unwrap();
        assert!(ode.coeffs()[2].is_zero());
        let leg = hypergeometric_to_legendre(&q("0"), &qs("1")).unwrap();
        assert_eq!(leg.to_strings(), vec!["x^4 - 2*x^2 + 1", "2*x^3 - 2*x", "-2*x^2 + 2"]);
        // dividing by (1 - x^2) gives the textbook Legendre equation for mu = 0
        let w = RationalFunction::from_poly(UniPoly::from_ints(&[1, 0, -1]));
        assert_eq!(leg.coeffs()[0].div(&w).unwrap(), w);
        let bad = QuadSurd::sqrt(&q("2"));
        assert!(matches!(legendre_ode(&q("0"), &bad), Err(TransformError::IrrationalCoefficient(_))));
    }

    #[test]
    fn legendre_parameter_examples() {
        let lp = legendre_parameters(&PZParams::from_ints(0, 1, 1, 1, 1)).unwrap();
        assert_eq!(lp.mu, q("-1"));
        assert_eq!(lp.nu, [qs("0"), qs("-1")]);
        let lp = legendre_parameters(&PZParams::from_ints(0, 1, 1, 1, 0)).unwrap();
        assert_eq!(lp.mu, q("-1/2"));
        assert_eq!(lp.nu, [qs("-1/2"), qs("-1/2")]);
        let lp = legendre_parameters(&PZParams::from_ints(1, 1, 3, 1, 1)).unwrap();
        assert!(!lp.nu[0].is_rational());
        for i in 0..2 {
            assert!(lp.residual(i).unwrap().is_zero());
        }
        assert_eq!(legendre_parameters(&PZParams::from_ints(1, 1, 2, 1, 1)), Err(TransformError::ZeroC0));
        assert_eq!(legendre_parameters(&PZParams::from_ints(1, 1, 2, 0, 1)), Err(TransformError::ZeroM));
    }
}
