use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use super::TransformError;
use crate::algebra::{rat, LinearODE, Rational, RationalFunction, UniPoly};

/// `Q^2 y'' + L Q y' + lambda y = 0` with `Q = tau^2 + q0`, `L = l1 tau + l0`
/// and `tau = x + shift`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedSecondOrder {
    pub q0: Rational,
    pub l1: Rational,
    pub l0: Rational,
    pub lambda: Rational,
    pub shift: Rational,
}

impl NormalizedSecondOrder {
    pub fn q(&self) -> UniPoly {
        UniPoly::new(vec![self.q0.clone(), Rational::zero(), Rational::one()])
    }

    pub fn l(&self) -> UniPoly {
        UniPoly::new(vec![self.l0.clone(), self.l1.clone()])
    }

    /// The equation as an ODE in `tau`.
    pub fn to_ode(&self) -> LinearODE {
        let q = self.q();
        LinearODE::from_polys("tau", vec![&q * &q, &self.l() * &q, UniPoly::constant(self.lambda.clone())]).expect("Q is monic")
    }
}

impl Serialize for NormalizedSecondOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("NormalizedSecondOrder", 5)?;
        st.serialize_field("q0", &self.q0.to_string())?;
        st.serialize_field("l1", &self.l1.to_string())?;
        st.serialize_field("l0", &self.l0.to_string())?;
        st.serialize_field("lambda", &self.lambda.to_string())?;
        st.serialize_field("shift", &self.shift.to_string())?;
        st.end()
    }
}

/// Normalizes `R^2 y'' + S R y' + C y = 0`, `R = a2 x^2 + a1 x + a0`,
/// `S = b1 x + b0`, by dividing through by `a2^2` and centering `R`.
pub fn complete_square(
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
    b1: &Rational,
    b0: &Rational,
    c: &Rational,
) -> Result<NormalizedSecondOrder, TransformError> {
    if a2.is_zero() {
        return Err(TransformError::DegenerateLeading);
    }
    let shift = a1 / (rat(2, 1) * a2);
    Ok(NormalizedSecondOrder {
        q0: a0 / a2 - &shift * &shift,
        l1: b1 / a2,
        l0: -(b1 * a1) / (rat(2, 1) * a2 * a2) + b0 / a2,
        lambda: c / (a2 * a2),
        shift,
    })
}

/// The ratio `eps'/eps` of the gauge `z = eps * y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaugeFactor {
    pub log_derivative: RationalFunction,
}

impl GaugeFactor {
    /// `eps^(j)/eps` for `j = 0..=n`.
    pub fn ratios(&self, n: usize) -> Vec<RationalFunction> {
        let e1 = &self.log_derivative;
        let mut out = vec![RationalFunction::one()];
        for j in 0..n {
            let next = out[j].derivative().add(&out[j].mul(e1));
            out.push(next);
        }
        out
    }
}

/// Gauge `z = eps * y` turning the monic equation into one whose
/// `(n-1)`-th coefficient equals `keep`. Returns the new equation and
/// `eps'/eps = (keep - a_{n-1})/n`.
pub fn remove_subleading(ode: &LinearODE, keep: &Rational) -> Result<(LinearODE, GaugeFactor), TransformError> {
    if !ode.is_monic() {
        return Err(TransformError::NonMonic);
    }
    let n = ode.order();
    let a = |i: usize| ode.coeff_of_derivative(i).clone();
    let e1 = RationalFunction::constant(keep.clone()).sub(&a(n - 1)).scale(&rat(1, n as i64));
    let gauge = GaugeFactor { log_derivative: e1 };
    let r = gauge.ratios(n);
    // z^(i) = eps * sum_j C(i, j) (eps^(i-j)/eps) y^(j)
    let mut b = vec![RationalFunction::zero(); n + 1];
    for (j, bj) in b.iter_mut().enumerate() {
        for i in j..=n {
            let c = Rational::from_integer(binomial(i as i64, j as i64).into());
            *bj = bj.add(&a(i).mul(&r[i - j]).scale(&c));
        }
    }
    b.reverse();
    Ok((LinearODE::new(ode.var(), b)?, gauge))
}
