use std::fmt;

use num_traits::Zero;

use super::{AlgebraError, Rational, RationalFunction, UniPoly};

/// Homogeneous linear ODE `c_n y^(n) + ... + c_1 y' + c_0 y = 0` in one
/// independent variable. `coeffs[0]` multiplies the highest derivative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearODE {
    var: String,
    coeffs: Vec<RationalFunction>,
}

impl LinearODE {
    /// Coefficients from the highest derivative down to the zeroth. Needs at
    /// least two entries and a nonzero leading one.
    pub fn new(var: impl Into<String>, coeffs: Vec<RationalFunction>) -> Result<Self, AlgebraError> {
        if coeffs.len() < 2 || coeffs[0].is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(LinearODE { var: var.into(), coeffs })
    }

    /// Polynomial coefficients, highest derivative first.
    pub fn from_polys(var: impl Into<String>, coeffs: Vec<UniPoly>) -> Result<Self, AlgebraError> {
        Self::new(var, coeffs.into_iter().map(RationalFunction::from_poly).collect())
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficient of the `j`-th derivative.
    pub fn coeff_of_derivative(&self, j: usize) -> &RationalFunction {
        &self.coeffs[self.order() - j]
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        let lead = self.coeffs[0].clone();
        let coeffs = self.coeffs.iter().map(|c| c.div(&lead).expect("leading coefficient nonzero")).collect();
        LinearODE { var: self.var.clone(), coeffs }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == RationalFunction::one()
    }

    /// Every coefficient multiplied by the same function.
    pub fn scale_by(&self, f: &RationalFunction) -> Result<Self, AlgebraError> {
        Self::new(self.var.clone(), self.coeffs.iter().map(|c| c.mul(f)).collect())
    }

    /// `sum_j coeff_j(x) * derivs[j]` where `derivs[j]` approximates `y^(j)(x)`.
    pub fn residual_f64(&self, x: f64, derivs: &[f64]) -> f64 {
        self.terms_f64(x, derivs).iter().sum()
    }

    /// Individual terms `coeff_j(x) * derivs[j]`, zeroth derivative first.
    pub fn terms_f64(&self, x: f64, derivs: &[f64]) -> Vec<f64> {
        (0..=self.order()).map(|j| self.coeff_of_derivative(j).eval_f64(x) * derivs[j]).collect()
    }

    /// Coefficients rendered in the ODE variable, highest derivative first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string_in(&self.var)).collect()
    }

    /// Adds `delta` to the zeroth-order coefficient.
    pub fn perturbed(&self, delta: &Rational) -> Self {
        let mut out = self.clone();
        let n = out.order();
        out.coeffs[n] = out.coeffs[n].add(&RationalFunction::constant(delta.clone()));
        out
    }
}

impl fmt::Display for LinearODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = n - i;
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let d = match j {
                0 => "y".to_string(),
                1 => "y'".to_string(),
                2 => "y''".to_string(),
                _ => format!("y^({j})"),
            };
            write!(f, "({})*{}", c.to_string_in(&self.var), d)?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(" = 0")
    }
}

impl LinearODE {
    /// Whether every coefficient is a polynomial with rational values.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_polynomial())
    }

    pub fn zeroth_is_zero(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.num().coeffs().iter().all(Zero::is_zero))
    }
}
