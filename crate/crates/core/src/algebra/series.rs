use std::fmt;

use num_traits::{One, Zero};

use super::{AlgebraError, BiPoly, Rational};

/// Power series truncated at order `N`: exactly `N` stored coefficients, the
/// terms of degree `>= N` are unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The identity series `x`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Pads with zeros or drops coefficients so the result has `order` terms.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, i: usize, c: Rational) {
        if i < self.coeffs.len() {
            self.coeffs[i] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries { coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product through the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `[1, s, s^2, ..., s^max]`, all at order `n`.
    pub fn powers(&self, max: usize, n: usize) -> Vec<Self> {
        let base = self.truncate(n);
        let mut out = Vec::with_capacity(max + 1);
        out.push(Self::one(n));
        for k in 1..=max {
            let next = out[k - 1].mul(&base);
            out.push(next);
        }
        out
    }

    /// `self(inner(x))`; requires `inner` to have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        if !inner.coeff(0).is_zero() {
            return Err(AlgebraError::NoFormalSolution("inner series has a constant term".into()));
        }
        let n = self.order().min(inner.order());
        let mut acc = Self::zero(n);
        let mut p = Self::one(n);
        for c in self.coeffs.iter().take(n) {
            acc = acc.add(&p.scale(c));
            p = p.mul(inner);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let n = self.order().saturating_sub(1);
        TruncatedSeries { coeffs: (0..n).map(|i| &self.coeffs[i + 1] * Rational::from_integer((i as i64 + 1).into())).collect() }
    }
}

/// First nonzero coefficient and its exponent.
pub fn series_leading_term(s: &TruncatedSeries) -> Result<(Rational, usize), AlgebraError> {
    s.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(i, c)| (c.clone(), i)).ok_or(AlgebraError::AllZero)
}

/// Solves `y + X(x, y) = 0` for `y = F(x)` as a power series through order
/// `n`, matching coefficients one degree at a time.
pub fn series_implicit_solve(x_part: &BiPoly, n: usize) -> Result<TruncatedSeries, AlgebraError> {
    let cy = Rational::one() + x_part.coeff(0, 1);
    if cy.is_zero() {
        return Err(AlgebraError::NoFormalSolution("coefficient of y in y + X vanishes".into()));
    }
    if !x_part.coeff(0, 0).is_zero() {
        return Err(AlgebraError::NoFormalSolution("X has a constant term".into()));
    }
    let g = x_part.add(&BiPoly::y());
    let xs = TruncatedSeries::variable(n);
    let mut f = TruncatedSeries::zero(n);
    for k in 1..n {
        // coefficient k of G(x, F) is linear in f_k with slope cy; f_k is zero here
        let residual = g.eval_series(&xs, &f).coeff(k);
        f.coeffs[k] = -residual / &cy;
    }
    Ok(f)
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = super::UniPoly::new(self.coeffs.clone());
        write!(f, "{} + O(x^{})", poly, self.order())
    }
}
