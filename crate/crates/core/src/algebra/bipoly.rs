use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{from_int, rational_to_f64};
use super::{AlgebraError, QuadSurd, Rational, TruncatedSeries, UniPoly};

/// Sparse bivariate polynomial: map from `(deg_x, deg_y)` to a nonzero
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c x^i y^j`
    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, u32, u32)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, i, j) in terms {
            p.add_term(c, i, j);
        }
        p
    }

    /// Accumulates `c x^i y^j`, dropping the entry if it cancels.
    pub fn add_term(&mut self, c: Rational, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Lowest total degree among stored terms.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), v)| (v * c, i, j)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                out.add_term(a * b, i1 + i2, j1 + j2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn dx(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|((i, _), _)| *i > 0).map(|(&(i, j), c)| (c * from_int(i as i64), i - 1, j)))
    }

    pub fn dy(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|((_, j), _)| *j > 0).map(|(&(i, j), c)| (c * from_int(j as i64), i, j - 1)))
    }

    /// Terms of total degree at least `d`.
    pub fn from_degree(&self, d: u32) -> Self {
        Self::from_terms(self.terms.iter().filter(|((i, j), _)| i + j >= d).map(|(&(i, j), c)| (c.clone(), i, j)))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(self.terms.iter().filter(|((i, j), _)| i + j == d).map(|(&(i, j), c)| (c.clone(), i, j)))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|(&(i, j), c)| rational_to_f64(c) * x.powi(i as i32) * y.powi(j as i32)).sum()
    }

    /// Exact evaluation in a quadratic field.
    pub fn eval_surd(&self, x: &QuadSurd, y: &QuadSurd) -> Result<QuadSurd, AlgebraError> {
        let mut acc = QuadSurd::zero();
        for (&(i, j), c) in &self.terms {
            let t = x.try_pow(i)?.try_mul(&y.try_pow(j)?)?.scale(c);
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// `p(x, 0)` as a univariate polynomial in `x`.
    pub fn restrict_y_zero(&self) -> UniPoly {
        let deg = self.terms.keys().filter(|(_, j)| *j == 0).map(|(i, _)| *i).max();
        let Some(deg) = deg else { return UniPoly::zero() };
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// `p(x + h, y)`
    pub fn shift_x(&self, h: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let shifted = UniPoly::monomial(c.clone(), i as usize).shift(h);
            for (k, a) in shifted.coeffs().iter().enumerate() {
                out.add_term(a.clone(), k as u32, j);
            }
        }
        out
    }

    /// `p(x, y)` with `x` and `y` replaced by truncated series in one
    /// variable. Truncation order is the smaller of the two inputs.
    pub fn eval_series(&self, x: &TruncatedSeries, y: &TruncatedSeries) -> TruncatedSeries {
        let n = x.order().min(y.order());
        let max_i = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let xp = x.powers(max_i as usize, n);
        let yp = y.powers(max_j as usize, n);
        let mut acc = TruncatedSeries::zero(n);
        for (&(i, j), c) in &self.terms {
            acc = acc.add(&xp[i as usize].mul(&yp[j as usize]).scale(c));
        }
        acc
    }

    pub fn to_string_in(&self, xv: &str, yv: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        // graded, then by descending x power
        keys.sort_by(|a, b| (a.0 + a.1, b.0).cmp(&(b.0 + b.1, a.0)));
        let mut out = String::new();
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let pow = |v: &str, e: u32| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let mono: Vec<String> = [pow(xv, i), pow(yv, j)].into_iter().filter(|s| !s.is_empty()).collect();
            let mono = mono.join("*");
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x", "y"))
    }
}
