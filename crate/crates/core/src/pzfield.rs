//! The five-parameter field
//!
//! ```text
//! x' = y
//! y' = (alpha x^(m+k-1) + beta x^(m-k-1)) y - gamma(x) x^(2m-2k-1)
//! alpha = a(2m+k), beta = b(2m-k), gamma = a^2 m x^(4k) + c x^(2k) + b^2 m
//! ```
//!
//! and its polynomial families F1-F7.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{rat, rational_to_f64, BiPoly, Rational};
use crate::system::PlanarPolySystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PzError {
    #[error("system is not polynomial: {0}")]
    NotPolynomial(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PZParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub m: Rational,
    pub k: Rational,
}

impl PZParams {
    pub fn new(a: Rational, b: Rational, c: Rational, m: Rational, k: Rational) -> Self {
        PZParams { a, b, c, m, k }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, m: i64, k: i64) -> Self {
        Self::new(rat(a, 1), rat(b, 1), rat(c, 1), rat(m, 1), rat(k, 1))
    }

    /// `a(2m+k)`
    pub fn alpha(&self) -> Rational {
        &self.a * (rat(2, 1) * &self.m + &self.k)
    }

    /// `b(2m-k)`
    pub fn beta(&self) -> Rational {
        &self.b * (rat(2, 1) * &self.m - &self.k)
    }

    /// `c - 2abm`
    pub fn c0(&self) -> Rational {
        &self.c - rat(2, 1) * &self.a * &self.b * &self.m
    }

    pub fn as_strings(&self) -> [String; 5] {
        [&self.a, &self.b, &self.c, &self.m, &self.k].map(|r| r.to_string())
    }
}

impl fmt::Display for PZParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, c={}, m={}, k={})", self.a, self.b, self.c, self.m, self.k)
    }
}

impl Serialize for PZParams {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PZParams", 5)?;
        let [a, b, c, m, k] = self.as_strings();
        st.serialize_field("a", &a)?;
        st.serialize_field("b", &b)?;
        st.serialize_field("c", &c)?;
        st.serialize_field("m", &m)?;
        st.serialize_field("k", &k)?;
        st.end()
    }
}

/// `coeff * x^x_exp * y^y_deg` with a possibly fractional or negative
/// exponent of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub x_exp: Rational,
    pub y_deg: u8,
}

/// Right-hand side of `y'` in canonical form: equal `(x_exp, y_deg)` merged,
/// zero coefficients dropped, sorted by `(y_deg, x_exp)`. `x' = y` is implied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneralizedSystem {
    monomials: Vec<Monomial>,
}

impl GeneralizedSystem {
    pub fn from_monomials<I: IntoIterator<Item = (Rational, Rational, u8)>>(terms: I) -> Self {
        let mut out: Vec<Monomial> = Vec::new();
        for (coeff, x_exp, y_deg) in terms {
            assert!(y_deg <= 1, "the family is linear in y");
            match out.iter_mut().find(|t| t.x_exp == x_exp && t.y_deg == y_deg) {
                Some(t) => t.coeff += coeff,
                None => out.push(Monomial { coeff, x_exp, y_deg }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        out.sort_by(|l, r| (l.y_deg, &l.x_exp).cmp(&(r.y_deg, &r.x_exp)));
        GeneralizedSystem { monomials: out }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Whether every exponent is a nonnegative integer.
    pub fn is_polynomial(&self) -> bool {
        self.monomials.iter().all(|t| t.x_exp.is_integer() && !t.x_exp.is_negative())
    }

    pub fn to_planar(&self) -> Result<PlanarPolySystem, PzError> {
        let mut q = BiPoly::zero();
        for t in &self.monomials {
            if !(t.x_exp.is_integer() && !t.x_exp.is_negative()) {
                return Err(PzError::NotPolynomial(format!("exponent {} of x", t.x_exp)));
            }
            let e = u32::try_from(t.x_exp.to_integer()).map_err(|_| PzError::NotPolynomial("exponent too large".into()))?;
            q.add_term(t.coeff.clone(), e, t.y_deg as u32);
        }
        Ok(PlanarPolySystem::new(BiPoly::y(), q))
    }

    /// `Q(x, y)` for `x > 0` with real powers.
    pub fn q_f64(&self, x: f64, y: f64) -> f64 {
        self.monomials.iter().map(|t| rational_to_f64(&t.coeff) * x.powf(rational_to_f64(&t.x_exp)) * y.powi(t.y_deg as i32)).sum()
    }
}

impl fmt::Display for GeneralizedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("y' = ")?;
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.monomials.iter().rev().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            let mag = t.coeff.abs();
            if !mag.is_one() {
                parts.push(mag.to_string());
            }
            if !t.x_exp.is_zero() {
                if t.x_exp.is_one() {
                    parts.push("x".to_string());
                } else if t.x_exp.is_integer() && t.x_exp.is_positive() {
                    parts.push(format!("x^{}", t.x_exp));
                } else {
                    parts.push(format!("x^({})", t.x_exp));
                }
            }
            if t.y_deg == 1 {
                parts.push("y".to_string());
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// The generalized field for a parameter set.
pub fn build_field(params: &PZParams) -> GeneralizedSystem {
    let PZParams { a, b, c, m, k } = params;
    let one = Rational::one();
    let two = rat(2, 1);
    GeneralizedSystem::from_monomials([
        (params.alpha(), m + k - &one, 1),
        (params.beta(), m - k - &one, 1),
        (-(a * a * m), &two * m + &two * k - &one, 0),
        (-c.clone(), &two * m - &one, 0),
        (-(b * b * m), &two * m - &two * k - &one, 0),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    NonPolynomial,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    pub tag: FamilyTag,
    pub s: Option<i64>,
    pub p: Option<i64>,
    pub r: Option<i64>,
    pub params: PZParams,
    /// Set for `a = b = c = 0`, where the field vanishes identically.
    pub degenerate: bool,
}

fn nonneg_int(r: &Rational) -> Option<i64> {
    if r.is_integer() && !r.is_negative() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

/// Decides which polynomial family, if any, the parameters fall in.
pub fn classify_family(params: &PZParams) -> FamilyClass {
    let one = Rational::one();
    let two = rat(2, 1);
    let (m, k) = (&params.m, &params.k);
    let s = nonneg_int(&(m + k - &one));
    let p = nonneg_int(&(m - k - &one));
    let r = nonneg_int(&(&two * m - &one));
    let nz = (!params.a.is_zero(), !params.b.is_zero(), !params.c.is_zero());
    let mut out = FamilyClass { tag: FamilyTag::NonPolynomial, s: None, p: None, r: None, params: params.clone(), degenerate: false };
    let set = |out: &mut FamilyClass, tag, s, p, r| {
        out.tag = tag;
        out.s = s;
        out.p = p;
        out.r = r;
    };
    match nz {
        (true, true, true) => {
            if let (Some(s), Some(p)) = (s, p) {
                set(&mut out, FamilyTag::F1, Some(s), Some(p), Some(s + p + 1));
            }
        }
        (false, true, true) => {
            if let (Some(p), Some(r)) = (p, r) {
                set(&mut out, FamilyTag::F2, None, Some(p), Some(r));
            }
        }
        (true, true, false) => {
            if let (Some(s), Some(p)) = (s, p) {
                set(&mut out, FamilyTag::F3, Some(s), Some(p), None);
            }
        }
        (false, false, true) => {
            if let Some(r) = r {
                set(&mut out, FamilyTag::F4, None, None, Some(r));
            }
        }
        (true, false, true) => {
            if let (Some(s), Some(r)) = (s, r) {
                set(&mut out, FamilyTag::F5, Some(s), None, Some(r));
            }
        }
        (false, true, false) => {
            if let Some(p) = p {
                set(&mut out, FamilyTag::F6, None, Some(p), None);
            }
        }
        (true, false, false) => {
            if let Some(s) = s {
                set(&mut out, FamilyTag::F7, Some(s), None, None);
            }
        }
        (false, false, false) => {
            set(&mut out, FamilyTag::F4, None, None, r);
            out.degenerate = true;
        }
    }
    out
}

fn need(v: Option<i64>, name: &str, tag: FamilyTag) -> Result<Rational, PzError> {
    v.map(|n| rat(n, 1)).ok_or_else(|| PzError::NotPolynomial(format!("{tag} requires {name}")))
}

/// Builds the field from the family display and the class integers alone
/// (plus the free `m` for F6 and F7).
pub fn instantiate_family(cls: &FamilyClass) -> Result<GeneralizedSystem, PzError> {
    let PZParams { a, b, c, m, .. } = &cls.params;
    let tag = cls.tag;
    let one = Rational::one();
    let two = rat(2, 1);
    let half = rat(1, 2);
    let a2 = a * a;
    let b2 = b * b;
    let terms: Vec<(Rational, Rational, u8)> = match tag {
        FamilyTag::NonPolynomial => return Err(PzError::NotPolynomial("parameters fit no family".into())),
        FamilyTag::F1 | FamilyTag::F3 => {
            let s = need(cls.s, "s", tag)?;
            let p = need(cls.p, "p", tag)?;
            let mut t = vec![
                (a * (rat(3, 1) * &s + &p + rat(4, 1)) * &half, s.clone(), 1),
                (b * (&s + rat(3, 1) * &p + rat(4, 1)) * &half, p.clone(), 1),
                (-(&a2 * (&s + &p + &two) * &half), &two * &s + &one, 0),
                (-(&b2 * (&s + &p + &two) * &half), &two * &p + &one, 0),
            ];
            if tag == FamilyTag::F1 {
                t.push((-c.clone(), &s + &p + &one, 0));
            }
            t
        }
        FamilyTag::F2 => {
            let p = need(cls.p, "p", tag)?;
            let r = need(cls.r, "r", tag)?;
            vec![
                (b * (&r + &two * &p + rat(3, 1)) * &half, p.clone(), 1),
                (-c.clone(), r.clone(), 0),
                (-(&b2 * (&r + &one) * &half), &two * &p + &one, 0),
            ]
        }
        FamilyTag::F4 => {
            if cls.degenerate {
                vec![]
            } else {
                vec![(-c.clone(), need(cls.r, "r", tag)?, 0)]
            }
        }
        FamilyTag::F5 => {
            let s = need(cls.s, "s", tag)?;
            let r = need(cls.r, "r", tag)?;
            vec![
                (a * (&two * &s + &r + rat(3, 1)) * &half, s.clone(), 1),
                (-(&a2 * (&r + &one) * &half), &two * &s + &one, 0),
                (-c.clone(), r.clone(), 0),
            ]
        }
        FamilyTag::F6 => {
            let p = need(cls.p, "p", tag)?;
            vec![(b * (m + &p + &one), p.clone(), 1), (-(&b2 * m), &two * &p + &one, 0)]
        }
        FamilyTag::F7 => {
            let s = need(cls.s, "s", tag)?;
            vec![(a * (m + &s + &one), s.clone(), 1), (-(&a2 * m), &two * &s + &one, 0)]
        }
    };
    Ok(GeneralizedSystem::from_monomials(terms))
}

/// The planar system of a polynomial parameter set.
pub fn planar_system(params: &PZParams) -> Result<PlanarPolySystem, PzError> {
    build_field(params).to_planar()
}
