use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::CriticalError;
use crate::algebra::{rational_to_f64, QuadSurd, Rational, UniPoly};
use crate::pzfield::{instantiate_family, FamilyClass, FamilyTag};

/// Exact coordinate of a critical point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PointCoord {
    Rational(Rational),
    Surd(QuadSurd),
    /// `(-1)^negative * radicand^(1/index)` with a positive real `radicand`.
    Radical {
        radicand: QuadSurd,
        index: u32,
        negative: bool,
    },
}

impl PointCoord {
    pub fn zero() -> Self {
        PointCoord::Rational(Rational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            PointCoord::Rational(r) => rational_to_f64(r),
            PointCoord::Surd(s) => s.to_f64(),
            PointCoord::Radical { radicand, index, negative } => {
                let v = radicand.to_f64().powf(1.0 / *index as f64);
                if *negative {
                    -v
                } else {
                    v
                }
            }
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            PointCoord::Rational(r) => Some(r),
            PointCoord::Surd(s) => s.as_rational(),
            PointCoord::Radical { .. } => None,
        }
    }

    /// The value as an element of a quadratic field, when it is one.
    pub fn as_surd(&self) -> Option<QuadSurd> {
        match self {
            PointCoord::Rational(r) => Some(QuadSurd::from_rational(r.clone())),
            PointCoord::Surd(s) => Some(s.clone()),
            PointCoord::Radical { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(Zero::is_zero)
    }

    /// `1/x` for nonzero `x`.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            PointCoord::Rational(r) => PointCoord::Rational(r.recip()),
            PointCoord::Surd(s) => PointCoord::from_surd(s.try_inv().ok()?),
            PointCoord::Radical { radicand, index, negative } => {
                PointCoord::Radical { radicand: radicand.try_inv().ok()?, index: *index, negative: *negative }
            }
        })
    }

    fn from_surd(s: QuadSurd) -> Self {
        match s.as_rational() {
            Some(r) => PointCoord::Rational(r.clone()),
            None => PointCoord::Surd(s),
        }
    }

    /// Real `n`-th root of the real surd `x`, with the given sign flip.
    fn root(x: &QuadSurd, n: u32, negative: bool) -> Self {
        let flip = |p: PointCoord| if negative { p.neg() } else { p };
        if let Some(r) = x.exact_root(n) {
            return flip(PointCoord::Rational(r));
        }
        if n == 2 {
            if let Some(r) = x.as_rational() {
                return flip(PointCoord::Surd(QuadSurd::sqrt(r)));
            }
        }
        PointCoord::Radical { radicand: x.clone(), index: n, negative }
    }

    fn neg(self) -> Self {
        match self {
            PointCoord::Rational(r) => PointCoord::Rational(-r),
            PointCoord::Surd(s) => PointCoord::Surd(s.neg()),
            PointCoord::Radical { radicand, index, negative } => PointCoord::Radical { radicand, index, negative: !negative },
        }
    }
}

impl fmt::Display for PointCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointCoord::Rational(r) => write!(f, "{r}"),
            PointCoord::Surd(s) => write!(f, "{s}"),
            PointCoord::Radical { radicand, index, negative } => {
                write!(f, "{}({})^(1/{})", if *negative { "-" } else { "" }, radicand, index)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CriticalPoint {
    pub x: PointCoord,
    pub y: PointCoord,
    pub origin_flag: bool,
}

impl CriticalPoint {
    pub fn new(x: PointCoord, y: PointCoord) -> Self {
        let origin_flag = x.is_zero() && y.is_zero();
        CriticalPoint { x, y, origin_flag }
    }

    pub fn on_axis(x: PointCoord) -> Self {
        Self::new(x, PointCoord::zero())
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        Self::new(PointCoord::Rational(x), PointCoord::Rational(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl Serialize for CriticalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CriticalPoint", 4)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("x_approx", &self.x.to_f64())?;
        st.serialize_field("y", &self.y.to_string())?;
        st.serialize_field("y_approx", &self.y.to_f64())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinitePoints {
    pub points: Vec<CriticalPoint>,
    /// Some candidate abscissas are not real and were dropped.
    pub complex_roots: bool,
    /// `Q(x, 0)` vanishes identically: the axis is a line of equilibria.
    pub non_isolated: bool,
    pub notes: Vec<String>,
}

/// Real roots of `g`, exactly. Handles `g = x^j H(x^e)` with `deg H <= 2`.
/// Returns the roots sorted ascending and whether complex roots were dropped.
pub(crate) fn real_roots(g: &UniPoly) -> Result<(Vec<PointCoord>, bool), CriticalError> {
    let Some(j) = g.valuation() else {
        return Ok((vec![], false));
    };
    let mut roots = Vec::new();
    if j > 0 {
        roots.push(PointCoord::zero());
    }
    let h: Vec<Rational> = g.coeffs()[j..].to_vec();
    let step = (1..h.len()).filter(|&i| !h[i].is_zero()).fold(0usize, |acc, i| acc.gcd(&i));
    let mut complex = false;
    if step > 0 {
        let big: Vec<Rational> = h.iter().step_by(step).cloned().collect();
        let hx = UniPoly::new(big);
        let xs: Vec<QuadSurd> = match hx.degree() {
            Some(1) => vec![QuadSurd::from_rational(-hx.coeff(0) / hx.coeff(1))],
            Some(2) => {
                let lead = hx.coeff(2);
                let (r1, r2) = QuadSurd::quadratic_roots(&(hx.coeff(1) / &lead), &(hx.coeff(0) / &lead));
                if r1 == r2 {
                    vec![r1]
                } else {
                    vec![r1, r2]
                }
            }
            Some(d) => return Err(CriticalError::UnsupportedDegree(d)),
            None => vec![],
        };
        let n = step as u32;
        for x in xs {
            match x.signum() {
                None => complex = true,
                Some(_) if n == 1 => roots.push(PointCoord::from_surd(x)),
                Some(Ordering::Greater) => {
                    roots.push(PointCoord::root(&x, n, false));
                    if n % 2 == 0 {
                        roots.push(PointCoord::root(&x, n, true));
                    }
                }
                Some(Ordering::Less) if n % 2 == 1 => roots.push(PointCoord::root(&x.neg(), n, true)),
                Some(Ordering::Less) => complex = true,
                Some(Ordering::Equal) => unreachable!("h(0) != 0"),
            }
        }
    }
    roots.sort_by(|a, b| a.to_f64().total_cmp(&b.to_f64()));
    Ok((roots, complex))
}

/// Critical points of a polynomial family, found from `Q(x, 0) = 0`.
pub fn finite_critical_points(cls: &FamilyClass) -> Result<FinitePoints, CriticalError> {
    let sys = instantiate_family(cls)?.to_planar()?;
    let g = sys.q.restrict_y_zero();
    let mut notes = Vec::new();
    if g.is_zero() {
        notes.push("Q(x, 0) vanishes identically".into());
        return Ok(FinitePoints { points: vec![], complex_roots: false, non_isolated: true, notes });
    }
    let (roots, complex_roots) = real_roots(&g)?;
    let (a, b, c) = (&cls.params.a, &cls.params.b, &cls.params.c);
    let two = Rational::from_integer(2.into());
    match (cls.tag, cls.p, cls.r, cls.s) {
        (FamilyTag::F2, Some(p), Some(r), _) if !b.is_zero() => notes.push(format!(
            "closed form x^{} = {} (roots above are solved directly)",
            2 * p + 1 - r,
            -(&two * c) / (b * b * Rational::from_integer((r + 1).into()))
        )),
        (FamilyTag::F5, _, Some(r), Some(s)) if !a.is_zero() => notes.push(format!(
            "closed form x^{} = {} (roots above are solved directly)",
            2 * s + 1 - r,
            -(&two * c) / (a * Rational::from_integer((r + 1).into()))
        )),
        _ => {}
    }
    if complex_roots {
        notes.push("complex roots omitted".into());
    }
    let points = roots.into_iter().map(CriticalPoint::on_axis).collect();
    Ok(FinitePoints { points, complex_roots, non_isolated: false, notes })
}
