//! Poincaré compactification charts.
//!
//! For a system of degree `d` the chart `U1` uses `(x, y) = (1/v, u/v)` and
//! `U2` uses `(x, y) = (u/v, 1/v)`. Time is rescaled by `v^(d-1)`, so that
//!
//! ```text
//! U1:  u' = v^d [Q - u P],  v' = -v^(d+1) P
//! U2:  u' = v^d [P - u Q],  v' = -v^(d+1) Q
//! ```
//!
//! with `P`, `Q` evaluated at the chart map. The equator of the sphere is
//! `v = 0`. Only the origin of `U2` is examined there, since the rest of the
//! equator is covered by `U1`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{BiPoly, DEFAULT_TRUNCATION};
use crate::critical::{classify_point, real_roots, Classification, CriticalPoint, PointCoord};
use crate::pzfield::{GeneralizedSystem, PzError};
use crate::system::PlanarPolySystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    U1,
    U2,
}

impl std::fmt::Display for Chart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The compactified system in chart coordinates `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartSystem {
    pub chart: Chart,
    pub p_chart: BiPoly,
    pub q_chart: BiPoly,
    pub degree_used: u32,
}

impl ChartSystem {
    pub fn as_system(&self) -> PlanarPolySystem {
        PlanarPolySystem::new(self.p_chart.clone(), self.q_chart.clone())
    }

    pub fn to_strings(&self) -> [String; 2] {
        [format!("u' = {}", self.p_chart.to_string_in("u", "v")), format!("v' = {}", self.q_chart.to_string_in("u", "v"))]
    }
}

impl Serialize for ChartSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let [p, q] = self.to_strings();
        let mut st = s.serialize_struct("ChartSystem", 4)?;
        st.serialize_field("chart", &self.chart)?;
        st.serialize_field("p_chart", &p)?;
        st.serialize_field("q_chart", &q)?;
        st.serialize_field("degree_used", &self.degree_used)?;
        st.end()
    }
}

/// `v^d F(chart map)`; every term of total degree `<= d` stays polynomial.
fn homogenize(f: &BiPoly, d: u32, chart: Chart) -> BiPoly {
    BiPoly::from_terms(f.terms().map(|(&(i, j), c)| {
        let u_exp = match chart {
            Chart::U1 => j,
            Chart::U2 => i,
        };
        (c.clone(), u_exp, d - i - j)
    }))
}

pub fn chart_transform(sys: &PlanarPolySystem, chart: Chart) -> ChartSystem {
    let d = sys.degree();
    let ph = homogenize(&sys.p, d, chart);
    let qh = homogenize(&sys.q, d, chart);
    let (u, v) = (BiPoly::x(), BiPoly::y());
    let (p_chart, q_chart) = match chart {
        Chart::U1 => (qh.sub(&u.mul(&ph)), v.mul(&ph).neg()),
        Chart::U2 => (ph.sub(&u.mul(&qh)), v.mul(&qh).neg()),
    };
    ChartSystem { chart, p_chart, q_chart, degree_used: d }
}

/// [`chart_transform`] for a field that may carry non-integer exponents.
pub fn chart_transform_field(field: &GeneralizedSystem, chart: Chart) -> Result<ChartSystem, PzError> {
    Ok(chart_transform(&field.to_planar()?, chart))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfinityPoint {
    pub chart: Chart,
    pub point: CriticalPoint,
    /// `false` for chart points off the equator, which are finite points.
    pub at_infinity: bool,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfinityReport {
    pub charts: Vec<ChartSystem>,
    pub points: Vec<InfinityPoint>,
    pub notes: Vec<String>,
}

/// Critical points on the equator in `U1` and at the origin of `U2`, each
/// classified; for `x' = y` systems the off-equator `U1` points are listed
/// too.
pub fn infinity_analysis(sys: &PlanarPolySystem) -> InfinityReport {
    let u1 = chart_transform(sys, Chart::U1);
    let u2 = chart_transform(sys, Chart::U2);
    let mut notes = vec!["nilpotent points use the series classifier; its symbols f, B, G, m, n read F, f, Phi, alpha, beta".to_string()];
    let mut points = Vec::new();
    let n = DEFAULT_TRUNCATION;

    let classify = |chart: &ChartSystem, pt: CriticalPoint, at_infinity: bool| InfinityPoint {
        chart: chart.chart,
        classification: classify_point(&chart.as_system(), &pt, n),
        point: pt,
        at_infinity,
    };

    let equator = u1.p_chart.restrict_y_zero();
    if equator.is_zero() {
        notes.push("U1: the equator consists of critical points".into());
    } else {
        match real_roots(&equator) {
            Ok((roots, complex)) => {
                if complex {
                    notes.push("U1: complex equator roots omitted".into());
                }
                points.extend(roots.into_iter().map(|u| classify(&u1, CriticalPoint::on_axis(u), true)));
            }
            Err(e) => notes.push(format!("U1 equator: {e}")),
        }
    }

    if sys.p == BiPoly::y() {
        // finite points (x0, 0) with x0 != 0 sit at (u, v) = (0, 1/x0)
        match real_roots(&sys.q.restrict_y_zero()) {
            Ok((roots, _)) => {
                for x0 in roots {
                    if let Some(v0) = x0.recip() {
                        points.push(classify(&u1, CriticalPoint::new(PointCoord::zero(), v0), false));
                    }
                }
            }
            Err(e) => notes.push(format!("U1 off-equator: {e}")),
        }
    } else {
        notes.push("off-equator chart points not computed for P != y".into());
    }

    let origin = CriticalPoint::new(PointCoord::zero(), PointCoord::zero());
    let at_origin = |f: &BiPoly| f.coeff(0, 0);
    if at_origin(&u2.p_chart).is_zero() && at_origin(&u2.q_chart).is_zero() {
        points.push(classify(&u2, origin, true));
    }

    InfinityReport { charts: vec![u1, u2], points, notes }
}
