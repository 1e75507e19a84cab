use std::cmp::Ordering;

use num_complex::Complex64;

use super::{Classification, CriticalPoint, Kind};
use crate::algebra::{AlgebraError, QuadSurd, Rational};
use crate::system::PlanarPolySystem;

/// Eigenvalues of a 2x2 Jacobian: exact when trace and determinant are
/// rational, numeric otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalues {
    Exact([QuadSurd; 2]),
    Numeric([Complex64; 2]),
}

impl Eigenvalues {
    pub fn to_complex(&self) -> [Complex64; 2] {
        match self {
            Eigenvalues::Exact([a, b]) => [a.to_complex(), b.to_complex()],
            Eigenvalues::Numeric(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&[QuadSurd; 2]> {
        match self {
            Eigenvalues::Exact(v) => Some(v),
            Eigenvalues::Numeric(_) => None,
        }
    }

    pub fn to_strings(&self) -> [String; 2] {
        match self {
            Eigenvalues::Exact([a, b]) => [a.to_string(), b.to_string()],
            Eigenvalues::Numeric(v) => v.map(|z| format!("{} + {}i", z.re, z.im)),
        }
    }
}

fn jacobian_surd(sys: &PlanarPolySystem, x: &QuadSurd, y: &QuadSurd) -> Result<[[QuadSurd; 2]; 2], AlgebraError> {
    let j = sys.jacobian();
    Ok([[j[0][0].eval_surd(x, y)?, j[0][1].eval_surd(x, y)?], [j[1][0].eval_surd(x, y)?, j[1][1].eval_surd(x, y)?]])
}

fn kind_from_signs(det: Ordering, disc: Ordering, trace: Ordering, tags: &mut Vec<String>) -> Kind {
    use Ordering::*;
    let kind = match (det, disc, trace) {
        (Equal, _, _) => Kind::Degenerate,
        (Less, _, _) => Kind::HyperbolicSaddle,
        (Greater, Greater | Equal, Less) => Kind::HyperbolicStableNode,
        (Greater, Greater | Equal, _) => Kind::HyperbolicUnstableNode,
        (Greater, Less, Equal) => Kind::HyperbolicCenterCandidate,
        (Greater, Less, Less) => Kind::HyperbolicStableFocus,
        (Greater, Less, Greater) => Kind::HyperbolicUnstableFocus,
    };
    let name = |o: Ordering| match o {
        Less => "<0",
        Equal => "=0",
        Greater => ">0",
    };
    tags.push(format!("det{}", name(det)));
    if det != Equal {
        tags.push(format!("disc{}", name(disc)));
        tags.push(format!("trace{}", name(trace)));
    }
    kind
}

/// Eigenvalues of the Jacobian at `pt` and the resulting elementary
/// classification. `Degenerate` means a zero eigenvalue.
pub fn linearize(sys: &PlanarPolySystem, pt: &CriticalPoint) -> Classification {
    let mut trace = Vec::new();
    if let (Some(x), Some(y)) = (pt.x.as_surd(), pt.y.as_surd()) {
        if let Ok(j) = jacobian_surd(sys, &x, &y) {
            let exact = (|| -> Result<_, AlgebraError> {
                let t = j[0][0].try_add(&j[1][1])?;
                let d = j[0][0].try_mul(&j[1][1])?.try_sub(&j[0][1].try_mul(&j[1][0])?)?;
                let disc = t.try_mul(&t)?.try_sub(&d.scale(&Rational::from_integer(4.into())))?;
                Ok((t, d, disc))
            })();
            if let Ok((t, d, disc)) = exact {
                let (st, sd, sdisc) = (t.signum(), d.signum(), disc.signum());
                if let (Some(st), Some(sd), Some(sdisc)) = (st, sd, sdisc) {
                    trace.push("exact".into());
                    let kind = kind_from_signs(sd, sdisc, st, &mut trace);
                    let eigenvalues = match (t.as_rational(), d.as_rational()) {
                        (Some(tr), Some(dr)) => {
                            let (l1, l2) = QuadSurd::quadratic_roots(&-tr.clone(), dr);
                            Eigenvalues::Exact([l1, l2])
                        }
                        _ => Eigenvalues::Numeric(numeric_eigen(t.to_f64(), d.to_f64())),
                    };
                    let mut c = Classification::bare(kind, trace);
                    c.eigenvalues = Some(eigenvalues);
                    return c;
                }
            }
        }
    }
    trace.push("numeric".into());
    let (x, y) = pt.to_f64();
    let j = sys.jacobian();
    let e = |k: usize, l: usize| j[k][l].eval_f64(x, y);
    let (t, d) = (e(0, 0) + e(1, 1), e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0));
    let scale = [e(0, 0), e(0, 1), e(1, 0), e(1, 1)].iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let sign = |v: f64, s: f64| if v.abs() <= 1e-12 * s { Ordering::Equal } else { v.total_cmp(&0.0) };
    let kind = kind_from_signs(sign(d, scale * scale), sign(t * t - 4.0 * d, scale * scale), sign(t, scale), &mut trace);
    let mut c = Classification::bare(kind, trace);
    c.eigenvalues = Some(Eigenvalues::Numeric(numeric_eigen(t, d)));
    c
}

fn numeric_eigen(t: f64, d: f64) -> [Complex64; 2] {
    let disc = Complex64::new(t * t - 4.0 * d, 0.0).sqrt();
    [(Complex64::new(t, 0.0) + disc) / 2.0, (Complex64::new(t, 0.0) - disc) / 2.0]
}
