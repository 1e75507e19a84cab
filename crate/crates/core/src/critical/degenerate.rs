use num_traits::{Signed, Zero};

use super::{linearize, Classification, CriticalError, CriticalPoint, Kind};
use crate::algebra::{rat, series_implicit_solve, series_leading_term, AlgebraError, BiPoly, Rational, TruncatedSeries};
use crate::pzfield::{classify_family, FamilyTag, PZParams};
use crate::system::PlanarPolySystem;

/// Walks the nilpotent decision tree given the leading data of
/// `f(x) = a x^alpha + ...` and `Phi(x) = b x^beta + ...` (`None` for
/// `Phi = 0`).
fn nilpotent_tree(alpha: u32, a: &Rational, phi: Option<(u32, &Rational)>, trace: &mut Vec<String>) -> Kind {
    let even = |n: u32| n % 2 == 0;
    trace.push(format!("alpha={alpha} {}", if even(alpha) { "even" } else { "odd" }));
    match phi {
        Some((beta, b)) => trace.push(format!("beta={beta} b={b}")),
        None => trace.push("Phi=0".into()),
    }
    // alpha < 2 beta + 1 and Phi = 0 lead to the same outcomes below
    let below = phi.is_none_or(|(beta, _)| alpha < 2 * beta + 1);
    if even(alpha) {
        return if below {
            trace.push("a: alpha<2beta+1 or Phi=0".into());
            Kind::TwoHyperbolicSectors
        } else {
            trace.push("a: alpha>2beta+1".into());
            Kind::SaddleNode
        };
    }
    if a.is_positive() {
        trace.push("b: a>0".into());
        return Kind::Saddle;
    }
    trace.push("c: a<0".into());
    let Some((beta, b)) = phi else {
        trace.push("c5/c6".into());
        return Kind::FocusOrCenter;
    };
    let node_like = if alpha > 2 * beta + 1 {
        trace.push("alpha>2beta+1".into());
        true
    } else if alpha == 2 * beta + 1 {
        let d = b * b + rat(4, 1) * a * Rational::from_integer((beta + 1).into());
        trace.push(format!("alpha=2beta+1, b^2+4a(beta+1)={d}"));
        !d.is_negative()
    } else {
        trace.push("alpha<2beta+1".into());
        false
    };
    if !node_like {
        trace.push("c5/c6".into());
        return Kind::FocusOrCenter;
    }
    if even(beta) {
        trace.push("c1/c2: beta even".into());
        if b.is_negative() {
            Kind::StableNode
        } else {
            Kind::UnstableNode
        }
    } else {
        trace.push("c3/c4: beta odd".into());
        Kind::EllipticHyperbolic
    }
}

/// Classifies the origin of `x' = y + X(x, y)`, `y' = Y(x, y)` with `X`, `Y`
/// free of constant and linear terms, using series through order `n`.
pub fn classify_degenerate(x_part: &BiPoly, y_part: &BiPoly, n: usize) -> Result<Classification, CriticalError> {
    for (name, p) in [("X", x_part), ("Y", y_part)] {
        if p.min_degree().is_some_and(|d| d < 2) {
            return Err(CriticalError::NormalFormViolation(format!("{name} has terms of degree < 2")));
        }
    }
    let f_series = series_implicit_solve(x_part, n)?;
    let xs = TruncatedSeries::variable(n);
    let f = y_part.eval_series(&xs, &f_series);
    let phi = x_part.dx().add(&y_part.dy()).eval_series(&xs, &f_series);
    let (a, alpha) = match series_leading_term(&f) {
        Ok(v) => v,
        Err(AlgebraError::AllZero) => return Err(CriticalError::TruncationTooLow(n)),
        Err(e) => return Err(e.into()),
    };
    let phi_lead = series_leading_term(&phi).ok();
    let alpha = alpha as u32;
    let mut trace = vec![format!("F = {}", f_series)];
    let kind = nilpotent_tree(alpha, &a, phi_lead.as_ref().map(|(b, beta)| (*beta as u32, b)), &mut trace);
    Ok(Classification {
        kind,
        alpha: Some(alpha),
        beta: phi_lead.as_ref().map(|(_, beta)| *beta as u32),
        a_lead: Some(a),
        b_lead: phi_lead.map(|(b, _)| b),
        eigenvalues: None,
        trace,
    })
}

/// Linearization, falling back to the nilpotent classifier when the
/// Jacobian at a rational point is exactly `[[0, 1], [0, 0]]`.
pub fn classify_point(sys: &PlanarPolySystem, pt: &CriticalPoint, n: usize) -> Classification {
    let lin = linearize(sys, pt);
    if lin.kind != Kind::Degenerate {
        return lin;
    }
    let (Some(x0), Some(y0)) = (pt.x.as_rational(), pt.y.as_rational()) else {
        let mut c = lin;
        c.kind = Kind::Unclassified;
        c.trace.push("degenerate at an irrational point".into());
        return c;
    };
    let shifted = translate(sys, x0, y0);
    let lin_p = shifted.p.homogeneous_part(1);
    let lin_q = shifted.q.homogeneous_part(1);
    if lin_p != BiPoly::y() || !lin_q.is_zero() {
        let mut c = lin;
        c.kind = Kind::Unclassified;
        c.trace.push(CriticalError::NormalFormViolation("linear part is not [[0, 1], [0, 0]]".into()).to_string());
        return c;
    }
    let x_part = shifted.p.sub(&BiPoly::y());
    match classify_degenerate(&x_part, &shifted.q, n) {
        Ok(mut c) => {
            c.eigenvalues = lin.eigenvalues;
            c.trace.insert(0, "nilpotent".into());
            c
        }
        Err(e) => {
            let mut c = lin;
            c.kind = Kind::Unclassified;
            c.trace.push(e.to_string());
            c
        }
    }
}

/// `(x, y) -> (x + x0, y + y0)`
fn translate(sys: &PlanarPolySystem, x0: &Rational, y0: &Rational) -> PlanarPolySystem {
    let shift = |p: &BiPoly| {
        let mut out = BiPoly::zero();
        let xs = BiPoly::x().add(&BiPoly::constant(x0.clone()));
        let ys = BiPoly::y().add(&BiPoly::constant(y0.clone()));
        for (&(i, j), c) in p.terms() {
            out = out.add(&xs.pow(i).mul(&ys.pow(j)).scale(c));
        }
        out
    };
    PlanarPolySystem::new(shift(&sys.p), shift(&sys.q))
}

/// Local structure of the origin for family F1 with `c > 0`, read off the
/// lowest-order terms of the F1 field without series computation.
///
/// With `s = m+k-1`, `p = m-k-1` and `n = min(s, p)` the lowest pure-`x` term
/// has degree `2n+1` and the lowest `y` coefficient degree `n`. When `n = 0`
/// the origin is elementary and its Jacobian `[[0, 1], [a, b]]` decides.
#[allow(non_snake_case)]
pub fn origin_structure_F1(params: &PZParams) -> Result<Classification, CriticalError> {
    let cls = classify_family(params);
    if cls.tag != FamilyTag::F1 || !params.c.is_positive() {
        return Err(CriticalError::WrongFamily);
    }
    let (s, p) = (cls.s.unwrap_or(0), cls.p.unwrap_or(0));
    let n = s.min(p);
    let PZParams { a, b, c, m, .. } = params;
    let mut a_bar = Rational::zero();
    if s == n {
        a_bar -= a * a * m;
    }
    if p == n {
        a_bar -= b * b * m;
    }
    if s == p {
        a_bar -= c;
    }
    let mut b_bar = Rational::zero();
    if s == n {
        b_bar += params.alpha();
    }
    if p == n {
        b_bar += params.beta();
    }
    let alpha = 2 * n as u32 + 1;
    let beta = n as u32;
    let mut trace = vec![format!("s={s} p={p}")];
    if n == 0 {
        trace.push("elementary".into());
        let sys = PlanarPolySystem::new(BiPoly::y(), BiPoly::from_terms([(a_bar.clone(), 1, 0), (b_bar.clone(), 0, 1)]));
        let mut c = linearize(&sys, &CriticalPoint::rational(Rational::zero(), Rational::zero()));
        trace.append(&mut c.trace);
        c.trace = trace;
        c.alpha = Some(alpha);
        c.beta = Some(beta);
        c.a_lead = Some(a_bar);
        c.b_lead = Some(b_bar);
        return Ok(c);
    }
    // with s = p the y coefficient is exactly (A + B) x^s, so it may vanish
    let phi = (!b_bar.is_zero()).then_some((beta, &b_bar));
    let kind = nilpotent_tree(alpha, &a_bar, phi, &mut trace);
    Ok(Classification {
        kind,
        alpha: Some(alpha),
        beta: phi.map(|_| beta),
        a_lead: Some(a_bar.clone()),
        b_lead: phi.map(|(_, b)| b.clone()),
        eigenvalues: None,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, DEFAULT_TRUNCATION};
    use crate::pzfield::planar_system;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn u2_chart(b: &Rational, c: &Rational) -> (BiPoly, BiPoly) {
        let x = BiPoly::from_terms([(c.clone(), 3, 0), (q("-5/2") * b, 1, 1), (q("3/2") * b * b, 2, 1)]);
        let y = BiPoly::from_terms([(q("-5/2") * b, 0, 2), (q("3/2") * b * b, 1, 2), (c.clone(), 2, 1)]);
        (x, y)
    }

    #[test]
    fn chart_origin_is_a_node() {
        for c in ["1", "-1", "2", "-2"].map(q) {
            let (x, y) = u2_chart(&q("1"), &c);
            let cl = classify_degenerate(&x, &y, DEFAULT_TRUNCATION).unwrap();
            assert_eq!((cl.alpha, cl.beta), (Some(5), Some(2)));
            assert_eq!(cl.a_lead, Some(-(&c * &c)));
            assert_eq!(cl.b_lead, Some(q("4") * &c));
            let want = if c > q("0") { Kind::UnstableNode } else { Kind::StableNode };
            assert_eq!(cl.kind, want, "{:?}", cl.trace);
        }
    }

    #[test]
    fn cubic_saddle_and_errors() {
        let cl = classify_degenerate(&BiPoly::zero(), &BiPoly::term(q("1"), 3, 0), 8).unwrap();
        assert_eq!((cl.kind, cl.alpha, cl.a_lead.clone()), (Kind::Saddle, Some(3), Some(q("1"))));
        assert!(cl.beta.is_none());
        let bad = classify_degenerate(&BiPoly::x(), &BiPoly::term(q("1"), 3, 0), 8);
        assert!(matches!(bad, Err(CriticalError::NormalFormViolation(_))));
        let too_short = classify_degenerate(&BiPoly::zero(), &BiPoly::term(q("1"), 9, 0), 8);
        assert_eq!(too_short.unwrap_err(), CriticalError::TruncationTooLow(8));
    }

    #[test]
    fn remaining_branches() {
        let y = |terms: &[(i64, u32, u32)]| BiPoly::from_terms(terms.iter().map(|&(c, i, j)| (rat(c, 1), i, j)));
        // x^2: alpha even, Phi = 0
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(1, 2, 0)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::TwoHyperbolicSectors);
        // x^4 + x y: alpha = 4 > 2*1 + 1
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(1, 4, 0), (1, 1, 1)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::SaddleNode);
        // -x^3 + x y: alpha = 3 = 2*1 + 1, beta odd, b^2 + 8a = -7 < 0
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(-1, 3, 0), (1, 1, 1)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::FocusOrCenter);
        // -x^3 + 3 x y: b^2 + 8a = 1 >= 0, beta odd
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(-1, 3, 0), (3, 1, 1)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::EllipticHyperbolic);
        // -x^5 - x^2 y: alpha = 5 = 2*2 + 1, b^2 + 12a < 0
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(-1, 5, 0), (-1, 2, 1)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::FocusOrCenter);
        // -x^5 - 4 x^2 y: 16 - 12 >= 0, beta even, b < 0
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(-1, 5, 0), (-4, 2, 1)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::StableNode);
        // -x^3: Phi = 0
        let cl = classify_degenerate(&BiPoly::zero(), &y(&[(-1, 3, 0)]), 8).unwrap();
        assert_eq!(cl.kind, Kind::FocusOrCenter);
    }

    #[test]
    fn f1_closed_form_examples() {
        let cl = origin_structure_F1(&PZParams::new(q("1"), q("1"), q("1"), q("5/2"), q("-1/2"))).unwrap();
        assert_eq!((cl.kind, cl.alpha, cl.beta), (Kind::EllipticHyperbolic, Some(3), Some(1)));
        let cl = origin_structure_F1(&PZParams::new(q("1"), q("1"), q("1"), q("7/2"), q("-1/2"))).unwrap();
        assert_eq!((cl.kind, cl.alpha, cl.beta), (Kind::UnstableNode, Some(5), Some(2)));
        // m = 2, k = 1: p = 0, the origin is elementary
        let cl = origin_structure_F1(&PZParams::from_ints(1, 1, 1, 2, 1)).unwrap();
        assert_eq!(cl.kind, Kind::HyperbolicUnstableNode);
        let cl = origin_structure_F1(&PZParams::from_ints(1, -1, 1, 2, 1)).unwrap();
        assert_eq!(cl.kind, Kind::HyperbolicStableNode);
        assert_eq!(origin_structure_F1(&PZParams::from_ints(1, 1, 1, 2, 2)).unwrap_err(), CriticalError::WrongFamily);
        assert_eq!(origin_structure_F1(&PZParams::from_ints(1, 1, -1, 2, 1)).unwrap_err(), CriticalError::WrongFamily);
    }

    #[test]
    fn f1_closed_form_agrees_with_series_classifier() {
        let halves: Vec<Rational> = (-6..=12).map(|n| rat(n, 2)).collect();
        let coeffs = ["1", "-1", "2", "1/2", "-3"].map(q);
        let mut checked = 0;
        for m in &halves {
            for k in &halves {
                for a in &coeffs {
                    for b in &coeffs {
                        let params = PZParams::new(a.clone(), b.clone(), q("1"), m.clone(), k.clone());
                        let Ok(closed) = origin_structure_F1(&params) else { continue };
                        let sys = planar_system(&params).unwrap();
                        let series = classify_point(&sys, &CriticalPoint::rational(q("0"), q("0")), 16);
                        assert_eq!(closed.kind, series.kind, "{params}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn classify_point_translates() {
        // y' = (x - 1)^3 around (1, 0)
        let sys =
            PlanarPolySystem::new(BiPoly::y(), BiPoly::from_terms([(q("1"), 3, 0), (q("-3"), 2, 0), (q("3"), 1, 0), (q("-1"), 0, 0)]));
        let cl = classify_point(&sys, &CriticalPoint::rational(q("1"), q("0")), 8);
        assert_eq!(cl.kind, Kind::Saddle);
        assert_eq!(cl.trace[0], "nilpotent");
        // zero linear part is not in the nilpotent normal form
        let sys = PlanarPolySystem::new(BiPoly::term(q("1"), 0, 2), BiPoly::term(q("1"), 2, 0));
        assert_eq!(classify_point(&sys, &CriticalPoint::rational(q("0"), q("0")), 8).kind, Kind::Unclassified);
    }
}
