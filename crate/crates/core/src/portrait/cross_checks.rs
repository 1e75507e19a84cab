//! Numerical cross-checks of the exact transformation chain.

use super::{verify_pipeline, verify_transform, Source, Target};
use crate::algebra::{parse_rational, rat, rational_to_f64, LinearODE, Rational, UniPoly};
use crate::pzfield::PZParams;
use crate::transforms::{complete_square, full_pipeline, to_gegenbauer, TransformError};

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

/// Residual of the substitution `xi = tau / sqrt(tau^2 + q0)` from the
/// normalized equation into `target`.
fn xi_residual(ns_ode: &LinearODE, q0: f64, target: LinearODE) -> f64 {
    let src = Source::from_ode(ns_ode, vec![1.0, 0.5]);
    let map = move |s: f64, st: &[f64]| (s / (s * s + q0).sqrt(), st[0]);
    verify_transform(&src, &Target::Linear(target), &map, (-1.0, 1.0), 15).unwrap()
}

#[test]
fn gegenbauer_middle_coefficient_is_l1_minus_3() {
    for (m, k, a, b, c0) in [("2", "1", "1", "1", "5"), ("1", "1", "1", "1", "3"), ("3/2", "1/2", "-1", "2", "7/2")] {
        let (m, k, a, b, c0) = (q(m), q(k), q(a), q(b), q(c0));
        let lambda = &a * &b * &k * &k;
        let ns = complete_square(&m, &q("0"), &c0, &(q("2") * &m + &k), &q("0"), &lambda).unwrap();
        assert_ne!(ns.q0, q("1"));
        let q0 = rational_to_f64(&ns.q0);
        let ours = xi_residual(&ns.to_ode(), q0, to_gegenbauer(&ns).unwrap());
        assert!(ours <= 1e-7, "{ours}");
        // the same equation with (l1 - 3/q0) in the middle does not satisfy the substitution
        let alt = LinearODE::from_polys(
            "xi",
            vec![UniPoly::from_ints(&[1, 0, -1]), UniPoly::monomial(&ns.l1 - q("3") / &ns.q0, 1), UniPoly::constant(&ns.lambda / &ns.q0)],
        )
        .unwrap();
        assert!(xi_residual(&ns.to_ode(), q0, alt) >= 1e-3);
    }
}

#[test]
fn negative_q0_branch_verifies() {
    // c0 = 2 - 2*1*2*1 = -2 < 0 with m = 1 > 0
    let params = PZParams::from_ints(1, 2, 2, 1, 1);
    let rep = full_pipeline(&params).unwrap();
    assert!(rep.normalized.q0 < rat(0, 1));
    for r in verify_pipeline(&rep, 10).unwrap() {
        assert!(r.residual <= 1e-6, "{r:?}");
    }
}

#[test]
fn pipeline_errors_carry_the_stage() {
    let err = full_pipeline(&PZParams::from_ints(0, 1, 3, 1, 1)).unwrap_err();
    assert_eq!(err.stage(), Some("riccati_to_linear"));
    assert_eq!(err.root(), &TransformError::SubstitutionUndefined);
    // c0 = c - 2abm = 0
    let err = full_pipeline(&PZParams::from_ints(1, 1, 2, 1, 1)).unwrap_err();
    assert!(err.stage().is_some());
}
