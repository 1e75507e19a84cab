use serde::Serialize;

use super::integrate::solve_to;
use super::PortraitError;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
/// Gauss weights for the odd-indexed Kronrod nodes and the centre.
const WG: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// One 15-point Kronrod estimate and its difference from the embedded
/// 7-point Gauss rule.
fn g7k15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let pair = f(c - h * XGK[i]) + f(c + h * XGK[i]);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss-Kronrod (7/15) quadrature to absolute accuracy `tol`.
pub fn gauss_kronrod(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64, PortraitError> {
    let mut parts = vec![(a, b, g7k15(&f, a, b))];
    for _ in 0..2000 {
        let (total, err): (f64, f64) = parts.iter().fold((0.0, 0.0), |(s, e), p| (s + p.2 .0, e + p.2 .1));
        if !total.is_finite() {
            break;
        }
        if err <= tol {
            return Ok(total);
        }
        let worst = (0..parts.len()).max_by(|&i, &j| parts[i].2 .1.total_cmp(&parts[j].2 .1)).expect("nonempty");
        let (lo, hi, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        parts.push((lo, mid, g7k15(&f, lo, mid)));
        parts.push((mid, hi, g7k15(&f, mid, hi)));
    }
    Err(PortraitError::Quadrature(a, b))
}

fn check_domain(c: f64, t0: f64, t: f64) -> Result<(), PortraitError> {
    let (lo, hi) = (t0.min(t), t0.max(t));
    let nearest = if lo <= 0.0 && 0.0 <= hi {
        0.0
    } else if hi < 0.0 {
        hi
    } else {
        lo
    };
    if 3.0 * nearest * nearest + 2.0 * c > 0.0 {
        Ok(())
    } else {
        Err(PortraitError::DomainError(format!("3t^2 + 2c vanishes on [{lo}, {hi}] for c = {c}")))
    }
}

/// `z(t) = (K - int b R^(-5/6) dt) / R^(1/6)` with `R = 3t^2 + 2c` and `K`
/// fixed by `z(t0) = z0`: the solution of
/// `(-3/2 t^2 - c) z' = b/2 + t z/2`.
pub fn riccati_quadrature(b: f64, c: f64, t0: f64, z0: f64, t: f64) -> Result<f64, PortraitError> {
    check_domain(c, t0, t)?;
    let r = |s: f64| 3.0 * s * s + 2.0 * c;
    let integral = gauss_kronrod(|s| b * r(s).powf(-5.0 / 6.0), t0, t, 1e-10)?;
    Ok((z0 * r(t0).powf(1.0 / 6.0) - integral) / r(t).powf(1.0 / 6.0))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureCheck {
    pub closed_form: f64,
    /// Direct integration with `+b/2` on the right.
    pub direct_plus: f64,
    /// Direct integration with `-b/2` on the right.
    pub direct_minus: f64,
    /// Sign of `b/2` whose direct solution matches the closed form within `1e-7`.
    pub matching_sign: Option<i8>,
}

/// The closed form against direct integration of both sign variants.
pub fn riccati_quadrature_check(b: f64, c: f64, t0: f64, z0: f64, t: f64) -> Result<QuadratureCheck, PortraitError> {
    let closed_form = riccati_quadrature(b, c, t0, z0, t)?;
    let direct = |sign: f64| -> Result<f64, PortraitError> {
        let rhs = |s: f64, z: &[f64], dz: &mut [f64]| dz[0] = (sign * b / 2.0 + s * z[0] / 2.0) / (-1.5 * s * s - c);
        Ok(solve_to(rhs, t0, t, &[z0], 1e-12)?[0])
    };
    let (direct_plus, direct_minus) = (direct(1.0)?, direct(-1.0)?);
    let matching_sign = if (direct_plus - closed_form).abs() <= 1e-7 {
        Some(1)
    } else if (direct_minus - closed_form).abs() <= 1e-7 {
        Some(-1)
    } else {
        None
    };
    Ok(QuadratureCheck { closed_form, direct_plus, direct_minus, matching_sign })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_on_known_integrals() {
        let v = gauss_kronrod(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let v = gauss_kronrod(|x| x.sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-10);
        let v = gauss_kronrod(|x| x.exp(), 1.0, 0.0, 1e-12).unwrap();
        assert!((v + std::f64::consts::E - 1.0).abs() < 1e-12);
        assert!(gauss_kronrod(|x| 1.0 / x, -1.0, 1.0, 1e-10).is_err());
    }

    #[test]
    fn zero_b_is_a_pure_scaling() {
        for t in [-2.0, -0.3, 0.0, 0.7, 3.0] {
            let z = riccati_quadrature(0.0, 1.0, 0.5, 2.0, t).unwrap();
            let want = 2.0 * (3.0 * 0.25 + 2.0f64).powf(1.0 / 6.0) / (3.0 * t * t + 2.0f64).powf(1.0 / 6.0);
            assert!((z - want).abs() < 1e-14);
        }
    }

    #[test]
    fn plus_sign_matches() {
        let chk = riccati_quadrature_check(1.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(chk.matching_sign, Some(1));
        assert!((chk.direct_plus - chk.closed_form).abs() <= 1e-7);
        assert!((chk.direct_minus - chk.closed_form).abs() > 1e-3);
    }

    #[test]
    fn domain_errors() {
        let root = (2.0f64 / 3.0).sqrt();
        assert!(matches!(riccati_quadrature(1.0, -1.0, 0.0, 0.0, 2.0), Err(PortraitError::DomainError(_))));
        assert!(matches!(riccati_quadrature(1.0, -1.0, root, 0.0, 2.0), Err(PortraitError::DomainError(_))));
        assert!(riccati_quadrature(1.0, -1.0, root + 0.1, 0.0, 2.0).is_ok());
        assert!(riccati_quadrature(1.0, -1.0, -3.0, 0.0, -root - 0.1).is_ok());
        assert!(riccati_quadrature(1.0, 0.0, 0.0, 0.0, 1.0).is_err());
    }
}
