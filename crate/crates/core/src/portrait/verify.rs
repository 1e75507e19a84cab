use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use super::integrate::solve_to;
use super::PortraitError;
use crate::algebra::{rational_to_f64, LinearODE, Rational};
use crate::pzfield::{GeneralizedSystem, PZParams};
use crate::transforms::{PipelineReport, RiccatiEq};

type Rhs = dyn Fn(f64, &[f64], &mut [f64]) + Send + Sync;

/// A first-order system to integrate, started from `init` at the left end of
/// the verification interval.
#[derive(Clone)]
pub struct Source {
    rhs: Arc<Rhs>,
    pub init: Vec<f64>,
}

impl std::fmt::Debug for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Source").field("init", &self.init).finish_non_exhaustive()
    }
}

impl Source {
    pub fn new(rhs: impl Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static, init: Vec<f64>) -> Self {
        Source { rhs: Arc::new(rhs), init }
    }

    /// State `(y, y', ..., y^(n-1))` of a linear ODE.
    pub fn from_ode(ode: &LinearODE, init: Vec<f64>) -> Self {
        let ode = ode.clone();
        let n = ode.order();
        Source::new(
            move |x, y, dy| {
                let mut derivs = y.to_vec();
                derivs.push(1.0);
                let terms = ode.terms_f64(x, &derivs);
                dy[..n - 1].copy_from_slice(&y[1..n]);
                dy[n - 1] = -terms[..n].iter().sum::<f64>() / terms[n];
            },
            init,
        )
    }

    /// The orbit equation `dy/dx = Q(x, y)/y` of `x' = y, y' = Q`.
    pub fn foliation(field: &GeneralizedSystem, y0: f64) -> Self {
        let field = field.clone();
        Source::new(move |x, y, dy| dy[0] = field.q_f64(x, y[0]) / y[0], vec![y0])
    }

    /// The Riccati equation together with `I' = a k z/(m t^2 + c0)`, so that
    /// `w = exp(I)` is the linearizing variable.
    pub fn riccati_augmented(eq: &RiccatiEq, params: &PZParams, z0: f64) -> Self {
        let eq = eq.clone();
        let ak = rational_to_f64(&(&params.a * &params.k));
        let m = rational_to_f64(&params.m);
        let c0 = rational_to_f64(&params.c0());
        Source::new(
            move |t, y, dy| {
                dy[0] = eq.slope_f64(t, y[0]);
                dy[1] = ak * y[0] / (m * t * t + c0);
            },
            vec![z0, 0.0],
        )
    }
}

/// Equation checked on the mapped samples.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Linear(LinearODE),
    Riccati(RiccatiEq),
}

impl Target {
    fn order(&self) -> usize {
        match self {
            Target::Linear(ode) => ode.order(),
            Target::Riccati(_) => 1,
        }
    }

    /// The same target with 1 added to its zeroth-order coefficient.
    pub fn perturbed(&self) -> Self {
        match self {
            Target::Linear(ode) => Target::Linear(ode.perturbed(&Rational::one())),
            Target::Riccati(eq) => {
                let mut eq = eq.clone();
                eq.rhs_c0 += Rational::one();
                Target::Riccati(eq)
            }
        }
    }

    /// Terms whose sum vanishes on a solution; `derivs` holds `Y, Y', ...`.
    fn terms(&self, t: f64, derivs: &[f64]) -> Vec<f64> {
        match self {
            Target::Linear(ode) => ode.terms_f64(t, derivs),
            Target::Riccati(eq) => {
                let (z, dz) = (derivs[0], derivs[1]);
                vec![
                    eq.lhs_coeff.eval_f64(t) * dz,
                    -rational_to_f64(&eq.rhs_c0),
                    -rational_to_f64(&eq.rhs_c1) * t * z,
                    -rational_to_f64(&eq.rhs_c2) * z * z,
                ]
            }
        }
    }
}

/// Sends `(s, state)` of the source to `(T, Y)` of the target.
pub type PointMap = dyn Fn(f64, &[f64]) -> (f64, f64) + Send + Sync;

const SOURCE_TOL: f64 = 1e-13;
const SINGULAR: f64 = 1e-10;

/// Integrates `source` across `interval`, maps `n_samples` interior points
/// and returns `max |sum of target terms| / max |term|`. Derivatives of the
/// mapped curve come from Richardson-extrapolated central differences in the
/// source variable.
pub fn verify_transform(
    source: &Source,
    target: &Target,
    map: &PointMap,
    interval: (f64, f64),
    n_samples: usize,
) -> Result<f64, PortraitError> {
    let order = target.order();
    if order > 2 {
        return Err(PortraitError::UnsupportedOrder(order));
    }
    let (s0, s1) = interval;
    if n_samples == 0 || !(s1 > s0) {
        return Err(PortraitError::InvalidArgument(format!("interval ({s0}, {s1}) with {n_samples} samples")));
    }
    let len = s1 - s0;
    let h = 5e-3 * len;
    // keep the stencil inside the interval
    let inner = (s0 + 2.0 * h, s1 - 2.0 * h);
    let rhs = |t: f64, y: &[f64], dy: &mut [f64]| (source.rhs)(t, y, dy);
    let mut state = source.init.clone();
    let mut at = s0;
    let mut max_res = 0.0f64;
    let mut max_term = 0.0f64;
    for i in 0..n_samples {
        let s = if n_samples == 1 { 0.5 * (inner.0 + inner.1) } else { inner.0 + (inner.1 - inner.0) * i as f64 / (n_samples - 1) as f64 };
        state = solve_to(rhs, at, s, &state, SOURCE_TOL)?;
        at = s;
        let mut t_vals = [0.0; 5];
        let mut y_vals = [0.0; 5];
        for (j, off) in [-2.0, -1.0, 0.0, 1.0, 2.0].into_iter().enumerate() {
            let sj = s + off * h;
            let st = if off == 0.0 { state.clone() } else { solve_to(rhs, s, sj, &state, SOURCE_TOL)? };
            (t_vals[j], y_vals[j]) = map(sj, &st);
        }
        let (t, ts, tss) = differences(&t_vals, h);
        let (y, ys, yss) = differences(&y_vals, h);
        if ts.abs() < SINGULAR {
            return Err(PortraitError::SingularMap(s));
        }
        let dy = ys / ts;
        let d2y = (yss * ts - ys * tss) / ts.powi(3);
        let derivs = [y, dy, d2y];
        let terms = target.terms(t, &derivs[..=order]);
        if terms.iter().any(|v| !v.is_finite()) {
            return Err(PortraitError::SingularMap(s));
        }
        max_res = max_res.max(terms.iter().sum::<f64>().abs());
        max_term = terms.iter().fold(max_term, |m, v| m.max(v.abs()));
    }
    Ok(if max_term == 0.0 { 0.0 } else { max_res / max_term })
}

/// Value, first and second derivative at the centre of the stencil
/// `f(s-2h), ..., f(s+2h)`, each to fourth order.
fn differences(f: &[f64; 5], h: f64) -> (f64, f64, f64) {
    let d1 = |k: f64, a: f64, b: f64| (b - a) / (2.0 * k * h);
    let d2 = |k: f64, a: f64, b: f64| (b - 2.0 * f[2] + a) / (k * k * h * h);
    let first = (4.0 * d1(1.0, f[1], f[3]) - d1(2.0, f[0], f[4])) / 3.0;
    let second = (4.0 * d2(1.0, f[1], f[3]) - d2(2.0, f[0], f[4])) / 3.0;
    (f[2], first, second)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageResidual {
    pub stage: String,
    pub residual: f64,
    /// Residual against the target with its zeroth coefficient shifted by 1.
    pub control: f64,
}

fn stage(
    name: &str,
    source: &Source,
    target: &Target,
    map: &PointMap,
    interval: (f64, f64),
    n: usize,
) -> Result<StageResidual, PortraitError> {
    Ok(StageResidual {
        stage: name.to_string(),
        residual: verify_transform(source, target, map, interval, n)?,
        control: verify_transform(source, &target.perturbed(), map, interval, n)?,
    })
}

/// Residuals of every stage of a pipeline report.
pub fn verify_pipeline(report: &PipelineReport, n_samples: usize) -> Result<Vec<StageResidual>, PortraitError> {
    let p = &report.params;
    let f = |r: &Rational| rational_to_f64(r);
    let (a, b, m, k) = (f(&p.a), f(&p.b), f(&p.m), f(&p.k));
    let mut out = Vec::new();

    // orbit equation in x > 0, mapped by z = x^k, t = y x^-m - a x^k - b x^-k
    let fol = Source::foliation(&report.lienard, 3.0);
    let map = move |x: f64, st: &[f64]| (st[0] * x.powf(-m) - a * x.powf(k) - b * x.powf(-k), x.powf(k));
    out.push(stage("riccati", &fol, &Target::Riccati(report.riccati.clone()), &map, (1.0, 1.5), n_samples)?);

    let (t0, t1) = riccati_interval(p);
    let ric = Source::riccati_augmented(&report.riccati, p, 0.25);
    let map = |t: f64, st: &[f64]| (t, st[1].exp());
    out.push(stage("linear", &ric, &Target::Linear(report.linear.clone()), &map, (t0, t1), n_samples)?);

    let lin = Source::from_ode(&report.linear, vec![1.0, 0.5]);
    let shift = f(&report.normalized.shift);
    let map = move |t: f64, st: &[f64]| (t + shift, st[0]);
    out.push(stage("normalized", &lin, &Target::Linear(report.normalized.to_ode()), &map, (t0, t1), n_samples)?);

    let q0 = f(&report.normalized.q0);
    let norm = Source::from_ode(&report.normalized.to_ode(), vec![1.0, 0.5]);
    let tau = if q0 > 0.0 { (-1.0, 1.0) } else { ((-q0).sqrt() + 0.5, (-q0).sqrt() + 1.5) };
    let map = move |s: f64, st: &[f64]| (s / (s * s + q0).sqrt(), st[0]);
    out.push(stage("gegenbauer", &norm, &Target::Linear(report.gegenbauer.clone()), &map, tau, n_samples)?);

    let geg = Source::from_ode(&report.gegenbauer_mu_form, vec![1.0, 0.5]);
    let map = |x: f64, st: &[f64]| ((1.0 - x) / 2.0, st[0]);
    out.push(stage("hypergeometric", &geg, &Target::Linear(report.hypergeometric_ode.clone()), &map, (-0.5, 0.5), n_samples)?);

    let mu = f(&report.legendre.mu);
    let map = move |x: f64, st: &[f64]| (x, (1.0 - x * x).abs().powf(mu / 2.0) * st[0]);
    out.push(stage("legendre", &geg, &Target::Linear(report.legendre_ode.clone()), &map, (-0.5, 0.5), n_samples)?);
    Ok(out)
}

/// A unit interval of `t` on which `m t^2 + c0` keeps one sign.
fn riccati_interval(p: &PZParams) -> (f64, f64) {
    let (m, c0) = (rational_to_f64(&p.m), rational_to_f64(&p.c0()));
    if m * c0 > 0.0 {
        (0.0, 1.0)
    } else {
        let root = (-c0 / m).sqrt();
        (root + 0.5, root + 1.5)
    }
}
