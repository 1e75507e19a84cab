use std::cell::Cell;

use ode_solvers::dop_shared::IntegrationError;
use ode_solvers::{DVector, Dopri5, OutputType, System};
use serde::Serialize;

use super::PortraitError;
use crate::system::PlanarPolySystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Termination {
    TimeLimit,
    WindowExit,
    StepUnderflow,
    NearCritical,
    StepLimit,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    /// `(t, x, y)`, with `t` decreasing for backward runs.
    pub samples: Vec<(f64, f64, f64)>,
    pub seed: (f64, f64),
    pub direction: Direction,
    pub terminated: Termination,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegrateOptions {
    pub tmax: f64,
    pub tol: f64,
    pub direction: Direction,
    /// `(xmin, xmax, ymin, ymax)`
    pub window: Option<(f64, f64, f64, f64)>,
    pub critical_points: Vec<(f64, f64)>,
    pub max_steps: u32,
}

impl IntegrateOptions {
    pub fn new(tmax: f64, tol: f64) -> Self {
        IntegrateOptions { tmax, tol, direction: Direction::Forward, window: None, critical_points: vec![], max_steps: 100_000 }
    }
}

const MIN_STEP: f64 = 1e-12;
const NEAR_CRITICAL: f64 = 1e-8;

/// Adapts a closure to the solver's system trait and watches the stopping
/// conditions after every accepted step.
struct Watched<'a, F> {
    rhs: F,
    opts: Option<&'a IntegrateOptions>,
    last_t: f64,
    stop: &'a Cell<Option<Termination>>,
}

impl<F: Fn(f64, &[f64], &mut [f64])> System<f64, DVector<f64>> for Watched<'_, F> {
    fn system(&self, t: f64, y: &DVector<f64>, dy: &mut DVector<f64>) {
        (self.rhs)(t, y.as_slice(), dy.as_mut_slice());
    }

    fn solout(&mut self, t: f64, y: &DVector<f64>, _dy: &DVector<f64>) -> bool {
        let Some(opts) = self.opts else { return false };
        let (x, yv) = (y[0], y[1]);
        let step = (t - self.last_t).abs();
        self.last_t = t;
        let outside = opts.window.is_some_and(|(x0, x1, y0, y1)| !(x0..=x1).contains(&x) || !(y0..=y1).contains(&yv));
        let reason = if outside {
            Some(Termination::WindowExit)
        } else if opts.critical_points.iter().any(|&(cx, cy)| (x - cx).hypot(yv - cy) < NEAR_CRITICAL) {
            Some(Termination::NearCritical)
        } else if step < MIN_STEP && (t.abs() - opts.tmax).abs() > MIN_STEP {
            Some(Termination::StepUnderflow)
        } else {
            None
        };
        self.stop.set(reason);
        reason.is_some() || !x.is_finite() || !yv.is_finite()
    }
}

type Run = (Vec<f64>, Vec<Vec<f64>>, Result<(), IntegrationError>, Option<Termination>);

fn run<F: Fn(f64, &[f64], &mut [f64])>(
    rhs: F,
    t0: f64,
    t1: f64,
    y0: &[f64],
    tol: f64,
    max_steps: u32,
    opts: Option<&IntegrateOptions>,
) -> Run {
    let stop = Cell::new(None);
    let system = Watched { rhs, opts, last_t: t0, stop: &stop };
    let mut solver = Dopri5::from_param(
        system,
        t0,
        t1,
        0.0,
        DVector::from_column_slice(y0),
        tol,
        tol,
        0.9,
        0.04,
        0.2,
        10.0,
        (t1 - t0).abs(),
        0.0,
        max_steps,
        u32::MAX,
        OutputType::Sparse,
    );
    let status = solver.integrate().map(|_| ());
    let stop = stop.get();
    let ts = solver.x_out().clone();
    let ys = solver.y_out().iter().map(|v| v.as_slice().to_vec()).collect();
    (ts, ys, status, stop)
}

/// State at `t1` of `y' = rhs(t, y)`, `y(t0) = y0`.
pub(crate) fn solve_to<F: Fn(f64, &[f64], &mut [f64])>(rhs: F, t0: f64, t1: f64, y0: &[f64], tol: f64) -> Result<Vec<f64>, PortraitError> {
    if t0 == t1 {
        return Ok(y0.to_vec());
    }
    let (_, ys, status, _) = run(rhs, t0, t1, y0, tol, 1_000_000, None);
    status.map_err(|e| PortraitError::Integration(format!("{e:?}")))?;
    let last = ys.last().cloned().unwrap_or_else(|| y0.to_vec());
    if last.iter().all(|v| v.is_finite()) {
        Ok(last)
    } else {
        Err(PortraitError::Integration(format!("non-finite state before t = {t1}")))
    }
}

pub fn integrate(sys: &PlanarPolySystem, seed: (f64, f64), tmax: f64, tol: f64) -> Result<Trajectory, PortraitError> {
    integrate_with(sys, seed, &IntegrateOptions::new(tmax, tol))
}

pub fn integrate_with(sys: &PlanarPolySystem, seed: (f64, f64), opts: &IntegrateOptions) -> Result<Trajectory, PortraitError> {
    if !(opts.tol > 0.0) || !(opts.tmax > 0.0) {
        return Err(PortraitError::InvalidArgument(format!("tol = {}, tmax = {}", opts.tol, opts.tmax)));
    }
    let single = |terminated| Trajectory { samples: vec![(0.0, seed.0, seed.1)], seed, direction: opts.direction, terminated };
    let (fx, fy) = sys.field_f64(seed.0, seed.1);
    if fx == 0.0 && fy == 0.0 {
        return Ok(single(Termination::NearCritical));
    }
    let sign = match opts.direction {
        Direction::Forward => 1.0,
        Direction::Backward => -1.0,
    };
    let rhs = |_t: f64, y: &[f64], dy: &mut [f64]| {
        let (a, b) = sys.field_f64(y[0], y[1]);
        dy[0] = a;
        dy[1] = b;
    };
    let (ts, ys, status, stop) = run(rhs, 0.0, sign * opts.tmax, &[seed.0, seed.1], opts.tol, opts.max_steps, Some(opts));
    let samples: Vec<(f64, f64, f64)> =
        ts.iter().zip(&ys).filter(|(_, y)| y.iter().all(|v| v.is_finite())).map(|(&t, y)| (t, y[0], y[1])).collect();
    let terminated = match (stop, status) {
        (Some(reason), _) => reason,
        (None, Ok(())) if samples.last().is_some_and(|s| (s.0.abs() - opts.tmax).abs() <= 1e-9 * opts.tmax.max(1.0)) => {
            Termination::TimeLimit
        }
        (None, Ok(())) => Termination::WindowExit,
        (None, Err(IntegrationError::MaxNumStepReached { .. })) => Termination::StepLimit,
        (None, Err(_)) => Termination::StepUnderflow,
    };
    Ok(Trajectory { samples, seed, direction: opts.direction, terminated })
}
