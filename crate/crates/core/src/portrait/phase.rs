use rayon::prelude::*;
use serde::Serialize;

use super::integrate::{integrate_with, Direction, IntegrateOptions, Trajectory};
use crate::algebra::{BiPoly, DEFAULT_TRUNCATION};
use crate::compactify::{infinity_analysis, InfinityPoint};
use crate::critical::{classify_point, real_roots, CriticalPoint, Kind};
use crate::system::PlanarPolySystem;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Window {
    pub fn square(r: f64) -> Self {
        Window { xmin: -r, xmax: r, ymin: -r, ymax: r }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        (self.xmin..=self.xmax).contains(&x) && (self.ymin..=self.ymax).contains(&y)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::square(4.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PortraitPoint {
    pub x: f64,
    pub y: f64,
    pub kind: Kind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PortraitData {
    pub window: Window,
    pub trajectories: Vec<Trajectory>,
    pub critical_points: Vec<PortraitPoint>,
    pub equator_points: Vec<InfinityPoint>,
}

impl PortraitData {
    pub fn empty(window: Window) -> Self {
        PortraitData { window, trajectories: vec![], critical_points: vec![], equator_points: vec![] }
    }
}

const TMAX: f64 = 20.0;
const TOL: f64 = 1e-8;
const CIRCLE: f64 = 1e-3;

/// Finite critical points of `x' = y` systems, classified.
fn finite_points(sys: &PlanarPolySystem) -> Vec<PortraitPoint> {
    if sys.p != BiPoly::y() {
        return vec![];
    }
    let Ok((roots, _)) = real_roots(&sys.q.restrict_y_zero()) else { return vec![] };
    roots
        .into_iter()
        .map(|x| {
            let pt = CriticalPoint::on_axis(x);
            let (px, py) = pt.to_f64();
            PortraitPoint { x: px, y: py, kind: classify_point(sys, &pt, DEFAULT_TRUNCATION).kind }
        })
        .collect()
}

/// Grid of about `n` seeds covering the window, boundary included.
fn grid_seeds(w: &Window, n: usize) -> Vec<(f64, f64)> {
    if n == 0 {
        return vec![];
    }
    let side = ((n as f64).sqrt().round() as usize).max(2);
    let at = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / (side - 1) as f64;
    (0..side).flat_map(|i| (0..side).map(move |j| (at(w.xmin, w.xmax, i), at(w.ymin, w.ymax, j)))).take(n).collect()
}

/// Seeds on a grid and on small circles around each critical point,
/// integrated forward and backward in parallel.
pub fn phase_portrait(sys: &PlanarPolySystem, window: Window, n_seeds: usize) -> PortraitData {
    let critical_points = finite_points(sys);
    let mut seeds = grid_seeds(&window, n_seeds);
    for cp in &critical_points {
        for k in 0..8 {
            let angle = std::f64::consts::FRAC_PI_4 * k as f64;
            seeds.push((cp.x + CIRCLE * angle.cos(), cp.y + CIRCLE * angle.sin()));
        }
    }
    seeds.retain(|&(x, y)| window.contains(x, y));
    let base = IntegrateOptions {
        tmax: TMAX,
        tol: TOL,
        direction: Direction::Forward,
        window: Some((window.xmin, window.xmax, window.ymin, window.ymax)),
        critical_points: critical_points.iter().map(|p| (p.x, p.y)).collect(),
        max_steps: 20_000,
    };
    let jobs: Vec<((f64, f64), Direction)> = seeds.iter().flat_map(|&s| [(s, Direction::Forward), (s, Direction::Backward)]).collect();
    let trajectories = jobs
        .par_iter()
        .filter_map(|&(seed, direction)| {
            let opts = IntegrateOptions { direction, ..base.clone() };
            integrate_with(sys, seed, &opts).ok()
        })
        .collect();
    let equator_points = infinity_analysis(sys).points.into_iter().filter(|p| p.at_infinity).collect();
    PortraitData { window, trajectories, critical_points, equator_points }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    fn example(b: i64, c: i64) -> PlanarPolySystem {
        let b = Rational::from_integer(b.into());
        let q = BiPoly::from_terms([(rat(5, 2) * &b, 0, 1), (rat(-3, 2) * &b * &b, 1, 0), (rat(-c, 1), 2, 0)]);
        PlanarPolySystem::new(BiPoly::y(), q)
    }

    #[test]
    fn example_inventory() {
        let data = phase_portrait(&example(1, 1), Window::default(), 16);
        let kinds: Vec<(f64, Kind)> = data.critical_points.iter().map(|p| (p.x, p.kind)).collect();
        assert_eq!(kinds, [(-1.5, Kind::HyperbolicSaddle), (0.0, Kind::HyperbolicUnstableNode)]);
        assert!(data.trajectories.iter().all(|t| data.window.contains(t.seed.0, t.seed.1)));
        assert_eq!(data.equator_points.len(), 1);
        assert_eq!(data.equator_points[0].classification.kind, Kind::UnstableNode);
        let data = phase_portrait(&example(-1, 1), Window::default(), 16);
        let origin = data.critical_points.iter().find(|p| p.x == 0.0).unwrap();
        assert_eq!(origin.kind, Kind::HyperbolicStableNode);
    }

    #[test]
    fn zero_system() {
        let data = phase_portrait(&PlanarPolySystem::zero(), Window::default(), 9);
        assert_eq!(data.trajectories.len(), 18);
        assert!(data.trajectories.iter().all(|t| t.samples.len() == 1));
    }

    #[test]
    fn order_is_deterministic() {
        let a = phase_portrait(&example(1, -1), Window::square(2.0), 25);
        let b = phase_portrait(&example(1, -1), Window::square(2.0), 25);
        assert_eq!(a, b);
        assert_eq!(grid_seeds(&Window::default(), 64).len(), 64);
        assert!(grid_seeds(&Window::default(), 0).is_empty());
    }
}
