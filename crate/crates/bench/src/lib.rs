//! Shared inputs for the benchmarks.

use pz_core::algebra::{rat, BiPoly, LinearODE, RationalFunction, UniPoly};
use pz_core::PlanarPolySystem;

/// `x' = y, y' = 5/2 b y - 3/2 b^2 x - c x^2` with `b = c = 1`.
pub fn example_system() -> PlanarPolySystem {
    let q = BiPoly::from_terms([(rat(5, 2), 0, 1), (rat(-3, 2), 1, 0), (rat(-1, 1), 2, 0)]);
    PlanarPolySystem::new(BiPoly::y(), q)
}

/// The `x` part of the nilpotent normal form at the origin of the `U2` chart.
pub fn nilpotent_x_part() -> BiPoly {
    BiPoly::from_terms([(rat(1, 1), 3, 0), (rat(-5, 2), 1, 1), (rat(3, 2), 2, 1)])
}

/// A monic third-order equation with rational coefficients.
pub fn third_order() -> LinearODE {
    let rf = |n: &[i64], d: &[i64]| RationalFunction::new(UniPoly::from_ints(n), UniPoly::from_ints(d)).unwrap();
    LinearODE::new("x", vec![RationalFunction::one(), rf(&[1, 2, 0, 1], &[1, 1]), rf(&[3, 0, 1], &[2, 0, 1]), rf(&[0, 1], &[1, 0, 0, 1])])
        .unwrap()
}
