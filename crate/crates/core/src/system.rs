//! Planar polynomial vector fields `x' = P(x, y)`, `y' = Q(x, y)`.

use std::fmt;

use crate::algebra::BiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarPolySystem {
    pub p: BiPoly,
    pub q: BiPoly,
}

impl PlanarPolySystem {
    pub fn new(p: BiPoly, q: BiPoly) -> Self {
        PlanarPolySystem { p, q }
    }

    pub fn zero() -> Self {
        Self::new(BiPoly::zero(), BiPoly::zero())
    }

    /// Maximum total degree of `P` and `Q`; zero for the zero field.
    pub fn degree(&self) -> u32 {
        self.p.total_degree().unwrap_or(0).max(self.q.total_degree().unwrap_or(0))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn field_f64(&self, x: f64, y: f64) -> (f64, f64) {
        (self.p.eval_f64(x, y), self.q.eval_f64(x, y))
    }

    /// `[[P_x, P_y], [Q_x, Q_y]]`
    pub fn jacobian(&self) -> [[BiPoly; 2]; 2] {
        [[self.p.dx(), self.p.dy()], [self.q.dx(), self.q.dy()]]
    }

    /// Translates so that `(h, 0)` becomes the origin.
    pub fn shift_x(&self, h: &crate::Rational) -> Self {
        Self::new(self.p.shift_x(h), self.q.shift_x(h))
    }

    pub fn to_string_in(&self, xv: &str, yv: &str) -> [String; 2] {
        [self.p.to_string_in(xv, yv), self.q.to_string_in(xv, yv)]
    }
}

impl fmt::Display for PlanarPolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x' = {}, y' = {}", self.p, self.q)
    }
}
