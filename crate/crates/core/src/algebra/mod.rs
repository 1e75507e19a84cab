//! Exact arithmetic: rationals, quadratic surds, univariate and bivariate
//! polynomials, rational functions, truncated power series and linear ODEs.
//!
//! All values are immutable once built and every operation is a pure
//! function, so they can be shared freely across threads.

mod bipoly;
mod ode;
mod ratfun;
mod rational;
mod series;
mod surd;
mod unipoly;

pub use bipoly::BiPoly;
pub use ode::LinearODE;
pub use ratfun::{ratfun_simplify, RationalFunction};
pub use rational::{parse_rational, rat, rational_to_f64, Rational};
pub use series::{series_implicit_solve, series_leading_term, TruncatedSeries};
pub use surd::{squarefree_decompose, QuadSurd};
pub use unipoly::{poly_derivative, UniPoly};

use thiserror::Error;

/// Default truncation order for series based classifiers.
pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("denominator polynomial is zero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no formal solution: {0}")]
    NoFormalSolution(String),
    #[error("series vanishes through its truncation order")]
    AllZero,
    #[error("surds with different radicands ({0} and {1}) cannot be combined")]
    IncompatibleRadicands(String, String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
