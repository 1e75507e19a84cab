//! Algebraic and qualitative analysis of the five-parameter Polyanin-Zaitsev
//! family of planar Lienard systems
//!
//! ```text
//! x' = y
//! y' = (a(2m+k) x^(m+k-1) + b(2m-k) x^(m-k-1)) y - (a^2 m x^(4k) + c x^(2k) + b^2 m) x^(2m-2k-1)
//! ```
//!
//! The crate is split into
//!
//! * [`algebra`]: exact rationals, quadratic surds, polynomials, rational
//!   functions, truncated power series and linear ODEs with rational
//!   function coefficients,
//! * [`pzfield`]: parameter sets, the generalized vector field and the
//!   polynomial families F1-F7,
//! * [`transforms`]: the Lienard -> Riccati -> linear -> Gegenbauer ->
//!   hypergeometric/Legendre chain,
//! * [`critical`]: finite critical points, linearization, the nilpotent
//!   classifier and the Lyapunov certificate,
//! * [`compactify`]: Poincare charts U1/U2 and critical points at infinity,
//! * [`portrait`]: numerical integration, residual verification of the
//!   transformation chain, the Riccati quadrature and plot emission.
//!
//! Everything outside [`portrait`] is exact.

pub mod algebra;
pub mod compactify;
pub mod critical;
pub mod portrait;
pub mod pzfield;
pub mod system;
pub mod transforms;

pub use algebra::{parse_rational, rat, BiPoly, LinearODE, QuadSurd, Rational, RationalFunction, TruncatedSeries, UniPoly};
pub use pzfield::{FamilyClass, FamilyTag, GeneralizedSystem, PZParams};
pub use system::PlanarPolySystem;
