//! Floating-point side of the crate: trajectory integration, residual
//! checks of the transformation chain, the closed-form Riccati quadrature
//! and phase-portrait data with SVG/CSV rendering.

#[cfg(test)]
mod cross_checks;
mod integrate;
mod phase;
mod quadrature;
mod render;
mod verify;

pub use integrate::{integrate, integrate_with, Direction, IntegrateOptions, Termination, Trajectory};
pub use phase::{phase_portrait, PortraitData, PortraitPoint, Window};
pub use quadrature::{gauss_kronrod, riccati_quadrature, riccati_quadrature_check, QuadratureCheck};
pub use render::{render, RenderFormat};
pub use verify::{verify_pipeline, verify_transform, PointMap, Source, StageResidual, Target};

use thiserror::Error;

use crate::transforms::TransformError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PortraitError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("outside the domain: {0}")]
    DomainError(String),
    #[error("change of variables is singular near {0}")]
    SingularMap(f64),
    #[error("target equations of order {0} are not supported")]
    UnsupportedOrder(usize),
    #[error("integration failed: {0}")]
    Integration(String),
    #[error("quadrature did not converge on [{0}, {1}]")]
    Quadrature(f64, f64),
    #[error(transparent)]
    Transform(#[from] TransformError),
}
