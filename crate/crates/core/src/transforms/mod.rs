//! Exact transformation chain
//!
//! ```text
//! Lienard foliation  --z = x^k, y = x^m (t + a x^k + b x^-k)-->  Riccati
//! Riccati            --z = R/(ak) w'/w, R = m t^2 + c0-->         second order linear
//! linear             --tau = t + shift-->                         Q^2 y'' + L Q y' + lambda y = 0
//! normalized         --xi = tau / sqrt(tau^2 + q0)-->             Gegenbauer
//! Gegenbauer         --x = 1 - 2z-->                              hypergeometric
//! Gegenbauer         --y = (1 - x^2)^(mu/2) u-->                  Legendre
//! ```
//!
//! Every stage is computed with exact rational (or quadratic surd)
//! coefficients. Numerical confirmation of each change of variables lives in
//! [`crate::portrait::verify_pipeline`].

mod gauge;
mod pipeline;
mod riccati;
mod special;

pub use gauge::{complete_square, remove_subleading, GaugeFactor, NormalizedSecondOrder};
pub use pipeline::{full_pipeline, ChangeOfVariables, PipelineReport, StageRecord};
pub use riccati::{lienard_to_riccati, riccati_to_linear, RiccatiEq};
pub use special::{
    gegenbauer_ode, gegenbauer_to_hypergeometric, hypergeometric_to_legendre, legendre_ode, legendre_parameters,
    legendre_to_hypergeometric, to_gegenbauer, HypergeomParams, LegendreParams,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("substitution z = R/(ak) w'/w needs a*k != 0")]
    SubstitutionUndefined,
    #[error("leading coefficient a2 is zero")]
    DegenerateLeading,
    #[error("l0 must vanish before the Gegenbauer change of variable")]
    NonzeroL0,
    #[error("q0 is zero")]
    ZeroQ0,
    #[error("c0 = c - 2abm is zero")]
    ZeroC0,
    #[error("m is zero")]
    ZeroM,
    #[error("equation must be monic")]
    NonMonic,
    #[error("coefficient {0} is not rational")]
    IrrationalCoefficient(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("stage {stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<TransformError>,
    },
}

impl TransformError {
    /// The innermost error, with stage wrappers removed.
    pub fn root(&self) -> &TransformError {
        match self {
            TransformError::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    pub fn stage(&self) -> Option<&str> {
        match self {
            TransformError::Stage { stage, .. } => Some(stage),
            _ => None,
        }
    }
}
