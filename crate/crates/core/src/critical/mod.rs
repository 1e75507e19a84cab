//! Finite critical points, linearization, the nilpotent
//! classifier and the Lyapunov certificate.
//!
//! Every critical point of `x' = y, y' = Q(x, y)` lies on `y = 0`, so the
//! family reduces to root finding for `Q(x, 0)`.

mod degenerate;
mod linear;
mod lyapunov;
mod points;

pub use degenerate::{classify_degenerate, classify_point, origin_structure_F1};
pub use linear::{linearize, Eigenvalues};
pub use lyapunov::{lyapunov_certificate, DerivativeCondition, LyapunovCertificate};
pub(crate) use points::real_roots;
pub use points::{finite_critical_points, CriticalPoint, FinitePoints, PointCoord};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Rational};
use crate::pzfield::PzError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalError {
    #[error("parameters are not in family F1 with c > 0")]
    WrongFamily,
    #[error("certificate needs k = 0 and m >= 1")]
    WrongCase,
    #[error("not in normal form x' = y + X, y' = Y: {0}")]
    NormalFormViolation(String),
    #[error("leading term not determined within truncation order {0}")]
    TruncationTooLow(usize),
    #[error("reduced root equation of degree {0} is beyond quadratic")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Family(#[from] PzError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    SaddleNode,
    TwoHyperbolicSectors,
    Saddle,
    StableNode,
    UnstableNode,
    EllipticHyperbolic,
    FocusOrCenter,
    HyperbolicStableNode,
    HyperbolicUnstableNode,
    HyperbolicSaddle,
    HyperbolicStableFocus,
    HyperbolicUnstableFocus,
    HyperbolicCenterCandidate,
    Degenerate,
    Unclassified,
}

impl Kind {
    /// `Some(true)` for attracting nodes, `Some(false)` for repelling ones.
    pub fn node_stability(self) -> Option<bool> {
        match self {
            Kind::StableNode | Kind::HyperbolicStableNode => Some(true),
            Kind::UnstableNode | Kind::HyperbolicUnstableNode => Some(false),
            _ => None,
        }
    }

    pub fn is_saddle(self) -> bool {
        matches!(self, Kind::Saddle | Kind::HyperbolicSaddle)
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Outcome of one of the classifiers together with the quantities it used.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub kind: Kind,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    pub a_lead: Option<Rational>,
    pub b_lead: Option<Rational>,
    pub eigenvalues: Option<Eigenvalues>,
    /// Branch tags in the order they were taken.
    pub trace: Vec<String>,
}

impl Classification {
    pub(crate) fn bare(kind: Kind, trace: Vec<String>) -> Self {
        Classification { kind, alpha: None, beta: None, a_lead: None, b_lead: None, eigenvalues: None, trace }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Classification", 7)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("beta", &self.beta)?;
        st.serialize_field("a_lead", &self.a_lead.as_ref().map(|r| r.to_string()))?;
        st.serialize_field("b_lead", &self.b_lead.as_ref().map(|r| r.to_string()))?;
        st.serialize_field("eigenvalues", &self.eigenvalues.as_ref().map(|e| e.to_strings()))?;
        st.serialize_field("trace", &self.trace)?;
        st.end()
    }
}
