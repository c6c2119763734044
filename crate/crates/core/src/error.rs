//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point is not in the set (distance {distance:.3e})")]
    PointNotInSet { distance: f64 },

    #[error("point is outside the domain of the function")]
    PointOutsideDomain,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("step-size bound violated: {0}")]
    BoundViolated(String),

    #[error("no admissible velocity at node {node} (t = {time:.6})")]
    NoAdmissibleVelocity { node: usize, time: f64 },

    #[error("search exhausted without a satisfying point; refine the grid")]
    SearchExhausted,

    #[error("refinement did not converge: last sup-norm gap {last_gap:.3e} above tol {tol:.3e}")]
    NoConvergenceAtBudget { last_gap: f64, tol: f64 },

    #[error("set value is not convex")]
    NonconvexValue,

    #[error("no selection found at t = {time:.6} (best residual {residual:.3e})")]
    NoSelectionFound { time: f64, residual: f64 },

    #[error("no feedback realization available for the requested start point")]
    RealizationUnavailable,

    #[error("scenario guard violated: {0}")]
    GuardViolated(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("malformed trajectory file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Machine-readable tag for an error, stable across releases.
impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::PointNotInSet { .. } => "point-not-in-set",
            Error::PointOutsideDomain => "point-outside-domain",
            Error::InvalidConfig(_) => "invalid-config",
            Error::BoundViolated(_) => "bound-violated",
            Error::NoAdmissibleVelocity { .. } => "no-admissible-velocity",
            Error::SearchExhausted => "search-exhausted",
            Error::NoConvergenceAtBudget { .. } => "no-convergence-at-budget",
            Error::NonconvexValue => "nonconvex-value",
            Error::NoSelectionFound { .. } => "no-selection-found",
            Error::RealizationUnavailable => "realization-unavailable",
            Error::GuardViolated(_) => "guard-violated",
            Error::PreconditionViolated(_) => "precondition-violated",
            Error::Format(_) => "format",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
