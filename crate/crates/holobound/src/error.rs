use thiserror::Error;

/// Errors produced by construction and evaluation of the mathematical objects.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point has a non-finite coordinate")]
    NonFinitePoint,

    #[error("point outside domain (or too close to the boundary): {0}")]
    OutOfDomain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("principal branch violation: power base {base} touches the cut")]
    BranchCut { base: num_complex::Complex64 },

    #[error("mismatched weight/automorphism pair: {0}")]
    MismatchedPair(String),

    #[error("finite-difference stencil exits the domain at step {h}")]
    StencilOutOfDomain { h: f64 },

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
