use thiserror::Error;

/// Errors produced by the numerical routines and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("bipartite dimensions required: {0}")]
    MissingDims(&'static str),

    #[error("value outside the domain: {0}")]
    Domain(String),

    #[error("matrix is not unitary (residual {0:e})")]
    NotUnitary(f64),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("damping vector is not unistochastic: {0}")]
    NotUnistochastic(String),

    #[error("Schmidt vector is degenerate: {0}")]
    Degenerate(String),

    #[error("Schmidt vector is not realizable by a two-qubit unitary: {0}")]
    NotRealizable(String),

    #[error("internal consistency check failed: {0}")]
    SelfCheck(String),

    #[error("numerical method did not converge: {0}")]
    Convergence(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
