use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = PhaseError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum PhaseError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{name} = {value} is outside its domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// The Fock cutoff drops more probability than the requested tolerance.
    #[error("cutoff n_max = {n_max} leaves norm deficit {deficit:e} (tolerance {tolerance:e})")]
    CutoffInsufficient {
        n_max: usize,
        deficit: f64,
        tolerance: f64,
    },

    #[error("projection annihilates the state (residual norm {residual:e})")]
    DegenerateProjection { residual: f64 },

    #[error("phase is undefined at the origin (q, p) = (0, 0)")]
    UndefinedPhase,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("gate failed: {0}")]
    GateFailed(String),
}

impl PhaseError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        PhaseError::InvalidArgument(msg.into())
    }
}
