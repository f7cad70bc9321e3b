//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("dimension {0} out of range")]
    DimensionOutOfRange(usize),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("communication failure with rank {rank}: {detail}")]
    Comm { rank: usize, detail: String },

    #[error("halo protocol error: {0}")]
    Protocol(String),

    #[error("{op}: vector of length {len} too short (needs at least {min})")]
    VectorTooShort {
        op: &'static str,
        len: usize,
        min: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("timestep underflow: dt={dt:e} below minimum {min:e}")]
    TimestepUnderflow { dt: f64, min: f64 },

    #[error("overflow at iteration {iteration}, time {time}")]
    Overflow { iteration: u64, time: f64 },

    #[error("implicit solve did not converge: residual {residual:e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },

    #[error("archive: {0}")]
    Archive(String),

    #[error(transparent)]
    Hdf5(#[from] hdf5::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn comm(rank: usize, detail: impl Into<String>) -> Self {
        Error::Comm {
            rank,
            detail: detail.into(),
        }
    }
}
