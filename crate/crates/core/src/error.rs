use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: operands are sampled on different grids")]
    GridMismatch,

    #[error("grid must be symmetric about u = 0 (u_min = -u_max), got [{u_min}, {u_max}]")]
    AsymmetricGrid { u_min: f64, u_max: f64 },

    #[error("grid offset u_min/spacing = {0} is not an integer; dilation lattice does not contain u = 0")]
    OffsetNotIntegral(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("lambda = 0 is not in the multiplicative group")]
    ZeroLambda,

    #[error("lambda = {re}{im:+}i lies on the branch cut of the square root")]
    OnBranchCut { re: f64, im: f64 },

    #[error("dimension mismatch: curve has dim {curve}, expected {expected}")]
    DimensionMismatch { curve: usize, expected: usize },

    #[error("spectrum is not dual to the target grid: {0}")]
    IncompatibleSpectrum(String),

    #[error("malformed file {path}: {reason}")]
    Format { path: PathBuf, reason: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
