//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by constructors and operations on invalid input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar or vector argument violated a precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two spectral amplitudes were defined on different frequency grids.
    #[error("frequency grids do not match: {0}")]
    GridMismatch(String),
    /// A spectral amplitude was not unit-normalized at construction.
    #[error("wavepacket is not normalized: sum |a|^2 dnu = {norm}")]
    NotNormalized { norm: f64 },
    /// An operation that needs a closed loop was handed an open path.
    #[error("path is not a closed loop")]
    OpenPath,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
