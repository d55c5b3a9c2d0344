//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid axes: {0}")]
    InvalidAxes(String),

    #[error("grid geometry mismatch: {0}")]
    GridMismatch(String),

    #[error("coefficient axes mismatch: {0}")]
    AxesMismatch(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("spectral table does not cover the requested range: {0}")]
    SpectralCoverage(String),

    #[error("scale a = 0 is excluded (a must lie in R \\ {{0}})")]
    ZeroScale,

    #[error("frequency out of band: {0}")]
    OutOfBand(String),

    #[error("not a reconstruction pair: |C| = {c_abs:.3e} below {threshold:.1e}")]
    NotReconstructionPair { c_abs: f64, threshold: f64 },

    #[error("derivative order cap exceeded: {0}")]
    DerivativeCap(String),

    #[error("file format: {0}")]
    FileFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
