//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Mean power below the vacuum floor of 1/2, or not finite.
    #[error("invalid power budget W = {0}: must be finite and >= 1/2")]
    InvalidPower(f64),

    #[error("malformed modulation scheme: {0}")]
    MalformedScheme(String),

    #[error("invalid channel parameters: {0}")]
    InvalidChannel(String),

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("dimension mismatch: region is {region}-dimensional, point has {point} coordinates")]
    DimensionMismatch { region: usize, point: usize },

    #[error("no reference available: {0}")]
    NoReference(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("io error: {0}")]
    Io(String),
}
