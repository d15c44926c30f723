//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {expected} vs {actual}")]
    ShapeMismatch { expected: String, actual: String },

    #[error(
        "degenerate basis: unnormalized field norm {field_norm:.3e} is below 1e-12 \
         for k=({kx},{ky}), phase={phase}"
    )]
    DegenerateBasis {
        kx: usize,
        ky: usize,
        phase: f64,
        field_norm: f64,
    },

    #[error("format error: {0}")]
    Format(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("predictor failed at k=({kx},{ky}): {source}")]
    SweepEntry {
        kx: usize,
        ky: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("predictor command failed: {0}")]
    Predictor(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Png(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;
