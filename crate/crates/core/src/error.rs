//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the tracking pipeline, grouped by failure class.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed on-disk data (bad magic, non-divisible mosaic, short file).
    #[error("format error: {0}")]
    Format(String),

    /// Invalid argument to an operation (out-of-range index, empty input).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Geometry degenerate for the requested operation.
    #[error("degenerate geometry: {0}")]
    Geometry(String),

    /// Missing or inconsistent source data for a frame.
    #[error("data error: {0}")]
    Data(String),

    /// Weights file does not match the expected tensor layout.
    #[error("weights format error: expected {expected}, found {found}")]
    WeightsFormat { expected: String, found: String },

    /// Online training produced a non-finite loss.
    #[error("training diverged at iteration {iteration}: loss is not finite")]
    TrainingDiverged { iteration: usize },

    /// Rejection sampling could not satisfy its constraints.
    #[error("sampling error: {0}")]
    Sampling(String),

    /// Numerical failure (singular innovation covariance, non-finite state).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Invalid run configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// An error tagged with the frame it occurred at.
    #[error("frame {frame}: {source}")]
    AtFrame {
        frame: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Wrap an error with the frame index it occurred at.
    pub fn with_frame(self, frame: usize) -> Error {
        Error::AtFrame {
            frame,
            source: Box::new(self),
        }
    }
}
