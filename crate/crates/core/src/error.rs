use thiserror::Error;

/// Errors produced by walk evolution, measurement and entanglement analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coin dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported coin dimension {0} (must be 2 or 4)")]
    UnsupportedDimension(usize),

    #[error("state is not normalized: squared norm {norm_squared}")]
    Unnormalized { norm_squared: f64 },

    #[error("state has no nonzero amplitudes")]
    EmptyState,

    #[error("parameter `{name}` = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
