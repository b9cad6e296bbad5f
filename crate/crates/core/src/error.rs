use thiserror::Error;

/// Errors raised by the library. Validation failures of an algebra are not
/// errors; they are reported through [`crate::algebra::ValidationReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("size cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: String, needed: u128, cap: u128 },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("algebra carries no Wedderburn data")]
    MissingWedderburn,

    #[error("semisimple part is not unital: {0}")]
    NotUnital(String),

    #[error("center does not split over the rationals")]
    NonSplit,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no threshold found up to cap {cap}")]
    ThresholdNotFound { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for refusals caused by a configured size cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::ThresholdNotFound { .. })
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
