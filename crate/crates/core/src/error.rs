use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {text:?}: {reason}")]
    MalformedPartition { text: String, reason: String },

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { inner: String, outer: String },

    #[error("row {row} has {found} values but the shape has {expected} cells there")]
    ArityMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("values increase between {from} and {to}")]
    MonotonicityViolation { from: String, to: String },

    #[error("non-positive value {value:?} in row {row}")]
    NonPositiveValue { row: usize, value: String },

    #[error("malformed filling: {0}")]
    MalformedFilling(String),

    #[error("overlined cells violate the overline conditions: {0}")]
    InvalidLifting(String),

    #[error("filling is not square-free")]
    NotSquareFree,

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
}
