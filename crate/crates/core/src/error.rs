use thiserror::Error;

/// Errors raised by the decision procedures and the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of {n} players exceeds the limit of {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },

    #[error("coalition bits {bits:#b} lie outside a ground set of {n} players")]
    PlayerOutOfRange { bits: u64, n: usize },

    #[error("ground sets differ: {left} vs {right} players")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("hypergraph is not an antichain: {outer} strictly contains {inner}")]
    NotAntichain { outer: String, inner: String },

    #[error("hypergraph is not a shift-antichain: {inner} precedes {outer} in the shift order")]
    NotShiftAntichain { outer: String, inner: String },

    #[error("game is not regular: shifting {removed} -> {added} in {edge} loses")]
    NotRegular {
        edge: String,
        added: usize,
        removed: usize,
    },

    #[error("invalid player ordering: {0}")]
    InvalidOrdering(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("certificate has zero total multiplicity")]
    EmptyCertificate,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown instance family `{0}`")]
    UnknownFamily(String),

    #[error("invalid filter expression: {0}")]
    Filter(String),

    #[error("report failed re-verification: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
