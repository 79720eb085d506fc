use thiserror::Error;

/// Errors produced by graph construction, parsing and the invariant/solver APIs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Graph order exceeds the single-word bitset fast path.
    #[error("graph order {0} exceeds the supported maximum of 64 vertices")]
    OrderLimit(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid parameter: {0}")]
    Param(String),

    /// Graph order below the minimum the operation or theorem is stated for.
    #[error("graph order {order} is below the minimum {min} required by {what}")]
    OrderOutOfRange {
        order: usize,
        min: usize,
        what: String,
    },

    /// A rotation precondition failed; names the first missing adjacency.
    #[error("rotation precondition violated: {0}")]
    Rotation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
