use thiserror::Error;

/// Errors raised by diagram construction, parameter validation and the deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin diagram {family}{rank}: {reason}")]
    InvalidDiagram {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("unsupported root system `{0}`: only simply-laced types A, D, E are supported")]
    Unsupported(String),

    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("length mismatch: {what} has length {found}, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} is out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid index sequence: {0}")]
    InvalidIndices(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: n = {n} exceeds the limit of {limit} without an explicit override")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("sweep budget exceeded: ~{estimate} predicate evaluations (limit {limit})")]
    BudgetExceeded { estimate: u128, limit: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
