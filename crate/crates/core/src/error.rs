use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("type {family} does not exist in rank {rank}")]
    InvalidRank { family: char, rank: usize },

    #[error("node {node} is not a node of {label}")]
    NodeOutOfRange { node: usize, label: String },

    #[error("word {word} is not reduced (it evaluates to an element of length {length})")]
    NotReduced { word: String, length: usize },

    #[error("weight has {got} coordinates but the rank is {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("|W({label})| = {order} exceeds the enumeration budget of {budget}")]
    BudgetExceeded {
        label: String,
        order: u128,
        budget: u128,
    },

    #[error("node {node} of {label} is not in the short-root set K = {{{k}}}")]
    NotShortNode {
        node: usize,
        label: String,
        k: String,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("fundamental weight Λ_{node} of {label} is not minuscule")]
    NotMinusculeWeight { node: usize, label: String },

    #[error("{what} is not available for type {label}")]
    Unsupported { what: String, label: String },

    #[error("count mismatch for {context}: enumerated {enumerated}, expected {expected}")]
    CountMismatch {
        context: String,
        enumerated: u64,
        expected: u64,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("reference data: {0}")]
    Reference(String),
}
