//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermtabError {
    #[error("word {word:?} is not a permutation of 1..=n")]
    InvalidPermutation { word: Vec<usize> },

    #[error("cannot parse {what} from {input:?}")]
    Parse { input: String, what: &'static str },

    /// Structurally malformed tableau input (distinct from a well-formed
    /// filling that merely violates the tableau conditions).
    #[error("malformed tableau: {reason}")]
    MalformedTableau { reason: String },

    #[error("invalid tableau: {0}")]
    InvalidTableau(#[from] crate::tableau::ValidationFailure),

    #[error("series reciprocal requires constant term ±1, found {found}")]
    NonUnitConstantTerm { found: String },

    #[error("negative q-exponent {min_exponent} remains after normalization")]
    NegativeExponent { min_exponent: i64 },

    #[error("verification bound exceeded: n = {n} > {bound}")]
    BoundExceeded { n: usize, bound: usize },
}
