//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library. Every fallible operation is exact: a
/// failure describes a violated precondition, never a numerical problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size mismatch: {0} vs {1}")]
    AlphabetMismatch(usize, usize),

    #[error("no exact quotient in Z[1/2][x]")]
    NonDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("coefficient is not a dyadic rational: {0}")]
    NonDyadic(String),

    #[error("not a valid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("element does not belong to the requested group: {0}")]
    NotInGroup(String),

    #[error("letter {0} is not valid here: {1}")]
    InvalidLetter(String, String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration bound exceeded: n = {0} > bound {1}")]
    BoundExceeded(usize, usize),

    #[error("polynomial is not symmetric in the required variables")]
    NotSymmetric,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("term limit exceeded: {0} terms (limit {1})")]
    TermLimit(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
