use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("dominance compares partitions of equal size, got {left} and {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("word {word:?} is not a Burge code: {reason}")]
    NotBurgeWord { word: String, reason: String },

    #[error("partition {0} is not super-distinct")]
    NotSuperDistinct(String),

    #[error("coordinates {coords:?} lie outside the box {deltas:?}")]
    CoordinatesOutOfRange { coords: Vec<usize>, deltas: Vec<usize> },

    #[error("delta vectors {from:?} and {to:?} are not related by the given permutation")]
    DeltaMismatch { from: Vec<usize>, to: Vec<usize> },

    #[error("invalid Oblak chain: {0}")]
    InvalidChain(String),

    #[error("enumeration budget of {budget} exceeded (needed {needed})")]
    BudgetExceeded { budget: u128, needed: u128 },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("matrices do not commute")]
    NotCommuting,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("witness restriction type {observed} differs from the expected {expected}")]
    WitnessMismatch { expected: String, observed: String },
}

/// A text parse failure with a 1-based column into the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(column: usize, message: impl Into<String>) -> Self {
        Self {
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}
