//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by group construction, the basis engine and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("modulus mismatch: expected {expected}, got {got}")]
    ModulusMismatch { expected: u32, got: u32 },

    #[error("letter {letter} outside alphabet of size {alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("generated group order {order} is not a power of a single prime")]
    NotAPGroup { order: usize },

    #[error("generated group order exceeds the ceiling {ceiling}")]
    TooLarge { ceiling: usize },

    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),

    #[error("the trivial group has no minimal generators")]
    EmptyGroup,

    #[error("the chosen elements do not generate the group")]
    NotGenerating,

    #[error(
        "brute-force enumeration limited to order <= {max_order} and alphabet <= {max_alphabet} \
         (got order {order}, alphabet {alphabet})"
    )]
    TooLargeForOracle {
        order: usize,
        alphabet: usize,
        max_order: usize,
        max_alphabet: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for rejected input, 3 for a broken
    /// internal invariant.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Internal(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
