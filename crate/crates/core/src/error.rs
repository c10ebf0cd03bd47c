use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("letter {letter} is outside 1..={max}")]
    LetterOutOfRange { letter: usize, max: usize },

    #[error("row {row} has {got} entries but the shape asks for {expected}")]
    RaggedRows { row: usize, expected: usize, got: usize },

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("tableau is the highest weight vector; there is no descent")]
    NoDescent,

    #[error("cannot reconstruct a tableau: {0}")]
    Reconstruction(String),

    #[error("counting oracles disagree: product formula {formula}, enumeration {enumerated}")]
    OracleMismatch { formula: String, enumerated: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
