//! Error type shared across the engine.
//!
//! Every failure a caller can provoke (bad input, out-of-range degrees,
//! non-existent Cartan entries) is a dedicated variant so the CLI can map
//! them to exit codes; `InternalMismatch` is reserved for disagreement
//! between two independent computation routes and always indicates a bug.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("braiding does not satisfy the Yang-Baxter equation: {0}")]
    YangBaxterViolation(String),

    #[error("braiding matrix is not invertible")]
    NotInvertible,

    #[error("no finite quantum-Serre bound exists for the pair ({i}, {j})")]
    NotIFinite { i: usize, j: usize },

    #[error("degree {got} exceeds the configured bound {bound}")]
    DegreeTooLarge { got: usize, bound: usize },

    #[error("a degree block of size {size} exceeds the cap {cap}")]
    BlockTooLarge { size: usize, cap: usize },

    #[error("character data is inconsistent: {0}")]
    NotACharacter(String),

    #[error("group is not usable here: {0}")]
    GroupTooLarge(String),

    #[error("sequence is not admissible-positive: {0}")]
    NotInAPlus(String),

    #[error("no insertion path reconstructs the sequence: {0}")]
    NoConstructionPath(String),

    #[error("internal cross-check failed: {0}")]
    InternalMismatch(String),

    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported for this braiding kind: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
