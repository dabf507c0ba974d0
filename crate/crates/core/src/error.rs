use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The gate at this index of the gate list does not fit inside the diagram width.
    #[error("gate {0} lies outside the diagram width")]
    OutOfRange(usize),

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("gate {kind} expects {expected} bits, got {got}")]
    ArityMismatch {
        kind: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("expected {expected} words, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("width {width} exceeds the truth-table cap of {cap}")]
    WidthTooLarge { width: usize, cap: usize },

    #[error("invalid move map: {0}")]
    InvalidMoveMap(String),

    #[error(
        "move steps are not composable: target of the first differs from source of the second"
    )]
    NotComposable,

    #[error("rule {0}: right-hand side is not below the left-hand side in the move order")]
    NotDecreasing(String),

    #[error("rule {name}: {reason}")]
    InvalidRule { name: String, reason: String },

    #[error("match no longer applies to this diagram")]
    StaleMatch,

    #[error("step limit of {0} exceeded during normalization")]
    StepLimitExceeded(usize),

    #[error("state limit of {0} exceeded while exploring the reduction graph")]
    StateLimitExceeded(usize),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
