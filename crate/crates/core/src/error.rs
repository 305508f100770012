use thiserror::Error;

/// Errors raised by the algebra, combinatorics and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The dividend is not a multiple of the divisor in the Laurent ring.
    #[error("no exact quotient: ({dividend}) / ({divisor})")]
    NonExactDivision { dividend: String, divisor: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot evaluate at q = 0")]
    ZeroEvaluationPoint,
    /// Rank deficiency at the chosen point; says nothing about independence.
    #[error("evaluation at q = {q0} is degenerate (rank {rank} < {expected}); retry with another point")]
    DegenerateEvaluation { q0: String, rank: usize, expected: usize },
    #[error("word {0} is not Catalan")]
    NotCatalan(String),
    #[error("word {0} is not balanced")]
    NotBalanced(String),
    #[error("invalid profile {profile}: {reason}")]
    InvalidProfile { profile: String, reason: String },
    #[error("invalid word {0:?}: only the letters x and y are allowed (\"1\" is the empty word)")]
    ParseWord(String),
    #[error("word too long: at most {max} letters are supported")]
    WordTooLong { max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
