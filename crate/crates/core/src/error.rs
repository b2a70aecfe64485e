use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("generator index {index} out of range for {strings} strings (need 1..={max})", max = .strings - 1)]
    GeneratorOutOfRange { index: i64, strings: usize },

    #[error("block term b[{i},{n1},{n2}] exceeds {strings} strings (need i + n1 + n2 - 1 <= n)")]
    BlockOutOfRange {
        i: usize,
        n1: usize,
        n2: usize,
        strings: usize,
    },

    #[error("invalid block term: {0}")]
    InvalidBlock(String),

    #[error("a braid needs at least 2 strings, got {0}")]
    TooFewStrings(usize),

    #[error("string counts differ: {0} vs {1}")]
    StringMismatch(usize, usize),

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("cannot substitute t = 0 into a Laurent polynomial")]
    ZeroSubstitution,

    #[error("eigenvalue iteration did not converge after {iterations} iterations (dimension {dim})")]
    NoConvergence { iterations: usize, dim: usize },

    #[error("non-finite matrix entry")]
    NonFinite,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid reduction data: {0}")]
    Reduction(String),

    #[error("component is not pseudo-Anosov")]
    NotPseudoAnosov,
}

pub type Result<T> = std::result::Result<T, Error>;
