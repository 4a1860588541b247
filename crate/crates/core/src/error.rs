use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid lens space L({p},{q}): {reason}")]
    InvalidLens { p: i64, q: i64, reason: &'static str },

    #[error("invalid knot ({a},{b}): {reason}")]
    InvalidKnot { a: i64, b: i64, reason: &'static str },

    #[error("wrong case: {0}")]
    WrongCase(String),

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("invalid comparison: {0}")]
    InvalidComparison(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI on stderr.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Overflow(_) => "overflow",
            Error::InvalidLens { .. } => "invalid-lens",
            Error::InvalidKnot { .. } => "invalid-knot",
            Error::WrongCase(_) => "wrong-case",
            Error::OutOfDomain(_) => "out-of-domain",
            Error::Degenerate(_) => "degenerate-input",
            Error::Parse { .. } => "parse",
            Error::OutOfScope(_) => "out-of-scope",
            Error::InvalidComparison(_) => "invalid-comparison",
            Error::InvariantViolation(_) => "invariant-violation",
        }
    }

    /// Process exit status: 2 for rejected input, 4 for overflow, 5 for a
    /// failed internal check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow(_) => 4,
            Error::InvariantViolation(_) => 5,
            _ => 2,
        }
    }

    pub(crate) fn parse(input: &str, reason: &'static str) -> Self {
        Error::Parse { input: input.to_string(), reason }
    }
}
