use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A located syntax or validation error from one of the text parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("geometric closure needs r(1) = 0 for convergence near t = 1, got r(1) = {0}")]
    NotVanishingAtOne(String),
    #[error("evaluation at a pole: t = {0}")]
    Pole(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid diagram: {0}")]
    Validation(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandCountMismatch(usize, usize),
    #[error("move pattern not found: {0}")]
    PatternNotFound(String),
    #[error("unknown crossing {0}")]
    UnknownCrossing(String),
    #[error("bad resolution choice: {0}")]
    ResolutionChoice(String),
    #[error("Markov layer requires positive string links (crossing {0} is negative)")]
    NotPositive(String),
    #[error("parameter t = {0} is outside the admissible range {1}")]
    TOutOfRange(String, &'static str),
    #[error("chain is not regular: no power of the reachability matrix is all-positive, so the stationary limit is not unique")]
    NotRegular,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Input-format failures, as opposed to mathematical precondition failures.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Validation(_))
    }
}
