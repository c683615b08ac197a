use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty symbol")]
    EmptySymbol,

    #[error("non-finite coefficient {0}")]
    NonFiniteCoefficient(f64),

    #[error("negative tolerance {0}")]
    NegativeTolerance(f64),

    /// Violation of the unordered-access discipline: positional access, or
    /// elementwise work between collections with unrelated orderings.
    #[error("disord discipline violation: {0}")]
    Discipline(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("cannot reconstruct negative entry {symbol}={value}")]
    NegativeCount { symbol: String, value: f64 },

    #[error("cannot reconstruct non-integral entry {symbol}={value}")]
    NonIntegralCount { symbol: String, value: f64 },

    #[error("{0}")]
    Parse(String),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn discipline(msg: impl Into<String>) -> Self {
        Error::Discipline(msg.into())
    }

    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// The underlying error with any line-number context stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            Error::AtLine { line, .. } => Some(*line),
            _ => None,
        }
    }
}
