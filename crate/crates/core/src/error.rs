use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operation requires a field, got {0}")]
    NotAField(String),

    #[error("operation requires the integers, got {0}")]
    NotIntegers(String),

    #[error("invalid entry: {0}")]
    InvalidEntry(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),

    #[error("not a chain map: {0}")]
    NotAChainMap(String),

    #[error("invalid simplicial data: {0}")]
    InvalidSimplicial(String),

    #[error("invalid preorder data: {0}")]
    InvalidPreorder(String),

    #[error("map is not monotone: {0}")]
    NotMonotone(String),

    #[error("invalid cobordism: {0}")]
    InvalidCobordism(String),

    #[error("dual pair fails the triangle identities: {0}")]
    DualPairInvalid(String),

    #[error("missing inverse for {0}")]
    MissingInverse(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn type_mismatch(message: impl Into<String>) -> Self {
        Error::TypeMismatch(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
