use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    /// Any other error pinned to a document position.
    #[error("{line}:{col}: {inner}")]
    At { line: usize, col: usize, inner: Box<Error> },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate relation for pair ({0}, {1})")]
    DuplicateRelation(String, String),

    #[error("relation [{0}, {1}] is not of swap-plus-lower shape: {2}")]
    RuleShape(String, String, String),

    #[error("invalid algebra specification: {0}")]
    InvalidSpec(String),

    #[error("argument carries the deformation parameter: {0}")]
    KappaInInput(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("element is outside the invariant subalgebra: {0}")]
    NotInvariant(String),

    #[error("not a Lorentz matrix: {0}")]
    NotLorentz(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown target `{0}`")]
    UnknownTarget(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn at(self, line: usize, col: usize) -> Error {
        match self {
            e @ (Error::Syntax { .. } | Error::At { .. }) => e,
            e => Error::At {
                line,
                col,
                inner: Box::new(e),
            },
        }
    }

    /// The error with any position wrapper removed.
    pub fn kind(&self) -> &Error {
        match self {
            Error::At { inner, .. } => inner.kind(),
            e => e,
        }
    }
}
