use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("the zero polynomial has no zero-root order")]
    ZeroPolynomial,

    #[error("wrong number of arguments: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("duplicate product for basis tuple {0:?}")]
    DuplicateTuple(Vec<usize>),

    #[error("exhaustive check needs {cases} cases, above the cap of {cap}")]
    TooManyCases { cases: u128, cap: u128 },

    #[error("slot {slot} out of range 1..={arity}")]
    SlotOutOfRange { slot: usize, arity: usize },

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("subspace is not an n-sided ideal")]
    NotIdeal,

    #[error("subalgebra is not nilpotent")]
    NotNilpotent,

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
