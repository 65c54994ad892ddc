use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("coefficient field mismatch")]
    FieldMismatch,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("point not on hypersurface")]
    PointNotOnHypersurface,

    #[error("direction vector must be nonzero")]
    ZeroDirection,

    #[error("computation budget exceeded after {steps} reduction steps")]
    BudgetExceeded { steps: u64 },

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: i64, found: i64 },

    #[error("line present, lemma inapplicable")]
    LinePresent,

    #[error("point is singular; tangent space is not linear of the expected dimension")]
    SingularPoint,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("coefficient {0} has no reduction modulo {1}")]
    BadReduction(String, u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
