use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes:
/// parse/validation problems -> 2, unsupported characteristic -> 3,
/// everything else that aborts a computation -> 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("operands live over different algebras")]
    AlgebraMismatch,

    #[error("quotient is infinite dimensional: {0}")]
    InfiniteDimensional(String),

    #[error("relation is not admissible: {0}")]
    InadmissibleRelation(String),

    #[error("operation not supported in characteristic {0}")]
    UnsupportedCharacteristic(u64),

    #[error("module is projective")]
    ProjectiveInput,

    #[error("module is not indecomposable")]
    NotIndecomposable,

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("algebra is not self-injective: {0}")]
    NotSelfInjective(String),

    #[error("index {0} outside the repetitive window")]
    IndexOutOfWindow(i64),

    #[error("invalid field descriptor: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("decomposition did not converge: {0}")]
    Decomposition(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
