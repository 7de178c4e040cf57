use thiserror::Error;

/// Errors reported by the library's contract checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient ring mismatch")]
    AmbientMismatch,

    #[error("zero input not allowed in {0}")]
    ZeroInput(&'static str),

    #[error("element is not homogeneous in the internal grading")]
    Inhomogeneous,

    #[error("element is not normal: {0}")]
    NotNormal(String),

    #[error("internal degree {degree} exceeds the truncation bound {bound}")]
    DegreeExceedsTruncation { degree: u32, bound: u32 },

    #[error("element is not a cycle")]
    NotACycle,

    #[error("element is not trihomogeneous")]
    NotTrihomogeneous,

    #[error("odd element has a nonzero square")]
    OddSquareNonzero,

    #[error("element does not belong to this extension")]
    ExtensionMismatch,

    #[error("exactness precondition violated in homological degree {hom} internal degree {ideg}")]
    ExactnessViolated { hom: u32, ideg: u32 },

    #[error("chain-map lifting system is inconsistent at homological degree {hom}, internal degree {ideg}")]
    LiftInconsistent { hom: u32, ideg: u32 },

    #[error("ring is not a verified skew complete intersection: {0}")]
    NotSkewCI(String),

    #[error("relation of internal degree {0} < 2 not allowed here")]
    RelationDegreeTooSmall(u32),

    #[error("homological window too small: need at least {need}, have {have}")]
    InsufficientWindow { need: u32, have: u32 },

    #[error("minimality violated: {0}")]
    MinimalityViolated(String),

    #[error("invalid ring data: {0}")]
    InvalidRing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
