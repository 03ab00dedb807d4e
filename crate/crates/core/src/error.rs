use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported signature ({p},{q}): {reason}")]
    UnsupportedSignature { p: usize, q: usize, reason: String },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid spinor index: {0}")]
    InvalidSpinorIndex(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not in so({p},{q})")]
    NotInSo { p: usize, q: usize },

    #[error("matrix is not in u({p},{q})")]
    NotInU { p: usize, q: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("wrong solver: {0}")]
    WrongSolver(String),

    #[error("unsupported holonomy entry: {0}")]
    UnsupportedEntry(String),

    #[error("unknown holonomy algebra '{0}'")]
    UnknownHolonomy(String),

    #[error("spinor is zero")]
    ZeroSpinor,

    #[error("spinor does not induce a complex structure (E != TM)")]
    NotKahlerType,

    #[error("complex structure is not unique for this spinor")]
    DegenerateSpinor,
}
