use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("polynomial is not foldable: {0}")]
    NotFoldable(&'static str),
    #[error("empty interval: lower endpoint is not below the upper endpoint")]
    EmptyInterval,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not tridiagonal")]
    NotTridiagonal,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{numerator}/{denominator} is not in lowest terms")]
    NotReduced { numerator: String, denominator: String },
    #[error("fraction out of range, need 0 < beta < alpha: {0}")]
    OutOfRange(String),
    #[error("both numerator and denominator are odd; no even continued fraction exists")]
    ParityError,
    #[error("continued fraction tail vanishes; division by zero")]
    DivisionByZero,
    #[error("invalid continued fraction word: {0}")]
    InvalidWord(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("index must be even, got {0}")]
    OddIndex(usize),
    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("root finder disagrees with exact count: {0}")]
    RootCheck(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invariant violated for [{word}]: {what}")]
    Invariant { word: String, what: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
