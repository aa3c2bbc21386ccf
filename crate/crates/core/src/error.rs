use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: BigInt, hi: BigInt },
    #[error("box side must be positive")]
    EmptyBox,
    #[error("degenerate form: discriminant is zero")]
    DegenerateForm,
    #[error("Q - lambda is reducible modulo p")]
    ReducibleModP,
    #[error("prime {p} is outside the supported regime for discriminant {d}")]
    SmallPrime { p: BigInt, d: BigInt },
    #[error("expected a standard instance of kind {0}")]
    WrongKind(&'static str),
    #[error("no pigeonhole multiplier found for T = {0}")]
    PigeonholeNotFound(u64),
    #[error("chosen T = {t} is not below p")]
    RegimeOverflow { t: BigInt },
    #[error("recomposition failed: {0}")]
    InversionMismatch(String),
    #[error("{0} is not square-free")]
    NotSquareFree(i64),
    #[error("Pell parameter {0} must be at least 2")]
    DTooSmall(i64),
    #[error("input exceeds guard: {0}")]
    GuardExceeded(String),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("factorization of {0} did not finish")]
    FactorizationTimeout(BigInt),
    #[error("points lie on different branches")]
    DifferentBranch,
    #[error("point ({x}, {y}) is not on the conic")]
    NotOnConic { x: BigInt, y: BigInt },
    #[error("need at least {need} usable records, got {got}")]
    Underdetermined { need: usize, got: usize },
    #[error("pipeline mismatch: decomposition found {decomposed}, direct count found {exact}")]
    PipelineMismatch { decomposed: u64, exact: u64 },
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("csv error: {0}")]
    Csv(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
