use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("prime must be greater than 3, got {0}")]
    SmallPrime(u64),

    #[error("negative argument: {0}")]
    NegativeArgument(String),

    #[error("value is not p-integral for p = {p}")]
    NotPIntegral { p: u64 },

    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("series constant term is not a unit")]
    NonUnitConstant,

    #[error("inner series must have positive leading exponent, got {0}")]
    NonPositiveValuation(i64),

    #[error("eta quotient weight sum {0} is not divisible by 24")]
    NonIntegralWeight(i64),

    #[error("invalid campaign configuration: {0}")]
    InvalidConfig(String),
}
