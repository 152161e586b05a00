use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("discriminant {0} is not one of the nine principal imaginary quadratic discriminants")]
    NotPrincipalImaginaryQuadratic(i64),
    #[error("operands belong to different fields (D = {0} and D = {1})")]
    FieldMismatch(i64, i64),
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("operation undefined for the zero element")]
    ZeroInput,
    #[error("gcd of two zero elements is undefined")]
    BothZero,
    #[error("congruence modulus must be nonzero")]
    ZeroModulus,
    #[error("{0} is not a rational prime")]
    NotPrime(u64),
    #[error("coordinate overflow in ring arithmetic")]
    Overflow,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("grid needs at least 4 increasing points, got {0}")]
    GridTooSmall(usize),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
