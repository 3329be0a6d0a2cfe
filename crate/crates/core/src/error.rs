use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible surd fields: sqrt({0}) and sqrt({1})")]
    IncompatibleFields(String, String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("expansion exhausted after {0} partial quotients")]
    ExpansionExhausted(usize),
    #[error("empty digit list")]
    EmptyDigits,
    #[error("invalid partial quotient {0} (digits must be >= 1)")]
    InvalidDigit(String),
    #[error("partial quotient does not fit in 64 bits")]
    DigitOverflow,
    #[error("point is outside the image of psi (1 - 4*alpha*beta = {0} < 0)")]
    OutsidePsiImage(String),
    #[error("not a realizable pair: radicand {0} is negative")]
    NotRealizable(String),
    #[error("square root of {0} is not representable as a quadratic surd")]
    NotRepresentable(String),
    #[error("density singularity at 1 - 4*alpha*beta = {0}")]
    DensitySingularity(String),
    #[error("digit streams have no exact value; use enclosures")]
    InexactStream,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("region is not inside the triangle: {0}")]
    OutsideDelta(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconclusive enclosure: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
