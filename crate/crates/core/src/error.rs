use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{value} is divisible by {prime}")]
    NotCoprime { value: String, prime: u64 },

    #[error("polynomial division leaves a remainder: {0}")]
    NonDivisible(String),

    #[error("precision exhausted: need {needed} p-adic digits, have {available}")]
    PrecisionExhausted { needed: u32, available: u32 },

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("leading coefficient vanishes modulo {0}")]
    ZeroLeadingCoefficient(u64),

    #[error("degree must be at least 1")]
    ConstantPolynomial,

    #[error("unknown check id `{0}`")]
    UnknownId(String),

    #[error("missing parameter `{param}` for {id}")]
    MissingParam { id: String, param: String },

    #[error("parameter out of range for {id}: {reason}")]
    PredicateViolated { id: String, reason: String },

    #[error("{family} is not available as a modular stream")]
    UnsupportedFamily { family: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
