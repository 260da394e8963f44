use thiserror::Error;

/// Errors reported by the fallible operations in this crate.
///
/// Operations whose contract has no failure mode simply return values and
/// treat contract violations (e.g. mixing moduli) as programmer errors via
/// `assert!`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("mismatched modulus: p = {0} vs p = {1}")]
    MismatchedModulus(u32, u32),

    #[error("direction must be nonzero")]
    ZeroDirection,

    #[error("function is not even")]
    NotEven,

    #[error("not balanced: set is not a union of lines through the origin")]
    NotBalanced,

    #[error("function is not constant on some punctured line")]
    NotBalancedFunction,

    #[error("set is not a {t}-fold blocking set")]
    NotBlocking { t: u32 },

    #[error("the adjoined origin point O is not allowed here")]
    OriginNotAllowed,

    #[error("projective point must have a nonzero coordinate")]
    ZeroProjectivePoint,

    #[error("transform value at O must be positive")]
    NonPositiveTransform,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("search space too large: {0}")]
    TooLarge(String),

    #[error("invalid rational literal: {0}")]
    BadRational(String),

    #[error("invalid set data: {0}")]
    BadSet(String),

    #[error("invalid search budget: {0}")]
    BadBudget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
