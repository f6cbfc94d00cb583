use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominations must be positive (got a={a}, b={b})")]
    NonPositive { a: i64, b: i64 },

    #[error("denominations are not coprime (gcd {gcd})")]
    NotCoprime { gcd: i64 },

    #[error("integer overflow: {0}")]
    Overflow(&'static str),

    #[error("gcd(0, 0) is undefined")]
    BothZero,

    #[error("minimal unit expressions need a > 1 and b > 1 (got a={a}, b={b})")]
    TrivialDenomination { a: i64, b: i64 },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("target must be nonnegative (got {0})")]
    NegativeTarget(i64),

    #[error("tree depth {depth} exceeds the bound {max}")]
    DepthExceeded { depth: u64, max: u64 },

    #[error("enumeration size {size} exceeds the budget {budget}")]
    SizeGuard { size: u128, budget: u64 },
}
