use thiserror::Error;

/// Errors raised by the polynomial, weight and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder: the claimed divisibility is false.
    #[error("exact division left a nonzero remainder")]
    NonZeroRemainder,

    /// Exact division over the rationals produced a non-integer coefficient.
    #[error("exact division produced a non-integral coefficient")]
    NonIntegralQuotient,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// An exponent exceeded the configured degree guard.
    #[error("exponent {exponent} exceeds the degree guard {limit}")]
    DegreeGuard { exponent: String, limit: u64 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A q-exponent does not vanish at q = 1, so the q -> 1 functional is undefined.
    #[error("exponent {0} does not vanish at q = 1")]
    OutsideSubfield(String),

    /// A bracket exponent evaluated to a nonpositive number.
    #[error("bracket exponent {0} is not positive")]
    NonPositiveBracket(String),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::DegreeGuard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
