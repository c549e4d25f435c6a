use thiserror::Error;

/// Errors raised by the field, character-sum, code and distribution layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus is not a monic irreducible polynomial of degree {degree} over GF({p})")]
    ReducibleModulus { p: u32, degree: u32 },
    #[error("quadratic character is undefined in characteristic 2")]
    EvenCharacteristic,
    #[error("characteristic {p} is too small (need p >= {min})")]
    SmallCharacteristic { p: u32, min: u32 },
    #[error("characteristic {0} is excluded (p must differ from 3 and 5)")]
    BadCharacteristic(u32),
    #[error("leading coefficient of the quadratic is zero")]
    DegenerateLeadingCoefficient,
    #[error("representations of {p} disagree: A_p = {first} and {second}")]
    AmbiguousRepresentation { p: u64, first: i64, second: i64 },
    #[error("no representation of {0} by the expected binary quadratic form")]
    MissingRepresentation(u64),
    #[error("q = {q} exceeds the brute-force limit {limit}")]
    TooLarge { q: u64, limit: u64 },
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("pattern of total multiplicity {0} exceeds 5")]
    PatternTooLarge(u32),
    #[error("pattern coefficients must be positive")]
    ZeroPatternCoefficient,
    #[error("unknown pattern {0}")]
    UnknownPattern(String),
    #[error("gamma_d is only available for d in {{2, 5}}, got {0}")]
    UnsupportedD(u32),
    #[error("{what} is not an integer")]
    IntegralityFailure { what: String },
    #[error("gcd(3(q - 1) + 1, q^2 - 1) != 1 for p = {p}, m = {m}")]
    GcdViolation { p: u32, m: u32 },
    #[error("row {value} has negative frequency {count}")]
    NegativeFrequency { value: String, count: String },
    #[error("{what}: closed form {closed} != enumeration {enumerated}")]
    Mismatch {
        what: String,
        closed: String,
        enumerated: String,
    },
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
