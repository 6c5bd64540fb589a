use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("no element of order {n} in a field of size {q}")]
    NoSuchRoot { n: u64, q: u64 },
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("generator polynomial is not monic")]
    NotMonic,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("{0} is not a prime congruent to 7 mod 12")]
    BadModulus(u64),
    #[error("{gamma} is not a primitive root mod {n}")]
    NotPrimitive { gamma: u64, n: u64 },
    #[error("gcd({q}, {n}) != 1")]
    NotCoprime { q: u64, n: u64 },
    #[error("q = {q} is not a sextic residue mod {n}")]
    QNotSexticResidue { q: u64, n: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("product of linear factors left the base field")]
    CoefficientNotInBaseField,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("codes have different lengths or fields")]
    LengthMismatch,
    #[error("minimal polynomial M_{0} is not a factor of the generator")]
    NotAFactor(u64),
    #[error("dropping every factor leaves a trivial generator")]
    EmptyGenerator,
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("no codeword within distance {0} of the received word")]
    NoCodewordInBall(usize),
    #[error("inner code is not contained in the outer code")]
    NotNested,
    #[error("inner code does not contain its dual")]
    NotDualContaining,
    #[error("dimensions violate k1 > k2 > n/2 (k1 = {k1}, k2 = {k2}, n = {n})")]
    DimensionOrder { k1: usize, k2: usize, n: usize },
    #[error("c_l + c_r = {sum} is not below ord(f) = {order}")]
    ToleranceExceeded { sum: usize, order: usize },
    #[error("family precondition failed: {0}")]
    FamilyPreconditionFailed(String),
    #[error("message degree {degree} is not below k2 = {k2}")]
    DegreeTooHigh { degree: usize, k2: usize },
    #[error("received word is not divisible by the outer generator")]
    NotInOuterCode,
    #[error("no shift in the window (-{cl}, {cr}) matches")]
    NoMatchingShift { cl: usize, cr: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
