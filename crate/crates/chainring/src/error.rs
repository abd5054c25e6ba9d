//! Crate-wide error type.

use thiserror::Error;

/// Domain errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),
    #[error("ReducibleModulus: residue image of the modulus is not irreducible")]
    ReducibleModulus,
    #[error("DegreeMismatch: {detail}")]
    DegreeMismatch { detail: String },
    #[error("RingMismatch: operands belong to different rings")]
    RingMismatch,
    #[error("NonUnit: element has valuation >= 1 and is not invertible")]
    NonUnit,
    #[error("NotTeichmuller: coordinate is not in the Teichmuller set")]
    NotTeichmuller,
    #[error("SizeGuardExceeded: {size} exceeds the enumeration guard {guard}")]
    SizeGuardExceeded { size: u128, guard: u128 },
    #[error("OrderUnavailable: {ell} does not divide q^m - 1 = {group}")]
    OrderUnavailable { ell: u64, group: u128 },
    #[error("NotCoprime: gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },
    #[error("InvalidSubgroup: {d} does not divide the extension degree {m}")]
    InvalidSubgroup { d: usize, m: usize },
    #[error("NonUnitDeterminant: matrix is not invertible over the chain ring")]
    NonUnitDeterminant,
    #[error("NotRsfInput: input matrix must be in row standard form")]
    NotRsfInput,
    #[error("LengthMismatch: expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("HermitianRequiresEvenDegree: extension degree {m} is odd")]
    HermitianRequiresEvenDegree { m: usize },
    #[error("NotSubcode: the given code is not a subcode")]
    NotSubcode,
    #[error("UnknownRepresentative: {a} is not a cyclotomic coset representative")]
    UnknownRepresentative { a: u64 },
    #[error("EmptyDefiningSet: operation requires a nonempty defining set")]
    EmptyDefiningSet,
    #[error("NotQInvariant: the defining set is not q-invariant")]
    NotQInvariant,
    #[error("ZeroCode: operation requires a nonzero code")]
    ZeroCode,
    #[error("UnknownSuite: no verification suite named `{0}`")]
    UnknownSuite(String),
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable name, used by the CLI error objects.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::RingMismatch => "RingMismatch",
            Error::NonUnit => "NonUnit",
            Error::NotTeichmuller => "NotTeichmuller",
            Error::SizeGuardExceeded { .. } => "SizeGuardExceeded",
            Error::OrderUnavailable { .. } => "OrderUnavailable",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::InvalidSubgroup { .. } => "InvalidSubgroup",
            Error::NonUnitDeterminant => "NonUnitDeterminant",
            Error::NotRsfInput => "NotRsfInput",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::HermitianRequiresEvenDegree { .. } => "HermitianRequiresEvenDegree",
            Error::NotSubcode => "NotSubcode",
            Error::UnknownRepresentative { .. } => "UnknownRepresentative",
            Error::EmptyDefiningSet => "EmptyDefiningSet",
            Error::NotQInvariant => "NotQInvariant",
            Error::ZeroCode => "ZeroCode",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::Parse(_) => "ParseError",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
