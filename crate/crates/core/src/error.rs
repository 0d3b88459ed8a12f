use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeP(u64),
    #[error("prime {0} is not supported (need p >= 3)")]
    UnsupportedPrime(u64),
    #[error("exponent {0} outside 1..=8")]
    InvalidExponent(u32),
    #[error("{p}^{e} does not fit the 63-bit modulus budget")]
    Overflow { p: u64, e: u32 },
    #[error("operands belong to different moduli")]
    CtxMismatch,
    #[error("{0} is not a unit modulo p")]
    NotAUnit(String),
    #[error("zero has no p-adic factorisation")]
    ZeroInput,
    #[error("negative p-adic valuation {0}: p divides a denominator")]
    NegativeValuation(i64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("rising factorial hits a zero factor")]
    ZeroFactor,
    #[error("{0} is not odd")]
    NotOdd(u64),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("special-number table {0} was not built for this prime")]
    MissingTable(&'static str),
}
