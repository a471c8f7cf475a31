use thiserror::Error;

/// Errors raised by field construction, graph construction and the bound
/// calculators.
///
/// Every variant corresponds to a violated precondition; none of them
/// signals a falsified mathematical property. Those are reported through
/// the structured reports of the individual modules instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the size limit {limit}")]
    FieldTooLarge { p: u64, e: u32, limit: u64 },
    #[error("{0} is not a power of an odd prime")]
    NotPrimePower(u64),
    #[error("value {value} is not an element of GF({q})")]
    NotAnElement { value: u64, q: u64 },
    #[error("operands belong to different fields (GF({left}) and GF({right}))")]
    CrossField { left: u64, right: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero is neither a d-th power nor a non-power")]
    ZeroPowerTest,
    #[error("{d} does not divide {m}")]
    NotDivisor { d: u64, m: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{m} exceeds the factoring limit (trial division up to {limit})")]
    FactoringLimit { m: u64, limit: u64 },
    #[error("connection set is not symmetric (S != -S)")]
    NotSymmetric,
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(u64),
    #[error("point set needs at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is a square prime power; the bound needs an odd exponent")]
    SquareOrder(u64),
    #[error("index set difference I-I covers all of Z/{0}Z; the bound is vacuous")]
    VacuousIndexSet(u64),
    #[error("{order} is not the order of a proper subfield of GF({q})")]
    NotSubfieldOrder { order: u64, q: u64 },
    #[error("search exceeded the time limit")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
