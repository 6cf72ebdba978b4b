use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus {0:?} is reducible over Z_{1}")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("no modulus supplied or bundled for F_{0}")]
    MissingModulus(u64),
    #[error("field of order {0} exceeds the supported maximum")]
    FieldTooLarge(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("operation undefined in characteristic 2")]
    EvenCharacteristic,
    #[error("order {m} does not divide q - 1 = {q_minus_1}")]
    OrderDoesNotDivide { m: u64, q_minus_1: u64 },
    #[error("matrix is {0}x{1}, expected square")]
    NonSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("lambda = {0} is not a unit")]
    NonUnitLambda(String),
    #[error("code has dimension 0")]
    EmptyCode,
    #[error("enumeration of {needed} codewords exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("MacWilliams transform produced a non-integral or negative coefficient")]
    NonIntegralResult,
    #[error("component lengths differ: {0:?}")]
    LengthMismatch(Vec<usize>),
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("mu = {mu} outside 1..={max}")]
    MuOutOfRange { mu: u32, max: u32 },
    #[error("generator coefficient lies outside the base field")]
    CoefficientNotInBaseField,
    #[error("not a weighing matrix: row {row} . row {col} = {value}, expected {expected}")]
    NotWeighing { row: usize, col: usize, value: i64, expected: i64 },
    #[error("matrix entries must lie in {{-1, 0, 1}} and form a square grid")]
    NotTernaryGrid,
    #[error("q = {q} is not in the required residue class mod 4 ({required})")]
    WrongResidueClass { q: u64, required: &'static str },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("search exhausted without a result: {0}")]
    NotFound(String),
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("generator does not define a self-dual code")]
    NotSelfDual,
    #[error("parse error: {0}")]
    Parse(String),
    /// Two independent computations of the same quantity disagreed.
    #[error("internal oracle disagreement: {0}")]
    OracleDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
