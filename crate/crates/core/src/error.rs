use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} is not supported (must be at most 2^16)")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus must be a monic polynomial of degree {expected}, got degree {got}")]
    ModulusDegree { expected: u32, got: usize },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus coefficient {coeff} is not in GF({p})")]
    ModulusCoefficient { p: u32, coeff: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element {value} is outside GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("column indices must be strictly increasing")]
    IndicesNotIncreasing,
    #[error("the zero matrix does not generate a code")]
    ZeroCode,
    #[error("the dual of a full-space [{n},{n}] code is the zero code")]
    FullSpaceDual { n: usize },
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error("puncturing drops the dimension from {from} to {to}")]
    RankDrop { from: usize, to: usize },
    #[error("{what}: {needed} items exceed the enumeration budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("code is not projective; projectivize it first")]
    NotProjective,
    #[error("the points do not generate GF(q)^{k}")]
    DoesNotGenerate { k: usize },
    #[error("unknown example code `{0}`")]
    UnknownExample(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn budget(what: &'static str, needed: impl ToString, budget: u64) -> Self {
        Error::BudgetExceeded {
            what,
            needed: needed.to_string(),
            budget,
        }
    }
}
