use thiserror::Error;

/// Failures raised by the exact-algebra kernel and the series formulas built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets {left:?} and {right:?} cannot be embedded into one another")]
    VarMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent tuple has length {got}, expected {expected}")]
    Arity { expected: usize, got: usize },
    #[error("binomial factor (1 - m) with m = 1 is identically zero")]
    ZeroFactor,
    #[error("factor coefficient {0} is not representable; only 1 and -1 are supported")]
    UnsupportedCoefficient(String),
    #[error("not expandable as a power series: {0}")]
    NotExpandable(String),
    #[error("negative exponent of `{0}` where a power series is required")]
    NegativeExponent(String),
    #[error("variable `{0}` still occurs in the expression")]
    VariableOccurs(String),
    #[error("invalid degree list: {0}")]
    InvalidDegrees(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid Omega expression: {0}")]
    InvalidOmega(String),
    #[error("section index {0} is negative")]
    NegativeSection(i64),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
