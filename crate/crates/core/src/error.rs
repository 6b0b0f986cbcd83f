use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    #[error("generators have gcd {gcd}; the semigroup is not cofinite")]
    NonCofinite { gcd: i64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid generalized arithmetic parameters: {0}")]
    InvalidParams(String),

    #[error("generalized arithmetic parameters do not describe this semigroup: {0}")]
    ParamsMismatch(String),

    #[error("step {s} must be a positive integer")]
    InvalidStep { s: i64 },

    #[error("step {s} lies in the semigroup; the Leamer monoid needs a gap")]
    StepInSemigroup { s: i64 },

    #[error("({n},{ell}) is not a Leamer element: both coordinates must be >= 1")]
    InvalidElement { n: i64, ell: i64 },

    #[error("({n},{ell}) is not in the Leamer monoid for step {s}")]
    NotInLeamer { s: i64, n: i64, ell: i64 },

    #[error("semigroup is not symmetric")]
    NotSymmetric,

    #[error("expected {expected} minimal generators, found {found}")]
    WrongGeneratorCount { expected: usize, found: usize },

    #[error("generator index {index} out of range for {len} generators")]
    GeneratorIndex { index: usize, len: usize },

    #[error("parameters violate 3 <= k < a (a={a}, k={k})")]
    NotEligible { a: i64, k: i64 },

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),

    #[error("no irreducible (n,2) exists for step {s} below the ceiling {ceiling}")]
    NoIrreducibleFound { s: i64, ceiling: i64 },

    #[error("sieve oracle disagrees with the Apery table: {0}")]
    OracleMismatch(String),

    #[error("scan configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for failures that signal a mathematical event (a checked
    /// theorem conclusion that did not hold) rather than bad input.
    pub fn is_mathematical_event(&self) -> bool {
        matches!(
            self,
            Error::TheoremViolation(_) | Error::NoIrreducibleFound { .. }
        )
    }
}
