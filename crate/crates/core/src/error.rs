use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("unsupported number of variables {0} (supported: 1..={max})", max = crate::monomial::MAX_VARS)]
    VariableCount(usize),

    #[error("the unit monomial has no largest variable index")]
    UndefinedIndex,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("ideal is not strongly stable")]
    NotStronglyStable,

    #[error("unsupported ideal: {0}")]
    UnsupportedIdeal(String),

    #[error("lex segment of degree {degree} does not contain the multiples of the previous segment")]
    SegmentNotIdeal { degree: u32 },

    #[error("lexification did not stabilise below degree {0}")]
    LexBoundExceeded(u32),

    #[error("non-generic sample for seed {seed}: {reason}")]
    NongenericSample { seed: u64, reason: String },

    #[error("rank disagreement between primes {p1} and {p2} in multidegree {multidegree:?}")]
    PrimeDisagreement {
        p1: u64,
        p2: u64,
        multidegree: Vec<u32>,
    },

    #[error("degenerate quotient: {0} lies in the ideal")]
    DegenerateQuotient(String),

    #[error("regularity of the zero table is undefined")]
    UndefinedRegularity,

    #[error("linear change of coordinates is singular")]
    SingularChange,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
