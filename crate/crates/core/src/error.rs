use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("no power-series expansion: denominator vanishes at x = 0")]
    NoSeriesExpansion,
    #[error("division by a bivariate series whose constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("singular linear system")]
    SingularSystem,
    #[error("singular recursion while solving for {0}")]
    SingularRecursion(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("pattern {0} contains 132")]
    Contains132(String),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}
