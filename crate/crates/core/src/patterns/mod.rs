//! Permutations, the canonical decomposition, and the enumeration oracle.

mod decomposition;
mod generate;
mod oracle;
mod perm;

pub use decomposition::{Block, CanonicalDecomposition};
pub use generate::{generate_132_avoiders, AvoiderTable};
pub use oracle::{
    oracle_bivariate, oracle_series, oracle_series_with_bound, Constraints, ContainSpec,
    OracleCount, OracleQuery, ParityCounts, ParityFilter, ParitySeries, Statistic, DEFAULT_MAX_N,
};
pub use perm::{Parity, Perm};
