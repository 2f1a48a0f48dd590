//! Exact polynomial, rational-function and truncated-series arithmetic.

mod biseries;
mod intpoly;
mod linear;
mod poly;
mod ratfunc;
mod series;

pub use biseries::BiSeries;
pub use linear::solve_linear_2x2;
pub use poly::{Degree, Poly, Substitution};
pub use ratfunc::RatFunc;
pub use series::{catalan_series, Series};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
