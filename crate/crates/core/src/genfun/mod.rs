//! Exact generating functions: the recursive engine, closed forms for
//! pattern families, exact-count containment and statistic marking.

mod closed;
mod containment;
mod engine;
mod stats;

pub use closed::*;
pub use containment::*;
pub use engine::{Engine, GfTriple};
pub use stats::*;
