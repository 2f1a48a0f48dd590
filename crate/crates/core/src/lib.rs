//! Exact generating functions for even and odd 132-avoiding permutations
//! with additional pattern restrictions, plus a brute-force enumeration
//! oracle to check them against.

pub mod algebra;
pub mod chebyshev;
pub mod error;
pub mod genfun;
pub mod patterns;
pub mod verify;

pub use error::{Error, Result};
