//! Exact closed-form evaluation of the recurrence
//! `x_n = a x_{ceil(n/2)} + a x_{floor(n/2)} + P(ceil(n/2), floor(n/2))`
//! for a bivariate polynomial `P`, rational `a != 0` and arbitrarily large `n`,
//! together with brute-force oracles used to check it.

pub mod alpha;
pub mod arith;
pub mod binary;
pub mod catalog;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod solver;
#[cfg(feature = "special-cases")]
pub mod special;

pub use error::{Error, Result};
