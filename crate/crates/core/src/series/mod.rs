//! Exact power series and the counting formulas built on them.

mod counting;
mod truncated;

pub use counting::*;
pub use truncated::{rat, Rational, Series1, Series2};
