//! Exact enumeration and structure of (3+1)-free posets.

pub mod bicoloured;
pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod poset;
pub mod series;
pub mod skeleton;
pub mod tangle;

pub use error::{Error, Result};
pub use poset::{PatternWitness, Poset, VertexSet};
