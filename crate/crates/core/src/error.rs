use thiserror::Error;

use crate::poset::PatternWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through vertex {0}")]
    Cycle(usize),

    #[error("vertex index {index} out of range for {n} vertices")]
    Index { index: usize, n: usize },

    #[error("size {got} exceeds the supported bound {max} for {what}")]
    Size { what: &'static str, got: usize, max: usize },

    #[error("poset is not (3+1)-free: {0}")]
    Not31Free(PatternWitness),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("inner series of a composition must have zero constant term")]
    CompositionOrder,

    #[error("substituted series must have zero constant term ({0})")]
    Valuation(&'static str),

    #[error("coefficient {index} is not integral after scaling: {value}")]
    Integrality { index: usize, value: String },

    #[error("malformed decorated Dyck path: {0}")]
    MalformedPath(String),

    #[error("part specification does not match skeleton: {0}")]
    SpecMismatch(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
