use alloc::string::String;

use thiserror::Error;

use crate::algebra::{Elem, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Invalid(#[from] ValidationReport),
    #[error("additive reduct is not a join-semilattice with unit zero: {law} fails at {witness:?}")]
    NotSemilattice { law: &'static str, witness: [Elem; 3] },
    #[error("subset is not contained in the subidentities (element {0})")]
    NotSubidentities(Elem),
    #[error("missing `{0}` table")]
    MissingTable(&'static str),
    #[error("relation universe size {0} outside 1..=3")]
    UniverseSize(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is cyclic (through vertex `{0}`)")]
    CyclicGraph(String),
    #[error("graph has more than {max} paths")]
    TooManyPaths { max: usize },
    #[error("unknown built-in `{0}`")]
    UnknownBuiltin(String),
    #[error("carrier size {0} outside 1..=6")]
    SizeOutOfRange(usize),
    #[error("law `{0}` is both required and forbidden")]
    ContradictoryQuery(&'static str),
    #[error("too many subidentities ({0}) to enumerate subalgebras")]
    TooManySubidentities(usize),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
