use thiserror::Error;

use crate::partitions::{Cell, Partition};

/// Errors raised by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("invalid rim hook: {0}")]
    InvalidHook(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: Partition, right: Partition },

    #[error("root {root} is not a permissible cell of the active hook")]
    NotPermissible { root: Cell },

    #[error("involution invariant violated: {0}")]
    Involution(String),

    #[error("iteration exceeded the step budget of {budget} steps")]
    StepBudgetExceeded { budget: usize },

    #[error("type {0} is handled outside the involution")]
    AllSingletonType(Partition),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("poset is not (3+1)-free")]
    NotThreePlusOneFree,

    #[error("poset has height {0}, expected at most 2")]
    HeightTooLarge(usize),

    #[error("empty poset has no height")]
    EmptyPoset,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
