use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::cover::CoverError;
use crate::enumerate::GridError;
use crate::functor::MorphismError;
use crate::fuzzy::{FuzzyError, ValueError};
use crate::group::GroupError;
use crate::monoid::{ChainError, MonoidError};
use crate::premorphism::PremorphismError;

/// A proved statement that failed on a concrete instance.
///
/// Valid inputs never produce one; seeing it means the library (or the
/// mathematics) is wrong, and `witness` names the offending elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{claim} fails: {witness}")]
pub struct Violation {
    pub claim: String,
    pub witness: String,
}

impl Violation {
    pub fn new(claim: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            claim: claim.into(),
            witness: witness.into(),
        }
    }
}

/// Coarse classification used for exit codes and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input does not describe the structure it claims to.
    Validation,
    /// An enumeration would exceed its budget.
    Budget,
    /// A theorem check failed.
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error(transparent)]
    Premorphism(#[from] PremorphismError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Violation(#[from] Violation),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Budget(_) => ErrorKind::Budget,
            Error::Violation(_) | Error::Monoid(MonoidError::Inconsistent(_)) => ErrorKind::Theorem,
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
