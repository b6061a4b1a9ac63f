//! Herbrand sequents, their cut extension and proof construction.

mod construct;
mod eh;
mod problem;

use thiserror::Error;

pub use construct::{proof_from_eh, proof_from_herbrand, trie_size};
pub use eh::{check_grammar_fits, cut_instance, eh_build, EhReport, ExtendedHerbrandSequent};
pub use problem::{herbrand_check, HerbrandCheck, HerbrandInstanceSet, PrenexProblem};

use crate::calculus::CalculusError;
use crate::grammar::GrammarError;
use crate::logic::LogicError;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HerbrandError {
    #[error("{0}")]
    Invalid(String),
    #[error("instance tuple of length {found}, expected {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error("not a tautology: {0}")]
    NotTautology(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}
