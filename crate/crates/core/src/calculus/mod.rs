//! The sequent calculus G3c extended with cut.

mod ancestry;
mod derivation;
pub mod io;
mod proof;
mod rules;
mod sat;

use thiserror::Error;

pub use ancestry::{ancestry, tagged_leaves, Origins, TaggedSequent};
pub use derivation::{
    maximal_derivation, maximal_derivation_with, non_tautological_leaves, propositional_proof, DerivationTree,
};
pub use proof::{check_proof, complexities, CheckError, CheckFailure, Complexity, Proof};
pub use rules::{apply_shape, premise_shapes, propositional_rule, PremiseShape, RuleLabel};
pub use sat::{is_tautology, satisfiable};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CalculusError {
    #[error("sequent is not quantifier-free: {0}")]
    NotQuantifierFree(String),
    #[error("sequent is not a propositional tautology: {0}")]
    NonTautological(String),
    #[error("no node at path {0:?}")]
    UnknownNode(Vec<usize>),
    #[error("formula {0} does not occur there")]
    UnknownOccurrence(String),
}
