//! Schematic grammars for universal-existential cuts and their rewrite system.

mod gstar;
mod schematic;

use thiserror::Error;

pub use gstar::{gstar_of, rewrite_measure, CutVar, GStarSystem, RewriteRule, RewriteStep, RuleGroup};
pub use schematic::{SchematicPi2Grammar, ValidationReport, Violation};

use crate::logic::Term;

pub const ALPHA: &str = "alpha";
pub const TAU: &str = "tau";
pub const X: &str = "x";
pub const Y: &str = "y";
/// Wrappers for antecedent and succedent instance tuples.
pub const F_WRAPPER: &str = "hF";
pub const G_WRAPPER: &str = "hG";

pub fn alpha() -> Term {
    Term::var(ALPHA)
}

pub fn beta_name(j: usize) -> String {
    format!("b{j}")
}

pub fn beta(j: usize) -> Term {
    Term::var(beta_name(j))
}

pub fn x() -> Term {
    Term::var(X)
}

pub fn y() -> Term {
    Term::var(Y)
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GrammarError {
    #[error("invalid grammar: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("{0} is not a wrapped instance tuple of the right length")]
    BadWrappedTerm(String),
    #[error("rewrite step {0} does not match")]
    BadRewriteStep(usize),
}
