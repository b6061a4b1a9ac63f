//! Terms, formulas, literals, clauses and sequents.

mod formula;
mod sequent;
mod sharp;
mod signature;
pub mod syntax;
mod term;

use thiserror::Error;

pub use formula::{Atom, Formula};
pub use sequent::{
    clause_set_to_string, clause_to_string, dnf_of, dual_set, literal_normal_form, sorted_by_print, Clause, ClauseSet,
    Literal, Sequent, Side,
};
pub use sharp::{sharp_count, sharp_count_spread, SPREAD_LIMIT};
pub use signature::{is_beta_name, is_reserved, Signature, KEYWORDS};
pub use term::{Position, Substitution, Term};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("symbol '{symbol}' has arity {expected} but is applied to {found} argument(s)")]
    Arity { symbol: String, expected: usize, found: usize },
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("'{0}' is reserved")]
    Reserved(String),
    #[error("'{0}' is declared twice")]
    Duplicate(String),
    #[error("'{0}' is not a valid identifier")]
    BadIdentifier(String),
    #[error("substitution would capture a variable under the binder '{var}'")]
    Capture { var: String },
    #[error("formula {0} is not atomic")]
    NotAtomic(String),
    #[error("formula {0} is not a literal")]
    NotALiteral(String),
    #[error("empty clause set has no disjunctive normal form")]
    EmptyClauseSet,
    #[error("empty clause in clause set")]
    EmptyClause,
    #[error("tuples of different lengths: {expected} and {found}")]
    MixedArity { expected: usize, found: usize },
    #[error("set of size {size} exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
}
