//! The cut-introduction engine: leaves of the reduced representation,
//! candidate clause sets, the two filters, and the end-to-end pipeline.

mod anti;
mod dnta;
mod filters;
mod pipeline;
mod pools;
mod sehs;
mod verify;

use serde::Serialize;
use thiserror::Error;

pub use anti::{a_prime, generalizations, in_allowed, naive_pool, OCCURRENCE_LIMIT};
pub use dnta::{partitioned_dnta, PartitionedLeaf};
pub use filters::{cl_filter, for_each_candidate, in_cl, in_sol, sol_filter, AllowedReading};
pub use pipeline::{
    introduce_cut, parse_starting_set, starting_set_from_pool, CutOutcome, PoolChoice, SolutionReport, SolveOptions,
};
pub use pools::{gstar_pool, mgul, GStarPool};
pub use sehs::{build_sehs, classify, LiteralClass, Sehs};
pub use verify::{is_balanced, solution_sequents, verify_solution};

use crate::calculus::CalculusError;
use crate::grammar::GrammarError;
use crate::herbrand::HerbrandError;
use crate::logic::LogicError;

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Clauses per candidate set.
    pub max_clauses: usize,
    /// Literals per clause of a generated starting set.
    pub max_clause_size: usize,
    /// Candidate clause sets examined before giving up.
    pub max_candidates: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { max_clauses: 3, max_clause_size: 3, max_candidates: 1_000_000 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub pool_size: usize,
    pub starting_set_size: usize,
    pub candidates_examined: usize,
    pub passed_cl: usize,
    pub passed_sol: usize,
    pub cap_hit: bool,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("atom {0} contains both alpha and a beta")]
    MixedAtom(String),
    #[error("grammar does not cover: {}", .0.join(", "))]
    CoverFailure(Vec<String>),
    #[error("{0} has {1} generalizable occurrences, more than the limit")]
    TooManyOccurrences(String, usize),
    #[error("literal {0} has variables other than x and y")]
    NotCutLiteral(String),
    #[error("invalid starting set: {0}")]
    InvalidStartingSet(String),
    #[error("clause set is not a solution")]
    NotASolution,
    #[error("no solution among {} candidates", .0.candidates_examined)]
    NoSolutionUnderPool(SearchStats),
    #[error("candidate cap exceeded after {} candidates", .0.candidates_examined)]
    CapExceeded(SearchStats),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Herbrand(#[from] HerbrandError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}
