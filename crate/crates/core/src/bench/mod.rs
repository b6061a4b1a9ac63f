//! Problem files and the `S_n` benchmark family.

mod problem_file;
mod sn;

use thiserror::Error;

pub use problem_file::{parse_problem, print_problem, ProblemFile};
pub use sn::{
    bench_row, generate_sn, minimal_cutfree_instances, signature as sn_signature, stated_cutfree_q, BenchRow,
    CutFreeInstances, SnInstance, CUTFREE_LIMIT,
};

use crate::herbrand::HerbrandError;
use crate::logic::LogicError;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("the family starts at n = 2, got {0}")]
    TooSmall(usize),
    #[error("n = {n} is above the size guard {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Herbrand(#[from] HerbrandError),
    #[error(transparent)]
    Logic(#[from] LogicError),
}
