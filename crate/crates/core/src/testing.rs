//! Small problems shared by the unit tests.

use crate::bench::{parse_problem, ProblemFile};
use crate::logic::ClauseSet;
use crate::solver::{build_sehs, parse_starting_set, partitioned_dnta, PartitionedLeaf, Sehs};

pub const CROSSED: &str = include_str!("../fixtures/crossed_pq.p2");
pub const NESTED: &str = include_str!("../fixtures/nested_beta.p2");

/// One leaf with `P(alpha,c)` on the alpha side and `Q(c)` neutral; the
/// t-terms are `c` and `f alpha`.
pub const SHARED_SLOT: &str = "
    (signature (functions (c 0) (r 0) (f 1)) (predicates (P 2) (Q 1)))
    (forall-vars u)
    (exists-vars v)
    (antecedent (and (P u c) (Q c)))
    (succedent (P r v))
    (grammar (f-tuples (alpha)) (g-tuples (b1)) (r-terms r) (t-terms c (f alpha)))";

/// Solvable only by a matrix whose every leaf closes through the cut.
pub const CUT_ONLY: &str = "
    (signature (functions (r1 0) (c 0)) (predicates (P 2)))
    (forall-vars u)
    (exists-vars v)
    (antecedent (P r1 c))
    (succedent (P r1 v))
    (grammar (f-tuples (alpha)) (g-tuples (b1)) (r-terms r1) (t-terms c))";

pub struct Loaded {
    pub pf: ProblemFile,
    pub sehs: Sehs,
    pub leaves: Vec<PartitionedLeaf>,
}

impl Loaded {
    pub fn clauses(&self, text: &str) -> ClauseSet {
        parse_starting_set(text, &self.pf.problem.signature).unwrap()
    }
}

pub fn load(text: &str) -> Loaded {
    let pf = parse_problem(text).unwrap();
    let sehs = build_sehs(&pf.problem, &pf.grammar, None).unwrap();
    let leaves = partitioned_dnta(&sehs).unwrap();
    Loaded { pf, sehs, leaves }
}
