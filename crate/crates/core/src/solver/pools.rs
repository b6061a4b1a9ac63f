use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::dnta::PartitionedLeaf;
use crate::grammar::GStarSystem;
use crate::logic::{dual_set, Literal};

/// Literals common to the rewrite closures of both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GStarPool {
    #[serde(serialize_with = "crate::report::display_sorted")]
    pub literals: BTreeSet<Literal>,
    /// Every leaf has a unifiable pair with some leaf.
    pub unifiable: bool,
    /// Per leaf, in the order given.
    pub unifiable_leaves: Vec<bool>,
}

struct Closures<'a> {
    sys: &'a GStarSystem,
    cache: BTreeMap<Literal, BTreeSet<Literal>>,
}

impl Closures<'_> {
    fn reach(&mut self, l: &Literal) -> &BTreeSet<Literal> {
        if !self.cache.contains_key(l) {
            let r = self.sys.reachable_literals(l);
            self.cache.insert(l.clone(), r);
        }
        &self.cache[l]
    }

    fn left_side(&mut self, leaf: &PartitionedLeaf) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for l in leaf.a.iter().chain(&leaf.n) {
            out.extend(self.reach(l).iter().cloned());
        }
        out
    }

    /// Duals of what the beta and neutral literals rewrite to.
    fn right_side(&mut self, leaf: &PartitionedLeaf) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for q in leaf.b.iter().chain(&leaf.n) {
            out.extend(dual_set(self.reach(q)));
        }
        out
    }
}

/// Unified literals of the candidate pairs `(A(s) u N(s)) x (B(t) u N(t))`.
pub fn mgul(sys: &GStarSystem, s: &PartitionedLeaf, t: &PartitionedLeaf) -> BTreeSet<Literal> {
    let mut c = Closures { sys, cache: BTreeMap::new() };
    let left = c.left_side(s);
    let right = c.right_side(t);
    left.intersection(&right).cloned().collect()
}

/// Union of the unified literals over all ordered pairs of leaves.
///
/// Since the union ranges over every pair, it is the intersection of the
/// left closures of all leaves with the dual right closures of all leaves.
pub fn gstar_pool(sys: &GStarSystem, leaves: &[PartitionedLeaf]) -> GStarPool {
    let mut c = Closures { sys, cache: BTreeMap::new() };
    let lefts: Vec<BTreeSet<Literal>> = leaves.iter().map(|l| c.left_side(l)).collect();
    let rights: Vec<BTreeSet<Literal>> = leaves.iter().map(|l| c.right_side(l)).collect();
    let all_left: BTreeSet<&Literal> = lefts.iter().flatten().collect();
    let all_right: BTreeSet<&Literal> = rights.iter().flatten().collect();
    let literals: BTreeSet<Literal> = all_left.intersection(&all_right).map(|l| (*l).clone()).collect();
    let unifiable_leaves: Vec<bool> =
        lefts.iter().map(|l| rights.iter().any(|r| l.intersection(r).next().is_some())).collect();
    GStarPool { literals, unifiable: unifiable_leaves.iter().all(|b| *b), unifiable_leaves }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::generate_sn;
    use crate::grammar::gstar_of;
    use crate::solver::{build_sehs, partitioned_dnta};
    use crate::testing::{load, CROSSED, NESTED};

    fn shown(s: &BTreeSet<Literal>) -> Vec<String> {
        s.iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn sn_pool_is_one_literal() {
        for n in 2..=4 {
            let sn = generate_sn(n).unwrap();
            let sehs = build_sehs(&sn.problem, &sn.grammar, None).unwrap();
            let leaves = partitioned_dnta(&sehs).unwrap();
            let pool = gstar_pool(&gstar_of(&sn.grammar), &leaves);
            assert_eq!(shown(&pool.literals), ["(P x (f y))"], "n={n}");
            assert!(pool.unifiable);
        }
    }

    #[test]
    fn small_examples() {
        let l = load(CROSSED);
        let pool = gstar_pool(&gstar_of(&l.pf.grammar), &l.leaves);
        assert_eq!(shown(&pool.literals), ["(P x y)", "(Q x y)"]);
        let l = load(NESTED);
        let sys = gstar_of(&l.pf.grammar);
        assert_eq!(shown(&gstar_pool(&sys, &l.leaves).literals), ["(P x y)"]);
        let union: BTreeSet<Literal> =
            l.leaves.iter().flat_map(|s| l.leaves.iter().flat_map(|t| mgul(&sys, s, t))).collect();
        assert_eq!(union, gstar_pool(&sys, &l.leaves).literals);
    }
}
