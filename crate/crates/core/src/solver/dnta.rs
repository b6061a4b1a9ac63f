use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::sehs::{classify, LiteralClass, Sehs};
use super::SolverError;
use crate::calculus::{maximal_derivation, non_tautological_leaves};
use crate::logic::{dual_set, literal_normal_form, sorted_by_print, Literal};

/// A non-tautological leaf in literal normal form, split by which
/// eigenvariables each literal mentions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PartitionedLeaf {
    #[serde(serialize_with = "crate::report::display_sorted")]
    pub a: BTreeSet<Literal>,
    #[serde(serialize_with = "crate::report::display_sorted")]
    pub b: BTreeSet<Literal>,
    #[serde(serialize_with = "crate::report::display_sorted")]
    pub n: BTreeSet<Literal>,
}

impl PartitionedLeaf {
    pub fn from_literals(lits: impl IntoIterator<Item = Literal>, m: usize) -> Result<PartitionedLeaf, SolverError> {
        let mut leaf = PartitionedLeaf::default();
        for l in lits {
            match classify(&l, m)? {
                LiteralClass::Alpha => leaf.a.insert(l),
                LiteralClass::Beta => leaf.b.insert(l),
                LiteralClass::Neutral => leaf.n.insert(l),
            };
        }
        Ok(leaf)
    }

    pub fn literals(&self) -> BTreeSet<Literal> {
        self.a.iter().chain(&self.b).chain(&self.n).cloned().collect()
    }

    pub fn dual_b(&self) -> BTreeSet<Literal> {
        dual_set(&self.b)
    }

    pub fn dual_n(&self) -> BTreeSet<Literal> {
        dual_set(&self.n)
    }
}

impl fmt::Display for PartitionedLeaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |s: &BTreeSet<Literal>| {
            sorted_by_print(s.iter()).iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        };
        write!(f, "A[{}] B[{}] N[{}]", part(&self.a), part(&self.b), part(&self.n))
    }
}

/// Non-tautological leaves of the maximal derivation of the reduced
/// representation, partitioned.
pub fn partitioned_dnta(sehs: &Sehs) -> Result<Vec<PartitionedLeaf>, SolverError> {
    let d = maximal_derivation(&sehs.reduced)?;
    let mut out = BTreeSet::new();
    for leaf in non_tautological_leaves(&d) {
        out.insert(PartitionedLeaf::from_literals(literal_normal_form(&leaf)?, sehs.m())?);
    }
    Ok(out.into_iter().collect())
}
