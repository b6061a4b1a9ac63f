use std::fmt;

use serde::Serialize;

use super::derivation::DerivationTree;
use super::rules::{apply_shape, premise_shapes, RuleLabel, ShapeError};
use crate::logic::{Formula, LogicError};

/// A derivation meant to be a proof: every leaf must be an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub root: DerivationTree,
}

impl Proof {
    pub fn new(root: DerivationTree) -> Proof {
        Proof { root }
    }

    pub fn cut_formulas(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        self.root.visit(&mut |_, n| {
            if let RuleLabel::Cut(c) = &n.rule {
                out.push(c.clone());
            }
        });
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckFailure {
    OpenLeaf,
    NotAnAxiom,
    MissingPrincipal,
    PrincipalNotInSequent,
    PrincipalMismatch,
    WrongPremiseCount { expected: usize, found: usize },
    PremiseMismatch { index: usize },
    EigenvariableNotFresh(String),
    Substitution(LogicError),
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::OpenLeaf => f.write_str("leaf is marked non-tautological"),
            CheckFailure::NotAnAxiom => f.write_str("leaf shares no atom between its sides"),
            CheckFailure::MissingPrincipal => f.write_str("rule needs a principal formula"),
            CheckFailure::PrincipalNotInSequent => f.write_str("principal formula is not in the conclusion"),
            CheckFailure::PrincipalMismatch => f.write_str("principal formula does not fit the rule"),
            CheckFailure::WrongPremiseCount { expected, found } => {
                write!(f, "rule has {expected} premise(s), node has {found}")
            }
            CheckFailure::PremiseMismatch { index } => {
                write!(f, "premise {index} is not the rule's premise")
            }
            CheckFailure::EigenvariableNotFresh(v) => {
                write!(f, "eigenvariable {v} occurs in the conclusion")
            }
            CheckFailure::Substitution(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckError {
    /// Premise indices from the root to the offending node.
    pub path: Vec<usize>,
    pub failure: CheckFailure,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {:?}: {}", self.path, self.failure)
    }
}

impl std::error::Error for CheckError {}

fn check_node(n: &DerivationTree) -> Result<(), CheckFailure> {
    match &n.rule {
        RuleLabel::NonTautLeaf => return Err(CheckFailure::OpenLeaf),
        RuleLabel::Axiom => {
            if !n.premises.is_empty() {
                return Err(CheckFailure::WrongPremiseCount { expected: 0, found: n.premises.len() });
            }
            return if n.sequent.is_axiom() { Ok(()) } else { Err(CheckFailure::NotAnAxiom) };
        }
        _ => {}
    }
    let principal = match (&n.rule, &n.principal) {
        (RuleLabel::Cut(_), _) => None,
        (rule, Some((side, f))) => {
            if rule.principal_side() != Some(*side) {
                return Err(CheckFailure::PrincipalMismatch);
            }
            if !n.sequent.side(*side).contains(f) {
                return Err(CheckFailure::PrincipalNotInSequent);
            }
            Some((*side, f))
        }
        (_, None) => return Err(CheckFailure::MissingPrincipal),
    };
    if let RuleLabel::ForallR(v) | RuleLabel::ExistsL(v) = &n.rule {
        if n.sequent.has_free_var(v) {
            return Err(CheckFailure::EigenvariableNotFresh(v.clone()));
        }
    }
    let shapes = premise_shapes(&n.rule, principal.map(|p| p.1)).map_err(|e| match e {
        ShapeError::PrincipalMismatch => CheckFailure::PrincipalMismatch,
        ShapeError::Logic(e) => CheckFailure::Substitution(e),
    })?;
    if shapes.len() != n.premises.len() {
        return Err(CheckFailure::WrongPremiseCount { expected: shapes.len(), found: n.premises.len() });
    }
    for (i, (sh, prem)) in shapes.iter().zip(&n.premises).enumerate() {
        if apply_shape(&n.sequent, principal, sh) != prem.sequent {
            return Err(CheckFailure::PremiseMismatch { index: i });
        }
    }
    Ok(())
}

/// Kernel check: rule shapes, axiom leaves, eigenvariable conditions and
/// cut-formula agreement between the two cut premises.
pub fn check_proof(p: &Proof) -> Result<(), CheckError> {
    let mut err = None;
    p.root.visit(&mut |path, n| {
        if err.is_none() {
            if let Err(failure) = check_node(n) {
                err = Some(CheckError { path: path.to_vec(), failure });
            }
        }
    });
    err.map_or(Ok(()), Err)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Complexity {
    /// Weak quantifier inferences.
    pub quantifier: usize,
    /// Inferences.
    pub logical: usize,
    /// Inferences plus symbol occurrences of all sequents.
    pub symbolic: usize,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} l={} s={}", self.quantifier, self.logical, self.symbolic)
    }
}

pub fn complexities(d: &DerivationTree) -> Complexity {
    let mut c = Complexity::default();
    d.visit(&mut |_, n| {
        if !n.rule.is_leaf() {
            c.logical += 1;
        }
        if n.rule.is_weak_quantifier() {
            c.quantifier += 1;
        }
        c.symbolic += n.sequent.symbol_count();
    });
    c.symbolic += c.logical;
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{Sequent, Side, Term};

    fn pa() -> Formula {
        Formula::atom("P", vec![Term::var("a")])
    }

    fn axiom(s: Sequent) -> DerivationTree {
        DerivationTree { sequent: s, rule: RuleLabel::Axiom, principal: None, premises: vec![] }
    }

    #[test]
    fn forall_right_eigenvariable_condition() {
        // P(a) |- forall u. P(u) with eigenvariable a is unsound
        let fa = Formula::forall("u", Formula::atom("P", vec![Term::var("u")]));
        let bad = DerivationTree {
            sequent: Sequent::new([pa()], [fa.clone()]),
            rule: RuleLabel::ForallR("a".into()),
            principal: Some((Side::Suc, fa.clone())),
            premises: vec![axiom(Sequent::new([pa()], [pa()]))],
        };
        let err = check_proof(&Proof::new(bad)).unwrap_err();
        assert_eq!(err.failure, CheckFailure::EigenvariableNotFresh("a".into()));
    }

    #[test]
    fn forall_left_keeps_principal() {
        let fa = Formula::forall("u", Formula::atom("P", vec![Term::var("u")]));
        let ok = DerivationTree {
            sequent: Sequent::new([fa.clone()], [pa()]),
            rule: RuleLabel::ForallL(Term::var("a")),
            principal: Some((Side::Ant, fa.clone())),
            premises: vec![axiom(Sequent::new([fa.clone(), pa()], [pa()]))],
        };
        let p = Proof::new(ok.clone());
        assert_eq!(check_proof(&p), Ok(()));
        let c = complexities(&p.root);
        assert_eq!((c.quantifier, c.logical), (1, 1));
        assert!(c.quantifier <= c.logical && c.logical <= c.symbolic);

        let mut dropped = ok;
        dropped.premises[0].sequent.ant.remove(&fa);
        let err = check_proof(&Proof::new(dropped)).unwrap_err();
        assert_eq!(err.failure, CheckFailure::PremiseMismatch { index: 0 });
    }

    #[test]
    fn cut_premises_must_agree() {
        let s = Sequent::new([pa()], [pa()]);
        let c = Formula::atom("Q", vec![]);
        let mut left = s.clone();
        left.suc.insert(c.clone());
        let mut right = s.clone();
        right.ant.insert(Formula::atom("R", vec![]));
        let n = DerivationTree {
            sequent: s,
            rule: RuleLabel::Cut(c),
            principal: None,
            premises: vec![axiom(left), axiom(right)],
        };
        let err = check_proof(&Proof::new(n)).unwrap_err();
        assert_eq!(err.failure, CheckFailure::PremiseMismatch { index: 1 });
    }
}
