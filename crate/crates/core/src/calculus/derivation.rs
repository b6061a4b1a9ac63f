use std::collections::BTreeSet;

use super::rules::{apply_shape, propositional_rule, RuleLabel};
use super::sat::is_tautology;
use super::CalculusError;
use crate::logic::{Formula, Sequent, Side};

/// Tree of sequents; each inner node records its rule and principal formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTree {
    pub sequent: Sequent,
    pub rule: RuleLabel,
    pub principal: Option<(Side, Formula)>,
    pub premises: Vec<DerivationTree>,
}

impl DerivationTree {
    pub fn leaf(sequent: Sequent) -> DerivationTree {
        let rule = if sequent.is_axiom() { RuleLabel::Axiom } else { RuleLabel::NonTautLeaf };
        DerivationTree { sequent, rule, principal: None, premises: Vec::new() }
    }

    pub fn leaves(&self) -> Vec<&DerivationTree> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            if n.premises.is_empty() {
                out.push(n);
            }
            stack.extend(n.premises.iter().rev());
        }
        out
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(DerivationTree::node_count).sum::<usize>()
    }

    pub fn node_at(&self, path: &[usize]) -> Option<&DerivationTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get(i)?.node_at(rest),
        }
    }

    /// Pre-order walk with paths.
    pub fn visit(&self, f: &mut dyn FnMut(&[usize], &DerivationTree)) {
        fn go(n: &DerivationTree, path: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], &DerivationTree)) {
            f(path, n);
            for (i, p) in n.premises.iter().enumerate() {
                path.push(i);
                go(p, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f)
    }
}

/// Compound unquantified formulas of `s` with their printed form.
fn compound_candidates(s: &Sequent) -> Vec<(String, Side, &Formula)> {
    s.ant
        .iter()
        .map(|f| (Side::Ant, f))
        .chain(s.suc.iter().map(|f| (Side::Suc, f)))
        .filter(|(_, f)| !f.is_atomic() && !f.is_quantified())
        .map(|(side, f)| (f.to_string(), side, f))
        .collect()
}

/// Applies `rule` to the selected formula and builds the premises recursively.
fn expand(
    s: Sequent,
    choose: &mut dyn FnMut(&[(Side, &Formula)]) -> usize,
    stop_at_axiom: bool,
) -> Result<DerivationTree, CalculusError> {
    if stop_at_axiom && s.is_axiom() {
        return Ok(DerivationTree::leaf(s));
    }
    let mut cands = compound_candidates(&s);
    if cands.is_empty() {
        return Ok(DerivationTree::leaf(s));
    }
    cands.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    let view: Vec<(Side, &Formula)> = cands.iter().map(|(_, side, f)| (*side, *f)).collect();
    let k = choose(&view);
    let (side, principal) = (view[k].0, view[k].1.clone());
    let (rule, shapes) = propositional_rule(side, &principal).expect("compound formula");
    let premises = shapes
        .iter()
        .map(|sh| expand(apply_shape(&s, Some((side, &principal)), sh), choose, stop_at_axiom))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DerivationTree { sequent: s, rule, principal: Some((side, principal)), premises })
}

fn require_qf(s: &Sequent) -> Result<(), CalculusError> {
    if s.is_quantifier_free() {
        Ok(())
    } else {
        Err(CalculusError::NotQuantifierFree(s.to_string()))
    }
}

/// Exhaustive decomposition, always taking the canonically least compound formula.
pub fn maximal_derivation(s: &Sequent) -> Result<DerivationTree, CalculusError> {
    maximal_derivation_with(s, &mut |_| 0)
}

/// Same, with a caller-supplied choice among the compound formulas (given in
/// canonical order). Leaves do not depend on the choice up to set equality.
pub fn maximal_derivation_with(
    s: &Sequent,
    choose: &mut dyn FnMut(&[(Side, &Formula)]) -> usize,
) -> Result<DerivationTree, CalculusError> {
    require_qf(s)?;
    expand(s.clone(), choose, false)
}

/// Drops formulas from a valid sequent while it stays valid.
fn shrink_core(mut core: Sequent) -> Sequent {
    for (side, f) in
        core.ant.clone().into_iter().map(|f| (Side::Ant, f)).chain(core.suc.clone().into_iter().map(|f| (Side::Suc, f)))
    {
        core.side_mut(side).remove(&f);
        if !is_tautology(&core) {
            core.side_mut(side).insert(f);
        }
    }
    core
}

/// Decomposes only formulas of `core`, a valid part of `s`; everything else
/// rides along as context. One-premise rules go first, and the core is
/// shrunk before each branching rule.
fn expand_core(s: Sequent, mut core: Sequent) -> DerivationTree {
    if s.is_axiom() {
        return DerivationTree::leaf(s);
    }
    let pick = |core: &Sequent, branching: bool| {
        let mut cands = compound_candidates(core);
        cands.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        cands
            .into_iter()
            .map(|(_, side, f)| (side, f.clone()))
            .find(|(side, f)| propositional_rule(*side, f).is_some_and(|(_, shapes)| (shapes.len() > 1) == branching))
    };
    let chosen = match pick(&core, false) {
        Some(c) => c,
        None => {
            core = shrink_core(core);
            pick(&core, true).expect("a valid non-axiom core has a compound formula")
        }
    };
    let (side, principal) = chosen;
    let (rule, shapes) = propositional_rule(side, &principal).expect("compound formula");
    let premises = shapes
        .iter()
        .map(|sh| {
            let at = Some((side, &principal));
            expand_core(apply_shape(&s, at, sh), apply_shape(&core, at, sh))
        })
        .collect();
    DerivationTree { sequent: s, rule, principal: Some((side, principal)), premises }
}

/// Propositional proof of a valid sequent. Quantified formulas are carried
/// along untouched, and so is whatever the proof does not need.
pub fn propositional_proof(s: &Sequent) -> Result<DerivationTree, CalculusError> {
    if !is_tautology(s) {
        let d = expand(s.clone(), &mut |_| 0, true)?;
        let open = d.leaves().into_iter().find(|l| l.rule == RuleLabel::NonTautLeaf).map(|l| l.sequent.to_string());
        return Err(CalculusError::NonTautological(open.unwrap_or_else(|| s.to_string())));
    }
    Ok(expand_core(s.clone(), s.clone()))
}

pub fn non_tautological_leaves(d: &DerivationTree) -> BTreeSet<Sequent> {
    d.leaves().into_iter().filter(|l| !l.sequent.is_axiom()).map(|l| l.sequent.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Term;

    fn a(n: &str) -> Formula {
        Formula::atom("P", vec![Term::constant(n)])
    }

    #[test]
    fn leaves_are_atomic_and_labelled() {
        // A v B |- A & B
        let s = Sequent::new([Formula::or(a("a"), a("b"))], [Formula::and(a("a"), a("b"))]);
        let d = maximal_derivation(&s).unwrap();
        let leaves = d.leaves();
        assert_eq!(leaves.len(), 4);
        assert!(leaves.iter().all(|l| l.sequent.is_atomic()));
        assert_eq!(non_tautological_leaves(&d).len(), 2);
        assert_eq!(leaves.iter().filter(|l| l.rule == RuleLabel::Axiom).count(), 2);
    }

    #[test]
    fn quantified_input_rejected() {
        let s = Sequent::new([Formula::forall("u", a("a"))], []);
        assert!(matches!(maximal_derivation(&s), Err(CalculusError::NotQuantifierFree(_))));
    }

    #[test]
    fn propositional_proof_closes_early() {
        let s = Sequent::new([a("a"), Formula::or(a("b"), a("c"))], [a("a")]);
        let d = propositional_proof(&s).unwrap();
        assert_eq!(d.node_count(), 1);
        let bad = Sequent::new([a("b")], [a("a")]);
        assert!(propositional_proof(&bad).is_err());
    }
}
