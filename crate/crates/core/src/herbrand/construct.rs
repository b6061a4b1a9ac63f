//! Proof construction from Herbrand sequents, with and without one cut.
//!
//! Quantifier blocks are instantiated along a trie of the instance tuples,
//! so a shared prefix costs one inference.

use std::collections::BTreeMap;

use super::{ExtendedHerbrandSequent, HerbrandError, HerbrandInstanceSet, PrenexProblem};
use crate::calculus::{
    apply_shape, is_tautology, premise_shapes, propositional_proof, DerivationTree, Proof, RuleLabel,
};
use crate::grammar::{beta_name, ALPHA};
use crate::logic::{Formula, Sequent, Side, Substitution, Term};

type Step = (RuleLabel, Side, Formula);

/// Trie instantiation of a quantifier block on `side`.
fn block_steps(side: Side, block: &Formula, tuples: &[Vec<Term>], out: &mut Vec<Step>) -> Result<(), HerbrandError> {
    if tuples.first().is_none_or(|t| t.is_empty()) {
        return Ok(());
    }
    let (v, body) = match block {
        Formula::Forall(v, b) | Formula::Exists(v, b) => (v, b),
        other => return Err(HerbrandError::Invalid(format!("{other} is not quantified"))),
    };
    let mut groups: BTreeMap<&Term, Vec<Vec<Term>>> = BTreeMap::new();
    for t in tuples {
        groups.entry(&t[0]).or_default().push(t[1..].to_vec());
    }
    for (t, rest) in groups {
        let label = match side {
            Side::Ant => RuleLabel::ForallL(t.clone()),
            Side::Suc => RuleLabel::ExistsR(t.clone()),
        };
        out.push((label, side, block.clone()));
        let inst = body.substitute(&Substitution::single(v.clone(), t.clone()))?;
        block_steps(side, &inst, &rest, out)?;
    }
    Ok(())
}

/// Number of inferences a trie instantiation of `tuples` takes.
pub fn trie_size(tuples: &[Vec<Term>]) -> usize {
    let mut prefixes = std::collections::BTreeSet::new();
    for t in tuples {
        for i in 1..=t.len() {
            prefixes.insert(&t[..i]);
        }
    }
    prefixes.len()
}

/// Applies `steps` bottom-up from `start` and closes the top propositionally.
fn chain(start: Sequent, steps: Vec<Step>) -> Result<DerivationTree, HerbrandError> {
    let mut seqs = vec![start];
    for (rule, side, f) in &steps {
        let shapes =
            premise_shapes(rule, Some(f)).map_err(|_| HerbrandError::Invalid(format!("cannot apply {rule}")))?;
        let next = apply_shape(seqs.last().unwrap(), Some((*side, f)), &shapes[0]);
        seqs.push(next);
    }
    let mut node = propositional_proof(seqs.last().unwrap())?;
    for ((rule, side, f), s) in steps.into_iter().zip(seqs).rev() {
        node = DerivationTree { sequent: s, rule, principal: Some((side, f)), premises: vec![node] };
    }
    Ok(node)
}

fn dedup(tuples: &[Vec<Term>]) -> Vec<Vec<Term>> {
    let set: std::collections::BTreeSet<&Vec<Term>> = tuples.iter().collect();
    set.into_iter().cloned().collect()
}

/// Cut-free proof of the end-sequent from a valid instance set.
pub fn proof_from_herbrand(pb: &PrenexProblem, inst: &HerbrandInstanceSet) -> Result<Proof, HerbrandError> {
    let (f, g) = (dedup(&inst.f_tuples), dedup(&inst.g_tuples));
    let mid = pb.midsequent(&f, &g)?;
    if !is_tautology(&mid) {
        return Err(HerbrandError::NotTautology(mid.to_string()));
    }
    let mut steps = Vec::new();
    block_steps(Side::Ant, &pb.forall_closure(), &f, &mut steps)?;
    block_steps(Side::Suc, &pb.exists_closure(), &g, &mut steps)?;
    Ok(Proof::new(chain(pb.end_sequent(), steps)?))
}

/// Proof with one cut on `forall x exists y. A` from a tautological
/// extended Herbrand sequent.
///
/// The left branch introduces `alpha` and the t-instances of the cut, the
/// right branch the r-instances with fresh betas. Each branch instantiates
/// the end-sequent block on its own side, and the other block only when
/// the branch needs it.
pub fn proof_from_eh(eh: &ExtendedHerbrandSequent) -> Result<Proof, HerbrandError> {
    let pb = &eh.problem;
    let (u1, u2) = (dedup(&eh.grammar.f_tuples), dedup(&eh.grammar.g_tuples));
    let f_inst = eh.antecedent_instances()?;
    let g_inst = eh.succedent_instances()?;
    let cut = eh.cut_formula();
    let end = pb.end_sequent();

    // left: ... |- ..., forall x exists y. A
    let left_alone = is_tautology(&Sequent::new(f_inst.clone(), eh.left_instances()));
    let left_full = Sequent::new(f_inst.clone(), eh.left_instances().into_iter().chain(g_inst.clone()));
    if !left_alone && !is_tautology(&left_full) {
        return Err(HerbrandError::NotTautology(left_full.to_string()));
    }
    let Formula::Forall(_, ex) = &cut else { unreachable!() };
    let ex_alpha = ex.substitute(&Substitution::single(crate::grammar::X, Term::var(ALPHA)))?;
    let mut steps: Vec<Step> = vec![(RuleLabel::ForallR(ALPHA.into()), Side::Suc, cut.clone())];
    for t in &eh.grammar.t_terms {
        steps.push((RuleLabel::ExistsR(t.clone()), Side::Suc, ex_alpha.clone()));
    }
    block_steps(Side::Ant, &pb.forall_closure(), &u1, &mut steps)?;
    if !left_alone {
        block_steps(Side::Suc, &pb.exists_closure(), &u2, &mut steps)?;
    }
    let mut left_start = end.clone();
    left_start.suc.insert(cut.clone());
    let left = chain(left_start, steps)?;

    // right: forall x exists y. A, ... |- ...
    let right_alone = is_tautology(&Sequent::new(eh.right_instances(), g_inst.clone()));
    let right_full = Sequent::new(eh.right_instances().into_iter().chain(f_inst), g_inst);
    if !right_alone && !is_tautology(&right_full) {
        return Err(HerbrandError::NotTautology(right_full.to_string()));
    }
    let mut steps: Vec<Step> = Vec::new();
    for (j, r) in eh.grammar.r_terms.iter().enumerate() {
        let ex_r = ex.substitute(&Substitution::single(crate::grammar::X, r.clone()))?;
        steps.push((RuleLabel::ForallL(r.clone()), Side::Ant, cut.clone()));
        steps.push((RuleLabel::ExistsL(beta_name(j + 1)), Side::Ant, ex_r));
    }
    block_steps(Side::Suc, &pb.exists_closure(), &u2, &mut steps)?;
    if !right_alone {
        block_steps(Side::Ant, &pb.forall_closure(), &u1, &mut steps)?;
    }
    let mut right_start = end.clone();
    right_start.ant.insert(cut.clone());
    let right = chain(right_start, steps)?;

    Ok(Proof::new(DerivationTree {
        sequent: end,
        rule: RuleLabel::Cut(cut),
        principal: None,
        premises: vec![left, right],
    }))
}
