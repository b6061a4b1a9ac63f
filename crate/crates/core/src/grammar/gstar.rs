//! The rewrite system that abstracts leaf literals into cut-variable form.
//!
//! Universal rules rewrite `alpha` and each r-term to `x`; existential rules
//! rewrite each t-term and each beta to `y`. The start-symbol productions are
//! kept for completeness but never fire on literals.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::{alpha, GrammarError, SchematicPi2Grammar, F_WRAPPER, G_WRAPPER, X, Y};
use crate::logic::{Literal, Position, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CutVar {
    X,
    Y,
}

impl CutVar {
    pub fn term(self) -> Term {
        Term::var(match self {
            CutVar::X => X,
            CutVar::Y => Y,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RuleGroup {
    Universal,
    Existential,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteRule {
    pub lhs: Term,
    pub rhs: CutVar,
    pub group: RuleGroup,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs.term())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GStarSystem {
    /// Right-hand sides of the start symbol, wrapped.
    pub tau_productions: Vec<Term>,
    pub rules: Vec<RewriteRule>,
}

/// One rewrite step: position in the literal (argument index first) and rule index.
pub type RewriteStep = (Position, usize);

pub fn gstar_of(g: &SchematicPi2Grammar) -> GStarSystem {
    let mut rules = vec![RewriteRule { lhs: alpha(), rhs: CutVar::X, group: RuleGroup::Universal }];
    for r in &g.r_terms {
        rules.push(RewriteRule { lhs: r.clone(), rhs: CutVar::X, group: RuleGroup::Universal });
    }
    for t in &g.t_terms {
        rules.push(RewriteRule { lhs: t.clone(), rhs: CutVar::Y, group: RuleGroup::Existential });
    }
    for b in g.betas() {
        rules.push(RewriteRule { lhs: b, rhs: CutVar::Y, group: RuleGroup::Existential });
    }
    let mut seen = BTreeSet::new();
    rules.retain(|r| seen.insert((r.lhs.clone(), r.rhs)));
    let tau_productions = g
        .f_tuples
        .iter()
        .map(|t| Term::app(F_WRAPPER, t.clone()))
        .chain(g.g_tuples.iter().map(|t| Term::app(G_WRAPPER, t.clone())))
        .collect();
    GStarSystem { tau_productions, rules }
}

/// Symbol occurrences other than the cut variables. Every rewrite step
/// strictly decreases it, which bounds derivation length.
pub fn rewrite_measure(l: &Literal) -> usize {
    fn go(t: &Term) -> usize {
        match t {
            Term::Var(v) if v == X || v == Y => 0,
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(go).sum::<usize>(),
        }
    }
    l.atom.args.iter().map(go).sum()
}

fn literal_at<'a>(l: &'a Literal, pos: &[usize]) -> Option<&'a Term> {
    let (&i, rest) = pos.split_first()?;
    l.atom.args.get(i)?.subterm_at(rest)
}

fn replace_in_literal(l: &Literal, pos: &[usize], new: &Term) -> Option<Literal> {
    let (&i, rest) = pos.split_first()?;
    let mut out = l.clone();
    out.atom.args[i] = l.atom.args.get(i)?.replace_at(rest, new)?;
    Some(out)
}

impl GStarSystem {
    /// Every single-step rewrite of `l`.
    pub fn rewrite_once(&self, l: &Literal) -> Vec<(RewriteStep, Literal)> {
        let mut out = Vec::new();
        for (i, arg) in l.atom.args.iter().enumerate() {
            for p in arg.positions() {
                let sub = arg.subterm_at(&p).unwrap();
                for (k, rule) in self.rules.iter().enumerate() {
                    if &rule.lhs == sub {
                        let mut pos = vec![i];
                        pos.extend(&p);
                        let next = replace_in_literal(l, &pos, &rule.rhs.term()).unwrap();
                        debug_assert!(rewrite_measure(&next) < rewrite_measure(l));
                        out.push(((pos, k), next));
                    }
                }
            }
        }
        out
    }

    /// Replays a derivation, checking each step's redex.
    pub fn apply(&self, l: &Literal, steps: &[RewriteStep]) -> Result<Literal, GrammarError> {
        let mut cur = l.clone();
        for (n, (pos, k)) in steps.iter().enumerate() {
            let rule = self.rules.get(*k).ok_or(GrammarError::BadRewriteStep(n))?;
            if literal_at(&cur, pos) != Some(&rule.lhs) {
                return Err(GrammarError::BadRewriteStep(n));
            }
            cur = replace_in_literal(&cur, pos, &rule.rhs.term()).ok_or(GrammarError::BadRewriteStep(n))?;
        }
        Ok(cur)
    }

    /// Literals reachable from `l` (including `l`) whose variables are
    /// among the cut variables.
    pub fn reachable_literals(&self, l: &Literal) -> BTreeSet<Literal> {
        let mut seen: BTreeSet<Literal> = BTreeSet::new();
        let mut queue = VecDeque::from([l.clone()]);
        seen.insert(l.clone());
        while let Some(cur) = queue.pop_front() {
            for (_, next) in self.rewrite_once(&cur) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().filter(|m| m.vars().iter().all(|v| v == X || v == Y)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::beta;
    use crate::logic::Atom;

    fn grammar() -> SchematicPi2Grammar {
        // alpha -> c | f b1, t = (f1 alpha, f2 alpha)
        SchematicPi2Grammar {
            f_tuples: vec![vec![alpha()]],
            g_tuples: vec![vec![beta(1), beta(2)]],
            r_terms: vec![Term::constant("c"), Term::un("f", beta(1))],
            t_terms: vec![Term::un("f1", alpha()), Term::un("f2", alpha())],
        }
    }

    fn lit(pos: bool, a: Term, b: Term) -> Literal {
        Literal { atom: Atom::new("P", vec![a, b]), positive: pos }
    }

    #[test]
    fn rules_have_cut_variable_right_sides() {
        let sys = gstar_of(&grammar());
        assert_eq!(sys.rules.len(), 1 + 2 + 2 + 2);
        assert_eq!(sys.tau_productions.len(), 2);
        assert!(sys.rules.iter().all(|r| r.rhs.term().to_string() == "x" || r.rhs.term().to_string() == "y"));
    }

    #[test]
    fn reachable_from_nested_t_term() {
        let sys = gstar_of(&grammar());
        let l = lit(true, alpha(), Term::un("f", Term::un("f1", alpha())));
        let mut got: Vec<String> = sys.reachable_literals(&l).iter().map(|l| l.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["(P x (f (f1 x)))", "(P x (f y))"]);
    }

    #[test]
    fn ground_literal_without_redexes_reaches_itself() {
        let sys = gstar_of(&grammar());
        let l = lit(false, Term::constant("d"), Term::un("g", Term::constant("d")));
        assert_eq!(sys.reachable_literals(&l), BTreeSet::from([l]));
    }

    #[test]
    fn derivations_replay_and_reject_bad_steps() {
        let sys = gstar_of(&grammar());
        let l = lit(true, alpha(), Term::un("f1", alpha()));
        // rule 3 is f1 alpha -> y, rule 0 is alpha -> x
        let out = sys.apply(&l, &[(vec![1], 3), (vec![0], 0)]).unwrap();
        assert_eq!(out.to_string(), "(P x y)");
        assert_eq!(sys.apply(&l, &[(vec![1], 0)]), Err(GrammarError::BadRewriteStep(0)));
    }
}
