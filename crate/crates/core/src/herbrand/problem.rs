use std::collections::BTreeSet;

use serde::Serialize;

use super::HerbrandError;
use crate::calculus::is_tautology;
use crate::grammar::{F_WRAPPER, G_WRAPPER};
use crate::logic::{is_reserved, sharp_count, Formula, Sequent, Signature, Substitution, Term};

/// End-sequent `forall xs. F |- exists ys. G` with quantifier-free matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrenexProblem {
    pub signature: Signature,
    pub forall_vars: Vec<String>,
    pub exists_vars: Vec<String>,
    pub antecedent: Formula,
    pub succedent: Formula,
}

fn check_vars(sig: &Signature, vars: &[String], seen: &mut BTreeSet<String>) -> Result<(), HerbrandError> {
    for v in vars {
        if is_reserved(v) {
            return Err(HerbrandError::Invalid(format!("variable '{v}' uses a reserved name")));
        }
        if sig.functions.contains_key(v) || sig.predicates.contains_key(v) {
            return Err(HerbrandError::Invalid(format!("variable '{v}' is also a signature symbol")));
        }
        if !seen.insert(v.clone()) {
            return Err(HerbrandError::Invalid(format!("variable '{v}' is declared twice")));
        }
    }
    Ok(())
}

impl PrenexProblem {
    pub fn new(
        signature: Signature,
        forall_vars: Vec<String>,
        exists_vars: Vec<String>,
        antecedent: Formula,
        succedent: Formula,
    ) -> Result<PrenexProblem, HerbrandError> {
        let mut seen = BTreeSet::new();
        check_vars(&signature, &forall_vars, &mut seen)?;
        check_vars(&signature, &exists_vars, &mut seen)?;
        for (name, f, vars) in [("antecedent", &antecedent, &forall_vars), ("succedent", &succedent, &exists_vars)] {
            if !f.is_quantifier_free() {
                return Err(HerbrandError::Invalid(format!("{name} matrix must be quantifier-free")));
            }
            signature.check_formula(f)?;
            if let Some(v) = f.free_vars().into_iter().find(|v| !vars.contains(v)) {
                return Err(HerbrandError::Invalid(format!("{name} matrix has undeclared variable '{v}'")));
            }
        }
        Ok(PrenexProblem { signature, forall_vars, exists_vars, antecedent, succedent })
    }

    pub fn k(&self) -> usize {
        self.forall_vars.len()
    }

    pub fn l(&self) -> usize {
        self.exists_vars.len()
    }

    pub fn forall_closure(&self) -> Formula {
        Formula::forall_block(&self.forall_vars, self.antecedent.clone())
    }

    pub fn exists_closure(&self) -> Formula {
        Formula::exists_block(&self.exists_vars, self.succedent.clone())
    }

    pub fn end_sequent(&self) -> Sequent {
        Sequent::new([self.forall_closure()], [self.exists_closure()])
    }

    fn instantiate(&self, f: &Formula, vars: &[String], tuple: &[Term]) -> Result<Formula, HerbrandError> {
        if tuple.len() != vars.len() {
            return Err(HerbrandError::TupleLength { expected: vars.len(), found: tuple.len() });
        }
        for t in tuple {
            self.signature.check_term(t)?;
        }
        let s = Substitution::from_pairs(vars.iter().cloned().zip(tuple.iter().cloned()));
        Ok(f.substitute(&s)?)
    }

    pub fn instantiate_antecedent(&self, tuple: &[Term]) -> Result<Formula, HerbrandError> {
        self.instantiate(&self.antecedent, &self.forall_vars, tuple)
    }

    pub fn instantiate_succedent(&self, tuple: &[Term]) -> Result<Formula, HerbrandError> {
        self.instantiate(&self.succedent, &self.exists_vars, tuple)
    }

    /// `F[U1] |- G[U2]`.
    pub fn midsequent(&self, f_tuples: &[Vec<Term>], g_tuples: &[Vec<Term>]) -> Result<Sequent, HerbrandError> {
        let ant = f_tuples.iter().map(|t| self.instantiate_antecedent(t)).collect::<Result<Vec<_>, _>>()?;
        let suc = g_tuples.iter().map(|t| self.instantiate_succedent(t)).collect::<Result<Vec<_>, _>>()?;
        Ok(Sequent::new(ant, suc))
    }
}

/// Instance tuples for the antecedent and succedent quantifier blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HerbrandInstanceSet {
    pub f_tuples: Vec<Vec<Term>>,
    pub g_tuples: Vec<Vec<Term>>,
}

impl HerbrandInstanceSet {
    /// Wrapped term set `{hF(t..)} ∪ {hG(s..)}`.
    pub fn term_set(&self) -> BTreeSet<Term> {
        self.f_tuples
            .iter()
            .map(|t| Term::app(F_WRAPPER, t.clone()))
            .chain(self.g_tuples.iter().map(|t| Term::app(G_WRAPPER, t.clone())))
            .collect()
    }

    /// Inverse of [`term_set`](Self::term_set).
    pub fn from_term_set(terms: &BTreeSet<Term>) -> Result<HerbrandInstanceSet, HerbrandError> {
        let mut out = HerbrandInstanceSet::default();
        for t in terms {
            match t {
                Term::App(w, args) if w == F_WRAPPER => out.f_tuples.push(args.clone()),
                Term::App(w, args) if w == G_WRAPPER => out.g_tuples.push(args.clone()),
                other => return Err(HerbrandError::Invalid(format!("{other} is not a wrapped instance tuple"))),
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HerbrandCheck {
    pub valid: bool,
    /// Tuple-sharing count of both instance sets.
    pub complexity: usize,
}

pub fn herbrand_check(pb: &PrenexProblem, inst: &HerbrandInstanceSet) -> Result<HerbrandCheck, HerbrandError> {
    let f: BTreeSet<&Vec<Term>> = inst.f_tuples.iter().collect();
    let g: BTreeSet<&Vec<Term>> = inst.g_tuples.iter().collect();
    let f: Vec<Vec<Term>> = f.into_iter().cloned().collect();
    let g: Vec<Vec<Term>> = g.into_iter().cloned().collect();
    let mid = pb.midsequent(&f, &g)?;
    let complexity = sharp_count(&f)? + sharp_count(&g)?;
    Ok(HerbrandCheck { valid: is_tautology(&mid), complexity })
}
