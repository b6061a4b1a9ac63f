use serde::Serialize;

use super::{HerbrandError, PrenexProblem};
use crate::calculus::is_tautology;
use crate::grammar::{alpha, beta, SchematicPi2Grammar, X, Y};
use crate::logic::{Formula, Sequent, Substitution, Term};

/// Herbrand sequent extended by one universal-existential cut:
/// `F[U1], (A[alpha,t_1] v .. v A[alpha,t_p]) -> (A[r_1,b_1] & .. & A[r_m,b_m]) |- G[U2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedHerbrandSequent {
    pub problem: PrenexProblem,
    pub grammar: SchematicPi2Grammar,
    /// Quantifier-free cut matrix in the cut variables `x` and `y`.
    pub cut_matrix: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhReport {
    #[serde(serialize_with = "crate::report::display")]
    pub sequent: Sequent,
    pub tautology: bool,
    pub complexity: usize,
}

pub fn cut_instance(matrix: &Formula, xv: &Term, yv: &Term) -> Formula {
    let s = Substitution::from_pairs([(X, xv.clone()), (Y, yv.clone())]);
    matrix.substitute(&s).expect("cut matrix is quantifier-free")
}

/// The grammar is valid over the problem's signature and its tuples have
/// the lengths of the two quantifier blocks.
pub fn check_grammar_fits(problem: &PrenexProblem, grammar: &SchematicPi2Grammar) -> Result<(), HerbrandError> {
    let rep = grammar.validate(Some(&problem.signature), false);
    if !rep.is_ok() {
        return Err(HerbrandError::Grammar(crate::grammar::GrammarError::Invalid(rep.violations)));
    }
    for t in &grammar.f_tuples {
        if t.len() != problem.k() {
            return Err(HerbrandError::TupleLength { expected: problem.k(), found: t.len() });
        }
    }
    for t in &grammar.g_tuples {
        if t.len() != problem.l() {
            return Err(HerbrandError::TupleLength { expected: problem.l(), found: t.len() });
        }
    }
    Ok(())
}

impl ExtendedHerbrandSequent {
    pub fn new(
        problem: PrenexProblem,
        grammar: SchematicPi2Grammar,
        cut_matrix: Formula,
    ) -> Result<ExtendedHerbrandSequent, HerbrandError> {
        if !cut_matrix.is_quantifier_free() {
            return Err(HerbrandError::Invalid("cut matrix must be quantifier-free".into()));
        }
        if let Some(v) = cut_matrix.free_vars().into_iter().find(|v| v != X && v != Y) {
            return Err(HerbrandError::Invalid(format!("cut matrix has variable '{v}' besides x and y")));
        }
        problem.signature.check_formula(&cut_matrix)?;
        check_grammar_fits(&problem, &grammar)?;
        Ok(ExtendedHerbrandSequent { problem, grammar, cut_matrix })
    }

    /// `forall x exists y. A`.
    pub fn cut_formula(&self) -> Formula {
        Formula::forall(X, Formula::exists(Y, self.cut_matrix.clone()))
    }

    /// `A[alpha, t_i]` for each t-term.
    pub fn left_instances(&self) -> Vec<Formula> {
        self.grammar.t_terms.iter().map(|t| cut_instance(&self.cut_matrix, &alpha(), t)).collect()
    }

    /// `A[r_j, b_j]` for each r-term.
    pub fn right_instances(&self) -> Vec<Formula> {
        self.grammar.r_terms.iter().enumerate().map(|(j, r)| cut_instance(&self.cut_matrix, r, &beta(j + 1))).collect()
    }

    pub fn antecedent_instances(&self) -> Result<Vec<Formula>, HerbrandError> {
        self.grammar.f_tuples.iter().map(|t| self.problem.instantiate_antecedent(t)).collect()
    }

    pub fn succedent_instances(&self) -> Result<Vec<Formula>, HerbrandError> {
        self.grammar.g_tuples.iter().map(|t| self.problem.instantiate_succedent(t)).collect()
    }

    /// `k·|U1| + l·|U2| + p + m`.
    pub fn complexity(&self) -> usize {
        self.problem.k() * self.grammar.f_tuples.len()
            + self.problem.l() * self.grammar.g_tuples.len()
            + self.grammar.p()
            + self.grammar.m()
    }

    pub fn sequent(&self) -> Result<Sequent, HerbrandError> {
        let cut = Formula::imp(
            Formula::or_all(self.left_instances()).expect("p >= 1"),
            Formula::and_all(self.right_instances()).expect("m >= 1"),
        );
        let mut ant = self.antecedent_instances()?;
        ant.push(cut);
        Ok(Sequent::new(ant, self.succedent_instances()?))
    }
}

pub fn eh_build(eh: &ExtendedHerbrandSequent) -> Result<EhReport, HerbrandError> {
    let sequent = eh.sequent()?;
    Ok(EhReport { tautology: is_tautology(&sequent), complexity: eh.complexity(), sequent })
}
