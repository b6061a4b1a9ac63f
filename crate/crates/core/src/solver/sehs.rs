use std::collections::BTreeSet;

use serde::Serialize;

use super::SolverError;
use crate::grammar::{beta_name, SchematicPi2Grammar, ALPHA};
use crate::herbrand::{check_grammar_fits, ExtendedHerbrandSequent, PrenexProblem};
use crate::logic::{Formula, Literal, Sequent, Term};

/// Schematic extended Herbrand sequent: a problem, a grammar whose tuples
/// instantiate it, and the reduced representation `F[U1] |- G[U2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sehs {
    pub problem: PrenexProblem,
    pub grammar: SchematicPi2Grammar,
    pub reduced: Sequent,
}

/// Which eigenvariables a literal mentions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LiteralClass {
    /// Contains `alpha`.
    Alpha,
    /// Contains some beta.
    Beta,
    /// Contains neither.
    Neutral,
}

pub fn classify(l: &Literal, m: usize) -> Result<LiteralClass, SolverError> {
    let vars = l.vars();
    let has_alpha = vars.contains(ALPHA);
    let has_beta = (1..=m).any(|j| vars.contains(&beta_name(j)));
    match (has_alpha, has_beta) {
        (true, true) => Err(SolverError::MixedAtom(l.atom.to_string())),
        (true, false) => Ok(LiteralClass::Alpha),
        (false, true) => Ok(LiteralClass::Beta),
        (false, false) => Ok(LiteralClass::Neutral),
    }
}

pub fn build_sehs(
    pb: &PrenexProblem,
    g: &SchematicPi2Grammar,
    terms: Option<&BTreeSet<Term>>,
) -> Result<Sehs, SolverError> {
    check_grammar_fits(pb, g)?;
    if let Some(terms) = terms {
        if !g.covers(terms)? {
            let lang = g.rigid_language()?;
            let missing: Vec<String> = terms.difference(&lang).map(|t| t.to_string()).collect();
            return Err(SolverError::CoverFailure(missing));
        }
    }
    let reduced = pb.midsequent(&g.f_tuples, &g.g_tuples)?;
    for a in reduced.atoms() {
        classify(&Literal::pos(a), g.m())?;
    }
    Ok(Sehs { problem: pb.clone(), grammar: g.clone(), reduced })
}

impl Sehs {
    pub fn m(&self) -> usize {
        self.grammar.m()
    }

    pub fn p(&self) -> usize {
        self.grammar.p()
    }

    /// The extended Herbrand sequent obtained by plugging in `matrix`.
    pub fn eh(&self, matrix: &Formula) -> Result<ExtendedHerbrandSequent, SolverError> {
        Ok(ExtendedHerbrandSequent::new(self.problem.clone(), self.grammar.clone(), matrix.clone())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::parse_problem;
    use crate::logic::syntax::{literal_from_str, VarScope};
    use crate::logic::Signature;
    use crate::testing::NESTED;

    #[test]
    fn classification() {
        let sig = Signature::new().with(&[("f", 1)], &[("P", 2)]);
        let c = |s: &str| classify(&literal_from_str(s, &sig, &VarScope::Any).unwrap(), 2);
        assert_eq!(c("(P alpha (f alpha))").unwrap(), LiteralClass::Alpha);
        assert_eq!(c("(not (P b2 b1))").unwrap(), LiteralClass::Beta);
        assert!(matches!(c("(P alpha b1)"), Err(SolverError::MixedAtom(_))));
    }

    #[test]
    fn cover_is_checked() {
        let pf = parse_problem(NESTED).unwrap();
        let h = pf.herbrand_terms.clone().unwrap();
        assert!(build_sehs(&pf.problem, &pf.grammar, Some(&h)).is_ok());
        let mut extra = h.clone();
        extra.insert(Term::app("hF", vec![Term::un("t2", Term::constant("r1"))]));
        match build_sehs(&pf.problem, &pf.grammar, Some(&extra)) {
            Err(SolverError::CoverFailure(missing)) => assert_eq!(missing, ["(hF (t2 r1))"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn alpha_on_the_right_is_rejected() {
        let mut pf = parse_problem(NESTED).unwrap();
        pf.grammar.g_tuples = vec![vec![crate::grammar::alpha(), crate::grammar::beta(2)]];
        assert!(build_sehs(&pf.problem, &pf.grammar, None).is_err());
    }
}
