use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::formula::{Atom, Formula};
use super::term::Substitution;
use super::LogicError;

/// Signed atom. Ordered by atom first so complementary pairs sit together.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Literal {
        Literal { atom, positive: true }
    }

    pub fn neg(atom: Atom) -> Literal {
        Literal { atom, positive: false }
    }

    pub fn dual(&self) -> Literal {
        Literal { atom: self.atom.clone(), positive: !self.positive }
    }

    pub fn substitute(&self, sigma: &Substitution) -> Literal {
        Literal { atom: self.atom.substitute(sigma), positive: self.positive }
    }

    pub fn to_formula(&self) -> Formula {
        let a = Formula::Atom(self.atom.clone());
        if self.positive {
            a
        } else {
            Formula::not(a)
        }
    }

    /// Accepts an atom or a negated atom.
    pub fn from_formula(f: &Formula) -> Result<Literal, LogicError> {
        match f {
            Formula::Atom(a) => Ok(Literal::pos(a.clone())),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Atom(a) => Ok(Literal::neg(a.clone())),
                _ => Err(LogicError::NotALiteral(f.to_string())),
            },
            _ => Err(LogicError::NotALiteral(f.to_string())),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.atom.vars()
    }

    pub fn contains_var(&self, v: &str) -> bool {
        self.atom.contains_var(v)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "(not {})", self.atom)
        }
    }
}

pub type Clause = BTreeSet<Literal>;
pub type ClauseSet = BTreeSet<Clause>;

pub fn dual_set<'a>(lits: impl IntoIterator<Item = &'a Literal>) -> BTreeSet<Literal> {
    lits.into_iter().map(Literal::dual).collect()
}

/// Sorts items by their printed form, the canonical order for anything
/// that ends up in output.
pub fn sorted_by_print<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> Vec<T> {
    let mut v: Vec<(String, T)> = items.into_iter().map(|x| (x.to_string(), x)).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v.into_iter().map(|(_, x)| x).collect()
}

pub fn clause_to_string(c: &Clause) -> String {
    let lits: Vec<String> = sorted_by_print(c.iter()).iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", lits.join(", "))
}

pub fn clause_set_to_string(cs: &ClauseSet) -> String {
    let mut parts: Vec<String> = cs.iter().map(clause_to_string).collect();
    parts.sort();
    format!("{{{}}}", parts.join(", "))
}

/// Disjunction of the conjunctions of the clauses, in printed order.
pub fn dnf_of(cs: &ClauseSet) -> Result<Formula, LogicError> {
    if cs.is_empty() {
        return Err(LogicError::EmptyClauseSet);
    }
    let mut disjuncts = Vec::new();
    for c in cs {
        if c.is_empty() {
            return Err(LogicError::EmptyClause);
        }
        let lits = sorted_by_print(c.iter().map(Literal::to_formula));
        disjuncts.push(Formula::and_all(lits).unwrap());
    }
    Ok(Formula::or_all(sorted_by_print(disjuncts)).unwrap())
}

/// Sequent with set semantics on both sides.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub ant: BTreeSet<Formula>,
    pub suc: BTreeSet<Formula>,
}

impl Sequent {
    pub fn new(ant: impl IntoIterator<Item = Formula>, suc: impl IntoIterator<Item = Formula>) -> Sequent {
        Sequent { ant: ant.into_iter().collect(), suc: suc.into_iter().collect() }
    }

    /// Some atomic formula occurs on both sides.
    pub fn is_axiom(&self) -> bool {
        self.ant.iter().any(|f| f.is_atomic() && self.suc.contains(f))
    }

    pub fn is_atomic(&self) -> bool {
        self.ant.iter().chain(self.suc.iter()).all(Formula::is_atomic)
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.ant.iter().chain(self.suc.iter()).all(Formula::is_quantifier_free)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in self.ant.iter().chain(self.suc.iter()) {
            f.collect_free_vars(&mut out);
        }
        out
    }

    pub fn has_free_var(&self, v: &str) -> bool {
        self.ant.iter().chain(self.suc.iter()).any(|f| f.has_free_var(v))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in self.ant.iter().chain(self.suc.iter()) {
            f.collect_atoms(&mut out);
        }
        out
    }

    pub fn side(&self, side: Side) -> &BTreeSet<Formula> {
        match side {
            Side::Ant => &self.ant,
            Side::Suc => &self.suc,
        }
    }

    pub fn side_mut(&mut self, side: Side) -> &mut BTreeSet<Formula> {
        match side {
            Side::Ant => &mut self.ant,
            Side::Suc => &mut self.suc,
        }
    }

    /// Symbol occurrences including sequent commas and the turnstile.
    pub fn symbol_count(&self) -> usize {
        let commas = self.ant.len().saturating_sub(1) + self.suc.len().saturating_sub(1);
        1 + commas + self.ant.iter().chain(self.suc.iter()).map(Formula::symbol_count).sum::<usize>()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ant: Vec<String> = sorted_by_print(self.ant.iter()).iter().map(|x| x.to_string()).collect();
        let suc: Vec<String> = sorted_by_print(self.suc.iter()).iter().map(|x| x.to_string()).collect();
        write!(f, "{} |- {}", ant.join(", "), suc.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    Ant,
    Suc,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Ant => "ant",
            Side::Suc => "suc",
        }
    }
}

/// Literal normal form of an atomic sequent: the negated succedent atoms
/// followed by the antecedent atoms, each part in printed order.
pub fn literal_normal_form(s: &Sequent) -> Result<Vec<Literal>, LogicError> {
    let atom_of = |f: &Formula| match f {
        Formula::Atom(a) => Ok(a.clone()),
        other => Err(LogicError::NotAtomic(other.to_string())),
    };
    let mut out = Vec::new();
    for f in sorted_by_print(s.suc.iter()) {
        out.push(Literal::neg(atom_of(f)?));
    }
    for f in sorted_by_print(s.ant.iter()) {
        out.push(Literal::pos(atom_of(f)?));
    }
    Ok(out)
}
