use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::term::{Substitution, Term};
use super::LogicError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Atom {
    pub pred: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: impl Into<String>, args: Vec<Term>) -> Atom {
        Atom { pred: pred.into(), args }
    }

    pub fn substitute(&self, sigma: &Substitution) -> Atom {
        Atom { pred: self.pred.clone(), args: self.args.iter().map(|a| a.substitute(sigma)).collect() }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        self.args.iter().for_each(|a| a.collect_vars(out));
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn contains_var(&self, v: &str) -> bool {
        self.args.iter().any(|a| a.contains_var(v))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            return f.write_str(&self.pred);
        }
        write!(f, "({}", self.pred)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        f.write_str(")")
    }
}

/// First-order formula with binary connectives. N-ary surface syntax is
/// folded to the right on input and flattened again when printing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(Atom::new(pred, args))
    }

    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(v: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(v.into(), Box::new(body))
    }

    pub fn exists(v: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(v.into(), Box::new(body))
    }

    /// Right-nested conjunction; `None` for an empty list.
    pub fn and_all(items: Vec<Formula>) -> Option<Formula> {
        items.into_iter().rev().reduce(|acc, f| Formula::and(f, acc))
    }

    pub fn or_all(items: Vec<Formula>) -> Option<Formula> {
        items.into_iter().rev().reduce(|acc, f| Formula::or(f, acc))
    }

    /// Quantifier prefix `Q v1 ... Q vn. body`, innermost last.
    pub fn forall_block(vars: &[String], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, v| Formula::forall(v.clone(), acc))
    }

    pub fn exists_block(vars: &[String], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, v| Formula::exists(v.clone(), acc))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn is_quantified(&self) -> bool {
        matches!(self, Formula::Forall(..) | Formula::Exists(..))
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    pub fn collect_free_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => a.collect_vars(out),
            Formula::Not(a) => a.collect_free_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_free_vars(out);
                b.collect_free_vars(out);
            }
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let mut inner = BTreeSet::new();
                body.collect_free_vars(&mut inner);
                inner.remove(v);
                out.extend(inner);
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free_vars(&mut out);
        out
    }

    pub fn has_free_var(&self, v: &str) -> bool {
        match self {
            Formula::Atom(a) => a.contains_var(v),
            Formula::Not(a) => a.has_free_var(v),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => a.has_free_var(v) || b.has_free_var(v),
            Formula::Forall(w, body) | Formula::Exists(w, body) => w != v && body.has_free_var(v),
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Formula::Forall(_, body) | Formula::Exists(_, body) => body.collect_atoms(out),
        }
    }

    /// Applies `sigma` to free occurrences. A binder whose variable occurs in
    /// the range of the (still active) substitution is a capture and rejected.
    pub fn substitute(&self, sigma: &Substitution) -> Result<Formula, LogicError> {
        if sigma.is_empty() {
            return Ok(self.clone());
        }
        Ok(match self {
            Formula::Atom(a) => Formula::Atom(a.substitute(sigma)),
            Formula::Not(a) => Formula::not(a.substitute(sigma)?),
            Formula::And(a, b) => Formula::and(a.substitute(sigma)?, b.substitute(sigma)?),
            Formula::Or(a, b) => Formula::or(a.substitute(sigma)?, b.substitute(sigma)?),
            Formula::Imp(a, b) => Formula::imp(a.substitute(sigma)?, b.substitute(sigma)?),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let inner = sigma.without(v);
                let active = inner.iter().any(|(w, _)| body.has_free_var(w));
                if active && inner.range_vars().contains(v) {
                    return Err(LogicError::Capture { var: v.clone() });
                }
                let body = body.substitute(&inner)?;
                match self {
                    Formula::Forall(..) => Formula::forall(v.clone(), body),
                    _ => Formula::exists(v.clone(), body),
                }
            }
        })
    }

    /// Connectives, quantifiers and their bound variables, predicate and
    /// function symbols, variables, and argument commas.
    pub fn symbol_count(&self) -> usize {
        fn term(t: &Term) -> usize {
            match t {
                Term::Var(_) => 1,
                Term::App(_, args) => 1 + args.len().saturating_sub(1) + args.iter().map(term).sum::<usize>(),
            }
        }
        match self {
            Formula::Atom(a) => 1 + a.args.len().saturating_sub(1) + a.args.iter().map(term).sum::<usize>(),
            Formula::Not(a) => 1 + a.symbol_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.symbol_count() + b.symbol_count(),
            Formula::Forall(_, body) | Formula::Exists(_, body) => 2 + body.symbol_count(),
        }
    }

    fn write_flat(&self, f: &mut fmt::Formatter<'_>, kw: &str) -> fmt::Result {
        let (a, b) = match self {
            Formula::And(a, b) | Formula::Or(a, b) => (a, b),
            _ => unreachable!(),
        };
        write!(f, "({kw} {a}")?;
        let mut rest: &Formula = b;
        while let (Formula::And(..), Formula::And(x, y)) | (Formula::Or(..), Formula::Or(x, y)) = (self, rest) {
            write!(f, " {x}")?;
            rest = y;
        }
        write!(f, " {rest})")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(a) => write!(f, "(not {a})"),
            Formula::And(..) => self.write_flat(f, "and"),
            Formula::Or(..) => self.write_flat(f, "or"),
            Formula::Imp(a, b) => write!(f, "(imp {a} {b})"),
            Formula::Forall(v, b) => write!(f, "(forall {v} {b})"),
            Formula::Exists(v, b) => write!(f, "(exists {v} {b})"),
        }
    }
}
