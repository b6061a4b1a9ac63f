use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::formula::Formula;
use super::term::Term;
use super::LogicError;

pub const KEYWORDS: [&str; 6] = ["not", "and", "or", "imp", "forall", "exists"];

/// Names owned by the cut machinery: the cut variables, the eigenvariables,
/// the start symbol and the two tuple wrappers.
pub fn is_reserved(name: &str) -> bool {
    matches!(name, "alpha" | "x" | "y" | "tau" | "hF" | "hG") || KEYWORDS.contains(&name) || is_beta_name(name)
}

/// `b1`, `b2`, ... (no leading zero).
pub fn is_beta_name(name: &str) -> bool {
    match name.strip_prefix('b') {
        Some(rest) => !rest.is_empty() && !rest.starts_with('0') && rest.bytes().all(|c| c.is_ascii_digit()),
        None => false,
    }
}

fn valid_identifier(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with(|c: char| c.is_ascii_digit())
        && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '-')
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub functions: BTreeMap<String, usize>,
    pub predicates: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    fn check_fresh(&self, name: &str) -> Result<(), LogicError> {
        if !valid_identifier(name) {
            return Err(LogicError::BadIdentifier(name.to_string()));
        }
        if is_reserved(name) {
            return Err(LogicError::Reserved(name.to_string()));
        }
        if self.functions.contains_key(name) || self.predicates.contains_key(name) {
            return Err(LogicError::Duplicate(name.to_string()));
        }
        Ok(())
    }

    pub fn add_function(&mut self, name: &str, arity: usize) -> Result<(), LogicError> {
        self.check_fresh(name)?;
        self.functions.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), LogicError> {
        self.check_fresh(name)?;
        self.predicates.insert(name.to_string(), arity);
        Ok(())
    }

    /// Builder used by generators and tests; panics on a bad declaration.
    pub fn with(mut self, functions: &[(&str, usize)], predicates: &[(&str, usize)]) -> Self {
        for (f, n) in functions {
            self.add_function(f, *n).expect("bad function declaration");
        }
        for (p, n) in predicates {
            self.add_predicate(p, *n).expect("bad predicate declaration");
        }
        self
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.functions.get(name) == Some(&0)
    }

    pub fn check_term(&self, t: &Term) -> Result<(), LogicError> {
        match t {
            Term::Var(_) => Ok(()),
            Term::App(f, args) => {
                match self.functions.get(f) {
                    None => return Err(LogicError::UnknownSymbol(f.clone())),
                    Some(&n) if n != args.len() => {
                        return Err(LogicError::Arity { symbol: f.clone(), expected: n, found: args.len() })
                    }
                    _ => {}
                }
                args.iter().try_for_each(|a| self.check_term(a))
            }
        }
    }

    pub fn check_formula(&self, f: &Formula) -> Result<(), LogicError> {
        match f {
            Formula::Atom(a) => {
                match self.predicates.get(&a.pred) {
                    None => return Err(LogicError::UnknownSymbol(a.pred.clone())),
                    Some(&n) if n != a.args.len() => {
                        return Err(LogicError::Arity { symbol: a.pred.clone(), expected: n, found: a.args.len() })
                    }
                    _ => {}
                }
                a.args.iter().try_for_each(|t| self.check_term(t))
            }
            Formula::Not(a) => self.check_formula(a),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                self.check_formula(a)?;
                self.check_formula(b)
            }
            Formula::Forall(_, body) | Formula::Exists(_, body) => self.check_formula(body),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(signature\n  (functions")?;
        for (name, n) in &self.functions {
            write!(f, " ({name} {n})")?;
        }
        f.write_str(")\n  (predicates")?;
        for (name, n) in &self.predicates {
            write!(f, " ({name} {n})")?;
        }
        f.write_str("))")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserved_names() {
        for r in ["alpha", "x", "y", "tau", "b1", "b12", "hF", "and"] {
            assert!(is_reserved(r), "{r}");
        }
        for ok in ["b", "b0", "b01", "beta", "x1", "c"] {
            assert!(!is_reserved(ok), "{ok}");
        }
        let mut sig = Signature::new();
        assert_eq!(sig.add_function("b3", 0), Err(LogicError::Reserved("b3".into())));
        sig.add_function("f", 1).unwrap();
        assert_eq!(sig.add_predicate("f", 1), Err(LogicError::Duplicate("f".into())));
    }

    #[test]
    fn arity_violations_are_reported() {
        let sig = Signature::new().with(&[("f", 1), ("c", 0)], &[("P", 2)]);
        let bad = Term::app("f", vec![Term::constant("c"), Term::constant("c")]);
        assert_eq!(sig.check_term(&bad), Err(LogicError::Arity { symbol: "f".into(), expected: 1, found: 2 }));
        let atom = Formula::atom("P", vec![Term::constant("c")]);
        assert!(matches!(sig.check_formula(&atom), Err(LogicError::Arity { .. })));
    }
}
