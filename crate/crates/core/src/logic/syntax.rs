//! Reading terms, formulas and literals from s-expressions.
//!
//! An identifier is a constant when the signature declares it nullary and a
//! variable when the scope admits it; anything else is an error.

use std::collections::BTreeSet;

use super::formula::{Atom, Formula};
use super::sequent::Literal;
use super::signature::{Signature, KEYWORDS};
use super::term::Term;
use crate::sexpr::{parse_one, SExpr, SyntaxError};

#[derive(Clone, Debug)]
pub enum VarScope {
    /// Any undeclared identifier is a variable.
    Any,
    Only(BTreeSet<String>),
}

impl VarScope {
    pub fn only<I, S>(vars: I) -> VarScope
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarScope::Only(vars.into_iter().map(Into::into).collect())
    }

    fn admits(&self, v: &str, bound: &[String]) -> bool {
        bound.iter().any(|b| b == v)
            || match self {
                VarScope::Any => true,
                VarScope::Only(s) => s.contains(v),
            }
    }
}

fn term_inner(e: &SExpr, sig: &Signature, scope: &VarScope, bound: &[String]) -> Result<Term, SyntaxError> {
    match e {
        SExpr::Atom(name, pos) => {
            if let Some(&n) = sig.functions.get(name) {
                if n == 0 {
                    return Ok(Term::constant(name.clone()));
                }
                return Err(SyntaxError::new(*pos, format!("function '{name}' expects {n} argument(s)")));
            }
            if sig.predicates.contains_key(name) || KEYWORDS.contains(&name.as_str()) {
                return Err(SyntaxError::new(*pos, format!("'{name}' is not a term")));
            }
            if scope.admits(name, bound) {
                Ok(Term::var(name.clone()))
            } else {
                Err(SyntaxError::new(*pos, format!("unknown identifier '{name}'")))
            }
        }
        SExpr::List(items, pos) => {
            let head = items
                .first()
                .and_then(SExpr::as_atom)
                .ok_or_else(|| SyntaxError::new(*pos, "expected function application"))?;
            let n = *sig
                .functions
                .get(head)
                .ok_or_else(|| SyntaxError::new(*pos, format!("unknown function symbol '{head}'")))?;
            if n != items.len() - 1 {
                return Err(SyntaxError::new(
                    *pos,
                    format!("function '{head}' expects {n} argument(s), found {}", items.len() - 1),
                ));
            }
            let args = items[1..].iter().map(|a| term_inner(a, sig, scope, bound)).collect::<Result<Vec<_>, _>>()?;
            Ok(Term::App(head.to_string(), args))
        }
    }
}

pub fn parse_term(e: &SExpr, sig: &Signature, scope: &VarScope) -> Result<Term, SyntaxError> {
    term_inner(e, sig, scope, &[])
}

fn atom_inner(e: &SExpr, sig: &Signature, scope: &VarScope, bound: &[String]) -> Result<Atom, SyntaxError> {
    let (head, args, pos) = match e {
        SExpr::Atom(name, pos) => (name.as_str(), &[][..], *pos),
        SExpr::List(items, pos) => {
            let head = items.first().and_then(SExpr::as_atom).ok_or_else(|| SyntaxError::new(*pos, "expected atom"))?;
            (head, &items[1..], *pos)
        }
    };
    let n =
        *sig.predicates.get(head).ok_or_else(|| SyntaxError::new(pos, format!("unknown predicate symbol '{head}'")))?;
    if n != args.len() {
        return Err(SyntaxError::new(pos, format!("predicate '{head}' expects {n} argument(s), found {}", args.len())));
    }
    let args = args.iter().map(|a| term_inner(a, sig, scope, bound)).collect::<Result<Vec<_>, _>>()?;
    Ok(Atom::new(head, args))
}

fn formula_inner(
    e: &SExpr,
    sig: &Signature,
    scope: &VarScope,
    bound: &mut Vec<String>,
) -> Result<Formula, SyntaxError> {
    let items = match e {
        SExpr::Atom(..) => return Ok(Formula::Atom(atom_inner(e, sig, scope, bound)?)),
        SExpr::List(items, _) => items,
    };
    let pos = e.pos();
    let sub = |i: usize, bound: &mut Vec<String>| formula_inner(&items[i], sig, scope, bound);
    match e.head() {
        Some("not") => {
            if items.len() != 2 {
                return Err(SyntaxError::new(pos, "'not' takes one argument"));
            }
            Ok(Formula::not(sub(1, bound)?))
        }
        Some(kw @ ("and" | "or")) => {
            if items.len() < 3 {
                return Err(SyntaxError::new(pos, format!("'{kw}' takes at least two arguments")));
            }
            let parts = (1..items.len()).map(|i| sub(i, bound)).collect::<Result<Vec<_>, _>>()?;
            Ok(if kw == "and" { Formula::and_all(parts) } else { Formula::or_all(parts) }.unwrap())
        }
        Some("imp") => {
            if items.len() != 3 {
                return Err(SyntaxError::new(pos, "'imp' takes two arguments"));
            }
            Ok(Formula::imp(sub(1, bound)?, sub(2, bound)?))
        }
        Some(q @ ("forall" | "exists")) => {
            if items.len() != 3 {
                return Err(SyntaxError::new(pos, format!("'{q}' takes a variable and a body")));
            }
            let v = items[1].expect_atom("bound variable")?.to_string();
            if sig.functions.contains_key(&v) || sig.predicates.contains_key(&v) {
                return Err(SyntaxError::new(items[1].pos(), format!("cannot bind declared symbol '{v}'")));
            }
            bound.push(v.clone());
            let body = sub(2, bound);
            bound.pop();
            let body = body?;
            Ok(if q == "forall" { Formula::forall(v, body) } else { Formula::exists(v, body) })
        }
        _ => Ok(Formula::Atom(atom_inner(e, sig, scope, bound)?)),
    }
}

pub fn parse_formula(e: &SExpr, sig: &Signature, scope: &VarScope) -> Result<Formula, SyntaxError> {
    formula_inner(e, sig, scope, &mut Vec::new())
}

pub fn parse_literal(e: &SExpr, sig: &Signature, scope: &VarScope) -> Result<Literal, SyntaxError> {
    if e.head() == Some("not") {
        let items = e.as_list().unwrap();
        if items.len() != 2 {
            return Err(SyntaxError::new(e.pos(), "'not' takes one argument"));
        }
        return Ok(Literal::neg(atom_inner(&items[1], sig, scope, &[])?));
    }
    Ok(Literal::pos(atom_inner(e, sig, scope, &[])?))
}

pub fn formula_from_str(text: &str, sig: &Signature, scope: &VarScope) -> Result<Formula, SyntaxError> {
    parse_formula(&parse_one(text)?, sig, scope)
}

pub fn term_from_str(text: &str, sig: &Signature, scope: &VarScope) -> Result<Term, SyntaxError> {
    parse_term(&parse_one(text)?, sig, scope)
}

pub fn literal_from_str(text: &str, sig: &Signature, scope: &VarScope) -> Result<Literal, SyntaxError> {
    parse_literal(&parse_one(text)?, sig, scope)
}

/// Reads a `(signature (functions (f 1) ...) (predicates (P 2) ...))` block.
pub fn parse_signature(e: &SExpr) -> Result<Signature, SyntaxError> {
    let items = e.expect_list("signature block")?;
    if e.head() != Some("signature") {
        return Err(SyntaxError::new(e.pos(), "expected (signature ...)"));
    }
    let mut sig = Signature::new();
    for part in &items[1..] {
        let kind =
            part.head().ok_or_else(|| SyntaxError::new(part.pos(), "expected (functions ...) or (predicates ...)"))?;
        for decl in &part.as_list().unwrap()[1..] {
            let d = decl.expect_list("(name arity)")?;
            if d.len() != 2 {
                return Err(SyntaxError::new(decl.pos(), "expected (name arity)"));
            }
            let name = d[0].expect_atom("symbol name")?;
            let arity: usize = d[1]
                .expect_atom("arity")?
                .parse()
                .map_err(|_| SyntaxError::new(d[1].pos(), "arity must be a natural number"))?;
            let res = match kind {
                "functions" => sig.add_function(name, arity),
                "predicates" => sig.add_predicate(name, arity),
                other => return Err(SyntaxError::new(part.pos(), format!("unknown signature section '{other}'"))),
            };
            res.map_err(|err| SyntaxError::new(decl.pos(), err.to_string()))?;
        }
    }
    Ok(sig)
}
