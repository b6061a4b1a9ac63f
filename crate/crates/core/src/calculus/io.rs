//! Text form of proofs.
//!
//! ```text
//! (proof
//!   (signature (functions ...) (predicates ...))
//!   (node (rule forall-l (f c))
//!     (sequent (ant ...) (suc ...))
//!     (principal ant (forall u ...))
//!     (premises (node ...))))
//! ```
//!
//! Sequent sides are printed in canonical order, so printing is a function
//! of the proof alone.

use std::fmt::Write;

use super::derivation::DerivationTree;
use super::proof::Proof;
use super::rules::RuleLabel;
use crate::logic::syntax::{parse_formula, parse_signature, parse_term, VarScope};
use crate::logic::{sorted_by_print, Formula, Sequent, Side, Signature};
use crate::sexpr::{parse_all, SExpr, SyntaxError};

fn write_node(out: &mut String, n: &DerivationTree, depth: usize) {
    let pad = "  ".repeat(depth);
    let _ = write!(out, "{pad}(node (rule {})", n.rule);
    let side = |fs: &std::collections::BTreeSet<Formula>| {
        sorted_by_print(fs.iter()).iter().map(|f| format!(" {f}")).collect::<String>()
    };
    let _ = write!(out, "\n{pad}  (sequent (ant{}) (suc{}))", side(&n.sequent.ant), side(&n.sequent.suc));
    if let Some((s, f)) = &n.principal {
        let _ = write!(out, "\n{pad}  (principal {} {f})", s.name());
    }
    if !n.premises.is_empty() {
        let _ = write!(out, "\n{pad}  (premises");
        for p in &n.premises {
            out.push('\n');
            write_node(out, p, depth + 2);
        }
        out.push(')');
    }
    out.push(')');
}

pub fn write_proof(p: &Proof, sig: &Signature) -> String {
    let mut out = String::from("(proof\n");
    for line in sig.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
    write_node(&mut out, &p.root, 1);
    out.push_str(")\n");
    out
}

fn field<'a>(items: &'a [SExpr], name: &str) -> Option<&'a SExpr> {
    items.iter().find(|e| e.head() == Some(name))
}

fn parse_rule(e: &SExpr, sig: &Signature) -> Result<RuleLabel, SyntaxError> {
    let items = e.expect_list("rule")?;
    let name = items.get(1).ok_or_else(|| SyntaxError::new(e.pos(), "rule name missing"))?.expect_atom("rule name")?;
    let arg = || items.get(2).ok_or_else(|| SyntaxError::new(e.pos(), format!("rule '{name}' needs an argument")));
    let var = || -> Result<String, SyntaxError> { Ok(arg()?.expect_atom("eigenvariable")?.to_string()) };
    Ok(match name {
        "axiom" => RuleLabel::Axiom,
        "open" => RuleLabel::NonTautLeaf,
        "and-l" => RuleLabel::AndL,
        "and-r" => RuleLabel::AndR,
        "or-l" => RuleLabel::OrL,
        "or-r" => RuleLabel::OrR,
        "imp-l" => RuleLabel::ImpL,
        "imp-r" => RuleLabel::ImpR,
        "not-l" => RuleLabel::NegL,
        "not-r" => RuleLabel::NegR,
        "forall-l" => RuleLabel::ForallL(parse_term(arg()?, sig, &VarScope::Any)?),
        "exists-r" => RuleLabel::ExistsR(parse_term(arg()?, sig, &VarScope::Any)?),
        "forall-r" => RuleLabel::ForallR(var()?),
        "exists-l" => RuleLabel::ExistsL(var()?),
        "cut" => RuleLabel::Cut(parse_formula(arg()?, sig, &VarScope::Any)?),
        other => return Err(SyntaxError::new(e.pos(), format!("unknown rule '{other}'"))),
    })
}

fn parse_side(e: &SExpr, sig: &Signature) -> Result<std::collections::BTreeSet<Formula>, SyntaxError> {
    e.expect_list("sequent side")?[1..].iter().map(|f| parse_formula(f, sig, &VarScope::Any)).collect()
}

fn parse_node(e: &SExpr, sig: &Signature) -> Result<DerivationTree, SyntaxError> {
    let items = e.expect_list("node")?;
    if e.head() != Some("node") {
        return Err(SyntaxError::new(e.pos(), "expected (node ...)"));
    }
    let rule = parse_rule(field(items, "rule").ok_or_else(|| SyntaxError::new(e.pos(), "node without rule"))?, sig)?;
    let seq = field(items, "sequent").ok_or_else(|| SyntaxError::new(e.pos(), "node without sequent"))?;
    let seq_items = seq.expect_list("sequent")?;
    let ant = field(seq_items, "ant").ok_or_else(|| SyntaxError::new(seq.pos(), "sequent without ant"))?;
    let suc = field(seq_items, "suc").ok_or_else(|| SyntaxError::new(seq.pos(), "sequent without suc"))?;
    let sequent = Sequent { ant: parse_side(ant, sig)?, suc: parse_side(suc, sig)? };
    let principal = match field(items, "principal") {
        None => None,
        Some(p) => {
            let pi = p.expect_list("principal")?;
            if pi.len() != 3 {
                return Err(SyntaxError::new(p.pos(), "expected (principal side formula)"));
            }
            let side = match pi[1].expect_atom("side")? {
                "ant" => Side::Ant,
                "suc" => Side::Suc,
                other => return Err(SyntaxError::new(pi[1].pos(), format!("unknown side '{other}'"))),
            };
            Some((side, parse_formula(&pi[2], sig, &VarScope::Any)?))
        }
    };
    let premises = match field(items, "premises") {
        None => Vec::new(),
        Some(ps) => ps.expect_list("premises")?[1..].iter().map(|n| parse_node(n, sig)).collect::<Result<_, _>>()?,
    };
    Ok(DerivationTree { sequent, rule, principal, premises })
}

pub fn read_proof(text: &str) -> Result<(Proof, Signature), SyntaxError> {
    let top = parse_all(text)?;
    let e = match top.as_slice() {
        [e] if e.head() == Some("proof") => e,
        [e, ..] => return Err(SyntaxError::new(e.pos(), "expected a single (proof ...) form")),
        [] => return Err(SyntaxError::new(crate::sexpr::Pos { line: 1, col: 1 }, "empty proof file")),
    };
    let items = e.as_list().unwrap();
    let sig =
        parse_signature(field(items, "signature").ok_or_else(|| SyntaxError::new(e.pos(), "missing signature"))?)?;
    let node = field(items, "node").ok_or_else(|| SyntaxError::new(e.pos(), "missing root node"))?;
    Ok((Proof::new(parse_node(node, &sig)?), sig))
}
