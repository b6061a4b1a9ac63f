//! The problem file: a prenex end-sequent, a schematic grammar and
//! optionally the Herbrand term set the grammar should cover.
//!
//! ```text
//! (signature (functions (f 1) (c 0)) (predicates (P 2)))
//! (forall-vars u)
//! (exists-vars v w)
//! (antecedent (and (P u (f u)) (P c u)))
//! (succedent (P v w))
//! (grammar (f-tuples (alpha)) (g-tuples (b1 c)) (r-terms c) (t-terms (f alpha)))
//! (herbrand-terms (hF c) (hG (f c) c))
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::grammar::{beta_name, SchematicPi2Grammar, ALPHA, F_WRAPPER, G_WRAPPER};
use crate::herbrand::PrenexProblem;
use crate::logic::syntax::{parse_formula, parse_signature, parse_term, VarScope};
use crate::logic::{Signature, Term};
use crate::sexpr::{parse_all, Pos, SExpr, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub problem: PrenexProblem,
    pub grammar: SchematicPi2Grammar,
    pub herbrand_terms: Option<BTreeSet<Term>>,
}

const BLOCKS: [&str; 7] =
    ["signature", "forall-vars", "exists-vars", "antecedent", "succedent", "grammar", "herbrand-terms"];

fn single_arg<'a>(e: &'a SExpr, what: &str) -> Result<&'a SExpr, SyntaxError> {
    let items = e.expect_list(what)?;
    if items.len() != 2 {
        return Err(SyntaxError::new(e.pos(), format!("({what} ...) takes exactly one argument")));
    }
    Ok(&items[1])
}

fn var_list(e: &SExpr) -> Result<Vec<String>, SyntaxError> {
    e.expect_list("variable list")?[1..].iter().map(|v| v.expect_atom("variable").map(str::to_string)).collect()
}

fn section<'a>(items: &'a [SExpr], name: &str, pos: Pos) -> Result<&'a [SExpr], SyntaxError> {
    let mut found = items.iter().filter(|e| e.head() == Some(name));
    let s = found.next().ok_or_else(|| SyntaxError::new(pos, format!("grammar lacks ({name} ...)")))?;
    if let Some(dup) = found.next() {
        return Err(SyntaxError::new(dup.pos(), format!("duplicate ({name} ...)")));
    }
    Ok(&s.as_list().unwrap()[1..])
}

fn parse_grammar(e: &SExpr, sig: &Signature) -> Result<SchematicPi2Grammar, SyntaxError> {
    let items = &e.expect_list("grammar block")?[1..];
    for it in items {
        match it.head() {
            Some("f-tuples" | "g-tuples" | "r-terms" | "t-terms") => {}
            _ => return Err(SyntaxError::new(it.pos(), "expected f-tuples, g-tuples, r-terms or t-terms")),
        }
    }
    let r_src = section(items, "r-terms", e.pos())?;
    let m = r_src.len();
    let scope = VarScope::only(std::iter::once(ALPHA.to_string()).chain((1..=m).map(beta_name)));
    let terms = |es: &[SExpr]| es.iter().map(|t| parse_term(t, sig, &scope)).collect::<Result<Vec<_>, _>>();
    let tuples = |es: &[SExpr]| {
        es.iter()
            .map(|t| match t {
                SExpr::List(parts, _) => terms(parts),
                other => Err(SyntaxError::new(other.pos(), "expected a parenthesized tuple of terms")),
            })
            .collect::<Result<Vec<_>, _>>()
    };
    let g = SchematicPi2Grammar {
        f_tuples: tuples(section(items, "f-tuples", e.pos())?)?,
        g_tuples: tuples(section(items, "g-tuples", e.pos())?)?,
        r_terms: terms(r_src)?,
        t_terms: terms(section(items, "t-terms", e.pos())?)?,
    };
    let rep = g.validate(Some(sig), false);
    if !rep.is_ok() {
        let msgs: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
        return Err(SyntaxError::new(e.pos(), format!("invalid grammar: {}", msgs.join("; "))));
    }
    Ok(g)
}

fn parse_wrapped(e: &SExpr, sig: &Signature) -> Result<Term, SyntaxError> {
    let items = e.expect_list("wrapped instance tuple")?;
    let head = items.first().and_then(SExpr::as_atom);
    if head != Some(F_WRAPPER) && head != Some(G_WRAPPER) {
        return Err(SyntaxError::new(e.pos(), format!("expected ({F_WRAPPER} ...) or ({G_WRAPPER} ...)")));
    }
    let ground = VarScope::only(Vec::<String>::new());
    let args = items[1..].iter().map(|t| parse_term(t, sig, &ground)).collect::<Result<Vec<_>, _>>()?;
    Ok(Term::app(head.unwrap(), args))
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, SyntaxError> {
    let exprs = parse_all(text)?;
    if exprs.is_empty() {
        return Err(SyntaxError::new(Pos { line: 1, col: 1 }, "empty problem file"));
    }
    let mut blocks: BTreeMap<&str, &SExpr> = BTreeMap::new();
    for e in &exprs {
        let head = e
            .head()
            .filter(|h| BLOCKS.contains(h))
            .ok_or_else(|| SyntaxError::new(e.pos(), format!("expected one of: {}", BLOCKS.join(", "))))?;
        if blocks.insert(head, e).is_some() {
            return Err(SyntaxError::new(e.pos(), format!("duplicate ({head} ...) block")));
        }
    }
    let need = |name: &str| {
        blocks.get(name).copied().ok_or_else(|| SyntaxError::new(exprs[0].pos(), format!("missing ({name} ...) block")))
    };
    let sig = parse_signature(need("signature")?)?;
    let forall_vars = var_list(need("forall-vars")?)?;
    let exists_vars = var_list(need("exists-vars")?)?;
    let ant_e = single_arg(need("antecedent")?, "antecedent")?;
    let suc_e = single_arg(need("succedent")?, "succedent")?;
    let antecedent = parse_formula(ant_e, &sig, &VarScope::only(forall_vars.clone()))?;
    let succedent = parse_formula(suc_e, &sig, &VarScope::only(exists_vars.clone()))?;
    let problem = PrenexProblem::new(sig.clone(), forall_vars, exists_vars, antecedent, succedent)
        .map_err(|err| SyntaxError::new(need("forall-vars").unwrap().pos(), err.to_string()))?;
    let grammar_e = need("grammar")?;
    let grammar = parse_grammar(grammar_e, &sig)?;
    for (tuples, len, what) in
        [(&grammar.f_tuples, problem.k(), "f-tuple"), (&grammar.g_tuples, problem.l(), "g-tuple")]
    {
        if let Some(t) = tuples.iter().find(|t| t.len() != len) {
            return Err(SyntaxError::new(
                grammar_e.pos(),
                format!("{what} of length {} where the quantifier block has {len} variable(s)", t.len()),
            ));
        }
    }
    let herbrand_terms = match blocks.get("herbrand-terms") {
        None => None,
        Some(e) => Some(
            e.expect_list("herbrand-terms")?[1..]
                .iter()
                .map(|t| parse_wrapped(t, &sig))
                .collect::<Result<BTreeSet<_>, _>>()?,
        ),
    };
    Ok(ProblemFile { problem, grammar, herbrand_terms })
}

fn tuple(t: &[Term]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(" "))
}

fn spaced(ts: &[Term]) -> String {
    ts.iter().map(|t| format!(" {t}")).collect()
}

pub fn print_problem(pf: &ProblemFile) -> String {
    let pb = &pf.problem;
    let g = &pf.grammar;
    let mut out = String::new();
    writeln!(out, "{}", pb.signature).unwrap();
    writeln!(out, "(forall-vars{})", pb.forall_vars.iter().map(|v| format!(" {v}")).collect::<String>()).unwrap();
    writeln!(out, "(exists-vars{})", pb.exists_vars.iter().map(|v| format!(" {v}")).collect::<String>()).unwrap();
    writeln!(out, "(antecedent {})", pb.antecedent).unwrap();
    writeln!(out, "(succedent {})", pb.succedent).unwrap();
    writeln!(out, "(grammar").unwrap();
    writeln!(out, "  (f-tuples{})", g.f_tuples.iter().map(|t| format!(" {}", tuple(t))).collect::<String>()).unwrap();
    writeln!(out, "  (g-tuples{})", g.g_tuples.iter().map(|t| format!(" {}", tuple(t))).collect::<String>()).unwrap();
    writeln!(out, "  (r-terms{})", spaced(&g.r_terms)).unwrap();
    writeln!(out, "  (t-terms{}))", spaced(&g.t_terms)).unwrap();
    if let Some(hs) = &pf.herbrand_terms {
        writeln!(out, "(herbrand-terms").unwrap();
        for t in hs {
            writeln!(out, "  {t}").unwrap();
        }
        writeln!(out, ")").unwrap();
    }
    out
}
