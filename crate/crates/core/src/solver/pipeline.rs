use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use super::anti::naive_pool;
use super::dnta::partitioned_dnta;
use super::filters::{for_each_candidate, in_cl, in_sol, AllowedReading};
use super::pools::gstar_pool;
use super::sehs::build_sehs;
use super::verify::{is_balanced, verify_solution};
use super::{Caps, SearchStats, SolverError};
use crate::calculus::{check_proof, complexities, Complexity, Proof};
use crate::grammar::{gstar_of, SchematicPi2Grammar, X, Y};
use crate::herbrand::{eh_build, proof_from_eh, PrenexProblem};
use crate::logic::syntax::{parse_literal, VarScope};
use crate::logic::{clause_set_to_string, dnf_of, Clause, ClauseSet, Formula, Literal, Signature, Term};
use crate::sexpr::parse_all;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoolChoice {
    /// Literals unified by the grammar's rewrite system.
    GStar,
    /// All anti-substitutions of the leaf literals.
    Naive,
    /// A starting set given clause by clause.
    Clauses(ClauseSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub pool: PoolChoice,
    pub caps: Caps,
    /// Collect every solution instead of stopping at the first.
    pub all: bool,
    pub reading: AllowedReading,
    /// Herbrand term set the grammar must cover.
    pub terms: Option<BTreeSet<Term>>,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            pool: PoolChoice::GStar,
            caps: Caps::default(),
            all: false,
            reading: AllowedReading::default(),
            terms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub pool_kind: &'static str,
    #[serde(serialize_with = "crate::report::display_sorted")]
    pub pool: BTreeSet<Literal>,
    /// Whether every leaf found a unification partner; only for the G* pool.
    pub unifiable: Option<bool>,
    pub leaves: usize,
    /// Solutions in search order; the first one is used for the proof.
    pub solutions: Vec<String>,
    #[serde(serialize_with = "crate::report::display")]
    pub cut_formula: Formula,
    pub verified: bool,
    pub balanced: bool,
    pub proof_checked: bool,
    /// `k·|U1| + l·|U2| + p + m` of the extended Herbrand sequent.
    pub herbrand_complexity: usize,
    pub proof_complexity: Complexity,
    pub stats: SearchStats,
}

#[derive(Clone, Debug)]
pub struct CutOutcome {
    pub report: SolutionReport,
    pub solutions: Vec<ClauseSet>,
    pub proof: Proof,
}

/// Every non-empty clause of at most `max_size` pool literals.
pub fn starting_set_from_pool(pool: &BTreeSet<Literal>, max_size: usize) -> ClauseSet {
    let lits: Vec<&Literal> = pool.iter().collect();
    let mut out = ClauseSet::new();
    fn go(lits: &[&Literal], start: usize, max: usize, cur: &mut Clause, out: &mut ClauseSet) {
        if !cur.is_empty() {
            out.insert(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..lits.len() {
            cur.insert(lits[i].clone());
            go(lits, i + 1, max, cur, out);
            cur.remove(lits[i]);
        }
    }
    go(&lits, 0, max_size, &mut Clause::new(), &mut out);
    out
}

/// Reads a starting set: one clause per line, literals as s-expressions
/// over `x` and `y`, `;` starts a comment.
pub fn parse_starting_set(text: &str, sig: &Signature) -> Result<ClauseSet, SolverError> {
    let scope = VarScope::only([X, Y]);
    let mut out = ClauseSet::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split(';').next().unwrap_or("");
        let exprs =
            parse_all(line).map_err(|e| SolverError::InvalidStartingSet(format!("line {}: {}", n + 1, e.msg)))?;
        if exprs.is_empty() {
            continue;
        }
        let clause = exprs
            .iter()
            .map(|e| parse_literal(e, sig, &scope))
            .collect::<Result<Clause, _>>()
            .map_err(|e| SolverError::InvalidStartingSet(format!("line {}: {}", n + 1, e.msg)))?;
        out.insert(clause);
    }
    Ok(out)
}

/// Finds a cut formula for the problem under the grammar and builds the
/// proof with that cut.
pub fn introduce_cut(
    pb: &PrenexProblem,
    g: &SchematicPi2Grammar,
    opts: &SolveOptions,
) -> Result<CutOutcome, SolverError> {
    let sehs = build_sehs(pb, g, opts.terms.as_ref())?;
    let leaves = partitioned_dnta(&sehs)?;
    let (pool_kind, pool, unifiable, starting) = match &opts.pool {
        PoolChoice::GStar => {
            let gp = gstar_pool(&gstar_of(g), &leaves);
            let a = starting_set_from_pool(&gp.literals, opts.caps.max_clause_size);
            ("gstar", gp.literals, Some(gp.unifiable), a)
        }
        PoolChoice::Naive => {
            let pool = naive_pool(&sehs, &leaves)?;
            let a = starting_set_from_pool(&pool, opts.caps.max_clause_size);
            ("naive", pool, None, a)
        }
        PoolChoice::Clauses(cs) => {
            let pool: BTreeSet<Literal> = cs.iter().flatten().cloned().collect();
            if let Some(l) = pool.iter().find(|l| l.vars().iter().any(|v| v != X && v != Y)) {
                return Err(SolverError::InvalidStartingSet(format!("literal {l} has variables besides x and y")));
            }
            if cs.iter().any(|c| c.is_empty()) {
                return Err(SolverError::InvalidStartingSet("empty clause".into()));
            }
            ("file", pool, None, cs.clone())
        }
    };
    let mut stats = SearchStats { pool_size: pool.len(), starting_set_size: starting.len(), ..SearchStats::default() };
    let mut solutions: Vec<ClauseSet> = Vec::new();
    let mut unsound: Option<ClauseSet> = None;
    let mut fatal: Option<SolverError> = None;
    let visited = for_each_candidate(&starting, &opts.caps, &mut |cs| {
        if !in_cl(&sehs, &leaves, cs) {
            return ControlFlow::Continue(());
        }
        stats.passed_cl += 1;
        if !in_sol(&sehs, &leaves, cs, opts.reading) {
            return ControlFlow::Continue(());
        }
        stats.passed_sol += 1;
        match verify_solution(&sehs, cs) {
            Ok(true) => solutions.push(cs.clone()),
            Ok(false) => {
                unsound = Some(cs.clone());
                return ControlFlow::Break(());
            }
            Err(e) => {
                fatal = Some(e);
                return ControlFlow::Break(());
            }
        }
        if opts.all {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    match visited {
        Ok(n) => stats.candidates_examined = n,
        Err(SolverError::CapExceeded(s)) => {
            stats.candidates_examined = s.candidates_examined;
            stats.cap_hit = true;
            if solutions.is_empty() {
                return Err(SolverError::CapExceeded(stats));
            }
        }
        Err(e) => return Err(e),
    }
    if let Some(e) = fatal {
        return Err(e);
    }
    if let Some(cs) = unsound {
        return Err(SolverError::VerificationFailed(format!(
            "{} passed both filters but is not a solution",
            clause_set_to_string(&cs)
        )));
    }
    let Some(first) = solutions.first() else {
        return Err(SolverError::NoSolutionUnderPool(stats));
    };

    let matrix = dnf_of(first)?;
    let eh = sehs.eh(&matrix)?;
    let ehr = eh_build(&eh)?;
    if !ehr.tautology {
        return Err(SolverError::VerificationFailed(format!("extended sequent is not a tautology: {}", ehr.sequent)));
    }
    let proof = proof_from_eh(&eh)?;
    check_proof(&proof).map_err(|e| SolverError::VerificationFailed(e.to_string()))?;
    let balanced = is_balanced(&sehs, first)?;
    let report = SolutionReport {
        pool_kind,
        pool,
        unifiable,
        leaves: leaves.len(),
        solutions: solutions.iter().map(clause_set_to_string).collect(),
        cut_formula: eh.cut_formula(),
        verified: true,
        balanced,
        proof_checked: true,
        herbrand_complexity: ehr.complexity,
        proof_complexity: complexities(&proof.root),
        stats,
    };
    Ok(CutOutcome { report, solutions, proof })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{load, CROSSED, NESTED};

    #[test]
    fn starting_set_sizes() {
        let l = load(CROSSED);
        let pool: BTreeSet<Literal> = l.clauses("(P x y) (Q x y) (P r y)").into_iter().flatten().collect();
        assert_eq!(starting_set_from_pool(&pool, 1).len(), 3);
        assert_eq!(starting_set_from_pool(&pool, 2).len(), 6);
        assert_eq!(starting_set_from_pool(&pool, 3).len(), 7);
    }

    #[test]
    fn starting_set_file() {
        let l = load(CROSSED);
        let sig = &l.pf.problem.signature;
        let cs = parse_starting_set("; two clauses\n(P x y)\n\n(not (Q x y)) (P r y) ; trailing\n", sig).unwrap();
        assert_eq!(clause_set_to_string(&cs), "{{(P r y), (not (Q x y))}, {(P x y)}}");
        let err = parse_starting_set("(P x alpha)", sig).unwrap_err();
        assert!(matches!(err, SolverError::InvalidStartingSet(m) if m.starts_with("line 1")));
    }

    #[test]
    fn solves_the_small_examples() {
        for (text, cut) in [(CROSSED, "(forall x (exists y (P x y)))"), (NESTED, "(forall x (exists y (P x y)))")] {
            let l = load(text);
            let out = introduce_cut(&l.pf.problem, &l.pf.grammar, &SolveOptions::default()).unwrap();
            assert_eq!(out.report.cut_formula.to_string(), cut);
            assert!(out.report.verified && out.report.proof_checked && out.report.balanced);
        }
    }

    #[test]
    fn explicit_pool_and_all() {
        let l = load(CROSSED);
        let cs = l.clauses("(P x y)\n(Q x y)");
        let opts = SolveOptions { pool: PoolChoice::Clauses(cs), all: true, ..SolveOptions::default() };
        let out = introduce_cut(&l.pf.problem, &l.pf.grammar, &opts).unwrap();
        assert_eq!(out.report.solutions, ["{{(P x y)}}", "{{(Q x y)}}", "{{(P x y)}, {(Q x y)}}"]);
        assert_eq!(out.report.pool_kind, "file");

        let wrong = l.clauses("(P x y) (Q x y)");
        let opts = SolveOptions { pool: PoolChoice::Clauses(wrong), ..SolveOptions::default() };
        assert!(matches!(introduce_cut(&l.pf.problem, &l.pf.grammar, &opts), Err(SolverError::NoSolutionUnderPool(_))));
    }
}
