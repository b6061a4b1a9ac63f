//! The sequence `S_n`: an end-sequent whose cut-free proofs need more than
//! `n^n` quantifier inferences but which has a one-cut proof with `4n + 3`.
//!
//! ```text
//! forall u1 u2 u3. (P(u1,f1 u1) v .. v P(u1,fn u1)) & (P(u2,u3) -> P(u2,f u3))
//!   |- exists v1..v(n+2). (P(v1,f v2) & P(f v2,f v3) & .. & P(f v(n-1),f vn) & ~P(v1,g vn))
//!                         v P(v(n+1),g v(n+2))
//! ```

use serde::Serialize;

use super::BenchError;
use crate::calculus::{check_proof, complexities, Complexity};
use crate::grammar::{alpha, beta, SchematicPi2Grammar};
use crate::herbrand::{herbrand_check, proof_from_eh, ExtendedHerbrandSequent, HerbrandInstanceSet, PrenexProblem};
use crate::logic::{sharp_count, Formula, Signature, Term};

/// Largest `n` for which the cut-free instance sets are built.
pub const CUTFREE_LIMIT: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnInstance {
    pub n: usize,
    pub problem: PrenexProblem,
    pub grammar: SchematicPi2Grammar,
    /// `P(x, f y)`.
    pub cut_matrix: Formula,
}

fn fi(i: usize) -> String {
    format!("f{i}")
}

fn p(a: Term, b: Term) -> Formula {
    Formula::atom("P", vec![a, b])
}

fn f(t: Term) -> Term {
    Term::un("f", t)
}

pub fn signature(n: usize) -> Signature {
    let mut sig = Signature::new();
    for i in 1..=n {
        sig.add_function(&fi(i), 1).expect("fresh name");
    }
    sig.add_function("f", 1).expect("fresh name");
    sig.add_function("g", 1).expect("fresh name");
    sig.add_function("c", 0).expect("fresh name");
    sig.add_predicate("P", 2).expect("fresh name");
    sig
}

pub fn generate_sn(n: usize) -> Result<SnInstance, BenchError> {
    if n < 2 {
        return Err(BenchError::TooSmall(n));
    }
    let u = |i: usize| Term::var(format!("u{i}"));
    let v = |i: usize| Term::var(format!("v{i}"));
    let a_part = Formula::or_all((1..=n).map(|i| p(u(1), Term::un(fi(i), u(1)))).collect()).unwrap();
    let b_part = Formula::imp(p(u(2), u(3)), p(u(2), f(u(3))));
    let antecedent = Formula::and(a_part, b_part);

    let mut chain = vec![p(v(1), f(v(2)))];
    for i in 2..n {
        chain.push(p(f(v(i)), f(v(i + 1))));
    }
    chain.push(Formula::not(p(v(1), Term::un("g", v(n)))));
    let c_neg = Formula::and_all(chain).unwrap();
    let d = p(v(n + 1), Term::un("g", v(n + 2)));
    let succedent = Formula::or(c_neg, d);

    let problem = PrenexProblem::new(
        signature(n),
        (1..=3).map(|i| format!("u{i}")).collect(),
        (1..=n + 2).map(|i| format!("v{i}")).collect(),
        antecedent,
        succedent,
    )?;

    let c = Term::constant("c");
    let mut g_tuple = vec![c.clone()];
    g_tuple.extend((1..n).map(beta));
    g_tuple.push(c.clone());
    g_tuple.push(beta(n - 1));
    let mut r_terms = vec![c];
    r_terms.extend((1..n - 1).map(|j| f(beta(j))));
    let grammar = SchematicPi2Grammar {
        f_tuples: (1..=n).map(|i| vec![alpha(), alpha(), Term::un(fi(i), alpha())]).collect(),
        g_tuples: vec![g_tuple],
        r_terms,
        t_terms: (1..=n).map(|i| Term::un(fi(i), alpha())).collect(),
    };
    let cut_matrix = p(Term::var("x"), f(Term::var("y")));
    Ok(SnInstance { n, problem, grammar, cut_matrix })
}

/// Instances of a minimal cut-free proof, with their tuple-sharing count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutFreeInstances {
    pub n: usize,
    pub instances: HerbrandInstanceSet,
    pub midsequent_valid: bool,
    /// Tuple-sharing quantifier count of both blocks.
    pub counted_q: usize,
    /// The closed form stated for the same count in the literature.
    pub stated_q: u128,
}

/// Values the chain `t_1 = c, t_2 = h c, t_(k+1) = h f t_k` takes, by level.
fn chains(n: usize) -> Vec<Vec<Term>> {
    let mut layer: Vec<Vec<Term>> = vec![vec![Term::constant("c")]];
    for k in 1..n {
        let mut next = Vec::new();
        for ch in &layer {
            let last = ch.last().unwrap();
            let base = if k == 1 { last.clone() } else { f(last.clone()) };
            for i in 1..=n {
                let mut longer = ch.clone();
                longer.push(Term::un(fi(i), base.clone()));
                next.push(longer);
            }
        }
        layer = next;
    }
    layer
}

/// `n^n + 6 n^(n-1) + 4 (n^(n-2) + .. + n) + 5`, the last sum empty for `n = 2`.
pub fn stated_cutfree_q(n: usize) -> u128 {
    let n = n as u128;
    let pow = |e: u32| n.pow(e);
    let e = n as u32;
    let middle: u128 = (1..=e.saturating_sub(2)).map(pow).sum();
    pow(e) + 6 * pow(e - 1) + 4 * middle + 5
}

pub fn minimal_cutfree_instances(n: usize) -> Result<CutFreeInstances, BenchError> {
    if n > CUTFREE_LIMIT {
        return Err(BenchError::TooLarge { n, limit: CUTFREE_LIMIT });
    }
    let sn = generate_sn(n)?;
    let full = chains(n);
    // antecedent instances: c and f t_k for every chain value below the top
    let mut a_terms: Vec<Term> = vec![Term::constant("c")];
    for ch in &full {
        for t in &ch[1..n - 1] {
            a_terms.push(f(t.clone()));
        }
    }
    a_terms.sort();
    a_terms.dedup();
    let mut f_tuples = Vec::new();
    for t in &a_terms {
        for i in 1..=n {
            f_tuples.push(vec![t.clone(), t.clone(), Term::un(fi(i), t.clone())]);
        }
    }
    let g_tuples: Vec<Vec<Term>> = full
        .iter()
        .map(|ch| {
            let mut tup = ch.clone();
            tup.push(Term::constant("c"));
            tup.push(ch[n - 1].clone());
            tup
        })
        .collect();
    let instances = HerbrandInstanceSet { f_tuples, g_tuples };
    let check = herbrand_check(&sn.problem, &instances)?;
    let counted_q = sharp_count(&instances.f_tuples)? + sharp_count(&instances.g_tuples)?;
    Ok(CutFreeInstances { n, instances, midsequent_valid: check.valid, counted_q, stated_q: stated_cutfree_q(n) })
}

/// One row of the comparison between the one-cut proof and the cut-free
/// instance count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub cut_proof: Complexity,
    pub cut_proof_checked: bool,
    /// `4n + 3`.
    pub expected_cut_q: usize,
    pub cutfree: Option<CutFreeInstances>,
    /// `n^n`.
    pub lower_bound: u128,
}

pub fn bench_row(n: usize, cut_free: bool) -> Result<BenchRow, BenchError> {
    let sn = generate_sn(n)?;
    let eh = ExtendedHerbrandSequent::new(sn.problem.clone(), sn.grammar.clone(), sn.cut_matrix.clone())?;
    let proof = proof_from_eh(&eh)?;
    let checked = check_proof(&proof).is_ok();
    let cutfree = if cut_free { Some(minimal_cutfree_instances(n)?) } else { None };
    Ok(BenchRow {
        n,
        cut_proof: complexities(&proof.root),
        cut_proof_checked: checked,
        expected_cut_q: 4 * n + 3,
        cutfree,
        lower_bound: (n as u128).pow(n as u32),
    })
}
