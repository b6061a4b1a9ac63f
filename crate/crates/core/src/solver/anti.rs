//! Anti-substitution: literals over `x`, `y` that instantiate to a given
//! leaf literal.

use std::collections::BTreeSet;

use super::dnta::PartitionedLeaf;
use super::sehs::Sehs;
use super::SolverError;
use crate::grammar::{alpha, beta, x, y};
use crate::logic::{Atom, Literal, Substitution, Term};

/// Most occurrences of the two images a literal may have before
/// generalization is refused.
pub const OCCURRENCE_LIMIT: usize = 16;

fn occurrences(t: &Term, xi: &Term, yi: &Term) -> usize {
    let here = usize::from(t == xi || t == yi);
    match t {
        Term::Var(_) => here,
        Term::App(_, args) => here + args.iter().map(|a| occurrences(a, xi, yi)).sum::<usize>(),
    }
}

fn gen_term(t: &Term, xi: &Term, yi: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    if t == xi {
        out.push(x());
    }
    if t == yi {
        out.push(y());
    }
    if let Term::App(f, args) = t {
        let mut combos: Vec<Vec<Term>> = vec![Vec::new()];
        for a in args {
            let opts = gen_term(a, xi, yi);
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    opts.iter().map(move |o| {
                        let mut c = c.clone();
                        c.push(o.clone());
                        c
                    })
                })
                .collect();
        }
        out.extend(combos.into_iter().map(|c| Term::App(f.clone(), c)));
    }
    out
}

/// All `L` over `x`, `y` with `L[x := xi, y := yi] = lit`.
///
/// Every occurrence of `xi` (or `yi`) is independently either abstracted or
/// kept; variables other than the images can never be kept.
pub fn generalizations(lit: &Literal, xi: &Term, yi: &Term) -> Result<BTreeSet<Literal>, SolverError> {
    let n: usize = lit.atom.args.iter().map(|a| occurrences(a, xi, yi)).sum();
    if n > OCCURRENCE_LIMIT {
        return Err(SolverError::TooManyOccurrences(lit.to_string(), n));
    }
    let mut combos: Vec<Vec<Term>> = vec![Vec::new()];
    for a in &lit.atom.args {
        let opts = gen_term(a, xi, yi);
        let mut next = Vec::with_capacity(combos.len() * opts.len());
        for c in &combos {
            for o in &opts {
                let mut c = c.clone();
                c.push(o.clone());
                next.push(c);
            }
        }
        combos = next;
    }
    Ok(combos
        .into_iter()
        .map(|args| Literal { atom: Atom::new(lit.atom.pred.clone(), args), positive: lit.positive })
        .collect())
}

/// Literals that map into the alpha part of `leaf` under some
/// `x := alpha, y := t_i`.
pub fn a_prime(leaf: &PartitionedLeaf, sehs: &Sehs) -> Result<BTreeSet<Literal>, SolverError> {
    let mut out = BTreeSet::new();
    for l in &leaf.a {
        for t in &sehs.grammar.t_terms {
            out.extend(generalizations(l, &alpha(), t)?);
        }
    }
    Ok(out)
}

pub(crate) fn left_instance(l: &Literal, t: &Term) -> Literal {
    l.substitute(&Substitution::from_pairs([(crate::grammar::X, alpha()), (crate::grammar::Y, t.clone())]))
}

pub(crate) fn right_instance(l: &Literal, r: &Term, j: usize) -> Literal {
    l.substitute(&Substitution::from_pairs([(crate::grammar::X, r.clone()), (crate::grammar::Y, beta(j))]))
}

/// Membership of `m` in the allowed clauses of `leaf`: one t-term sends
/// every literal of `m` into the alpha part. The empty set is allowed.
pub fn in_allowed(leaf: &PartitionedLeaf, sehs: &Sehs, m: &BTreeSet<Literal>) -> bool {
    sehs.grammar.t_terms.iter().any(|t| m.iter().all(|l| leaf.a.contains(&left_instance(l, t))))
}

/// Union over all leaves of the left generalizations of the alpha and
/// neutral parts and the right generalizations of the dualized beta and
/// neutral parts.
pub fn naive_pool(sehs: &Sehs, leaves: &[PartitionedLeaf]) -> Result<BTreeSet<Literal>, SolverError> {
    let g = &sehs.grammar;
    let mut left: BTreeSet<&Literal> = BTreeSet::new();
    let mut right: BTreeSet<Literal> = BTreeSet::new();
    for leaf in leaves {
        left.extend(leaf.a.iter().chain(&leaf.n));
        right.extend(leaf.dual_b().into_iter().chain(leaf.dual_n()));
    }
    let mut out = BTreeSet::new();
    for l in left {
        for t in &g.t_terms {
            out.extend(generalizations(l, &alpha(), t)?);
        }
    }
    for l in &right {
        for (j, r) in g.r_terms.iter().enumerate() {
            out.extend(generalizations(l, r, &beta(j + 1))?);
        }
    }
    Ok(out)
}
