//! The right-hand filter on clause sets and the left-hand filter on the
//! survivors, both decided leaf by leaf.
//!
//! Each check searches for a counterexample: a choice of clauses (right)
//! or of literals (left) that leaves some leaf open. Choices that close the
//! leaf on their own are never tried, and partial choices that already
//! contain a complementary pair are cut off.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::Serialize;

use super::anti::{in_allowed, left_instance, right_instance};
use super::dnta::PartitionedLeaf;
use super::sehs::Sehs;
use super::{Caps, SearchStats, SolverError};
use crate::grammar::{X, Y};
use crate::logic::{clause_set_to_string, Clause, ClauseSet, Literal, Substitution};

/// How the allowed-clause condition of the left filter is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum AllowedReading {
    /// Some slot `(C, i)` has its literal land in the alpha part under
    /// `y := t_i`. Complete.
    #[default]
    PerSlot,
    /// Some clause's whole literal tuple is an allowed set under a single
    /// t-term. Sound, but misses solutions when t-terms differ in shape.
    PerClause,
}

fn has_dual(chosen: &[Literal], l: &Literal) -> bool {
    let d = l.dual();
    chosen.contains(&d)
}

fn consistent(chosen: &[Literal], add: &[Literal]) -> bool {
    add.iter().enumerate().all(|(k, l)| !has_dual(chosen, l) && !has_dual(&add[..k], l))
}

/// Whether `cs` survives the right filter at every leaf.
pub fn in_cl(sehs: &Sehs, leaves: &[PartitionedLeaf], cs: &ClauseSet) -> bool {
    let clauses: Vec<&Clause> = cs.iter().collect();
    let r_terms = &sehs.grammar.r_terms;
    leaves.iter().all(|leaf| {
        let dual_n = leaf.dual_n();
        let dual_b = leaf.dual_b();
        // per slot j, the clauses that neither hit N nor B there, with their instances
        let options: Vec<Vec<Vec<Literal>>> = r_terms
            .iter()
            .enumerate()
            .map(|(j, r)| {
                let only_x = Substitution::single(X, r.clone());
                clauses
                    .iter()
                    .filter(|c| {
                        !c.iter().any(|l| {
                            dual_n.contains(&l.substitute(&only_x)) || dual_b.contains(&right_instance(l, r, j + 1))
                        })
                    })
                    .map(|c| c.iter().map(|l| right_instance(l, r, j + 1)).collect())
                    .collect()
            })
            .collect();
        !open_choice(&options, 0, &mut Vec::new())
    })
}

/// Depth-first search for one option per slot with no complementary pair
/// overall.
fn open_choice(options: &[Vec<Vec<Literal>>], slot: usize, chosen: &mut Vec<Literal>) -> bool {
    if slot == options.len() {
        return true;
    }
    for opt in &options[slot] {
        if !consistent(chosen, opt) {
            continue;
        }
        let before = chosen.len();
        chosen.extend(opt.iter().cloned());
        let found = open_choice(options, slot + 1, chosen);
        chosen.truncate(before);
        if found {
            return true;
        }
    }
    false
}

/// Whether `cs` survives the left filter at every leaf.
pub fn in_sol(sehs: &Sehs, leaves: &[PartitionedLeaf], cs: &ClauseSet, reading: AllowedReading) -> bool {
    let t_terms = &sehs.grammar.t_terms;
    let p = t_terms.len();
    leaves.iter().all(|leaf| {
        // one slot per (clause, i); an option is a literal of the clause
        // whose instance does not close the leaf by itself
        let mut options: Vec<Vec<Vec<Literal>>> = Vec::new();
        let mut sources: Vec<Vec<Literal>> = Vec::new();
        for c in cs {
            for t in t_terms {
                let only_y = Substitution::single(Y, t.clone());
                let mut opts = Vec::new();
                let mut src = Vec::new();
                for l in c {
                    let inst = left_instance(l, t);
                    let t1 = leaf.n.contains(&l.substitute(&only_y));
                    let t2 = reading == AllowedReading::PerSlot && leaf.a.contains(&inst);
                    if !t1 && !t2 {
                        opts.push(vec![inst]);
                        src.push(l.clone());
                    }
                }
                options.push(opts);
                sources.push(src);
            }
        }
        if reading == AllowedReading::PerSlot {
            return !open_choice(&options, 0, &mut Vec::new());
        }
        // per clause: the chosen source literals of a finished clause must
        // not form an allowed set, so track them alongside the instances
        let mut picked: Vec<Literal> = Vec::new();
        !open_per_clause(leaf, sehs, &options, &sources, p, 0, &mut Vec::new(), &mut picked)
    })
}

#[allow(clippy::too_many_arguments)]
fn open_per_clause(
    leaf: &PartitionedLeaf,
    sehs: &Sehs,
    options: &[Vec<Vec<Literal>>],
    sources: &[Vec<Literal>],
    p: usize,
    slot: usize,
    chosen: &mut Vec<Literal>,
    picked: &mut Vec<Literal>,
) -> bool {
    if slot == options.len() {
        return true;
    }
    for (opt, src) in options[slot].iter().zip(&sources[slot]) {
        if !consistent(chosen, opt) {
            continue;
        }
        chosen.extend(opt.iter().cloned());
        picked.push(src.clone());
        let clause_done = (slot + 1).is_multiple_of(p);
        let ok = !clause_done || {
            let m: BTreeSet<Literal> = picked[picked.len() - p..].iter().cloned().collect();
            !in_allowed(leaf, sehs, &m)
        };
        let found = ok && open_per_clause(leaf, sehs, options, sources, p, slot + 1, chosen, picked);
        picked.pop();
        chosen.truncate(chosen.len() - opt.len());
        if found {
            return true;
        }
    }
    false
}

fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn combinations<T: Clone>(items: &[T], k: usize, out: &mut Vec<Vec<T>>) {
    fn go<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::new(), out);
}

/// Non-decreasing sequences of `k` sizes drawn from `sizes` summing to `total`.
fn size_profiles(sizes: &[usize], k: usize, total: usize) -> Vec<Vec<usize>> {
    fn go(sizes: &[usize], k: usize, total: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for (i, &s) in sizes.iter().enumerate().skip(from) {
            if s <= total {
                cur.push(s);
                go(sizes, k, total - s, i, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(sizes, k, total, 0, &mut Vec::new(), &mut out);
    out
}

/// Visits the non-empty subsets of `starting` with at most
/// `caps.max_clauses` clauses: fewer clauses first, then fewer literals,
/// then printed order. Stops when `f` breaks. Returns the number visited,
/// or `CapExceeded` when the next batch would pass `caps.max_candidates`.
pub fn for_each_candidate(
    starting: &ClauseSet,
    caps: &Caps,
    f: &mut dyn FnMut(&ClauseSet) -> ControlFlow<()>,
) -> Result<usize, SolverError> {
    let mut by_size: BTreeMap<usize, Vec<&Clause>> = BTreeMap::new();
    for c in starting {
        by_size.entry(c.len()).or_default().push(c);
    }
    let sizes: Vec<usize> = by_size.keys().copied().collect();
    let largest = sizes.last().copied().unwrap_or(0);
    let mut seen = 0usize;
    for k in 1..=caps.max_clauses.min(starting.len()) {
        for total in k..=k * largest {
            let profiles = size_profiles(&sizes, k, total);
            let batch_size: u128 = profiles
                .iter()
                .map(|prof| {
                    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                    for s in prof {
                        *counts.entry(*s).or_default() += 1;
                    }
                    counts.iter().map(|(s, c)| choose(by_size[s].len(), *c)).product::<u128>()
                })
                .sum();
            if batch_size == 0 {
                continue;
            }
            if seen as u128 + batch_size > caps.max_candidates as u128 {
                return Err(SolverError::CapExceeded(SearchStats {
                    candidates_examined: seen,
                    cap_hit: true,
                    ..SearchStats::default()
                }));
            }
            let mut batch: Vec<(String, ClauseSet)> = Vec::new();
            for prof in profiles {
                let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                for s in &prof {
                    *counts.entry(*s).or_default() += 1;
                }
                let mut partial: Vec<ClauseSet> = vec![ClauseSet::new()];
                for (s, c) in counts {
                    let mut combos = Vec::new();
                    combinations(&by_size[&s], c, &mut combos);
                    partial = partial
                        .into_iter()
                        .flat_map(|p| {
                            combos.iter().map(move |combo| {
                                let mut p = p.clone();
                                p.extend(combo.iter().map(|c| (*c).clone()));
                                p
                            })
                        })
                        .collect();
                }
                batch.extend(partial.into_iter().map(|cs| (clause_set_to_string(&cs), cs)));
            }
            batch.sort();
            for (_, cs) in batch {
                seen += 1;
                if f(&cs).is_break() {
                    return Ok(seen);
                }
            }
        }
    }
    Ok(seen)
}

/// The candidate sets of `starting` that pass the right filter.
pub fn cl_filter(
    starting: &ClauseSet,
    sehs: &Sehs,
    leaves: &[PartitionedLeaf],
    caps: &Caps,
) -> Result<Vec<ClauseSet>, SolverError> {
    let mut out = Vec::new();
    for_each_candidate(starting, caps, &mut |cs| {
        if in_cl(sehs, leaves, cs) {
            out.push(cs.clone());
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The members of `cl` that pass the left filter.
pub fn sol_filter(
    cl: &[ClauseSet],
    sehs: &Sehs,
    leaves: &[PartitionedLeaf],
    reading: AllowedReading,
) -> Vec<ClauseSet> {
    cl.iter().filter(|cs| in_sol(sehs, leaves, cs, reading)).cloned().collect()
}
