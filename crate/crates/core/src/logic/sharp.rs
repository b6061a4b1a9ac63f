//! Tuple-sharing size of a set of term tuples.
//!
//! Tuples are visited in printed order. A tuple contributes the number of
//! coordinates in which it differs from every tuple already counted.

use super::sequent::sorted_by_print;
use super::term::Term;
use super::LogicError;

struct Tuple<'a>(&'a [Term]);

impl std::fmt::Display for Tuple<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

fn check_arity(tuples: &[Vec<Term>]) -> Result<(), LogicError> {
    if let Some(first) = tuples.first() {
        if let Some(bad) = tuples.iter().find(|t| t.len() != first.len()) {
            return Err(LogicError::MixedArity { expected: first.len(), found: bad.len() });
        }
    }
    Ok(())
}

fn fresh_coordinates(t: &[Term], seen: &[&[Term]]) -> usize {
    (0..t.len()).filter(|&i| seen.iter().all(|r| r[i] != t[i])).count()
}

fn count_in_order(order: &[&[Term]]) -> usize {
    let mut total = 0;
    for (i, t) in order.iter().enumerate() {
        total += fresh_coordinates(t, &order[..i]);
    }
    total
}

fn canonical(tuples: &[Vec<Term>]) -> Vec<&[Term]> {
    let mut uniq: Vec<&[Term]> = tuples.iter().map(Vec::as_slice).collect();
    uniq.sort();
    uniq.dedup();
    sorted_by_print(uniq.into_iter().map(Tuple)).into_iter().map(|t| t.0).collect()
}

/// Duplicates are ignored: the argument is a set.
pub fn sharp_count(tuples: &[Vec<Term>]) -> Result<usize, LogicError> {
    check_arity(tuples)?;
    Ok(count_in_order(&canonical(tuples)))
}

/// Largest set for which the order diagnostic enumerates permutations.
pub const SPREAD_LIMIT: usize = 8;

/// Minimum and maximum of the count over every visiting order. Shows how
/// much the fixed canonical order matters for a given set.
pub fn sharp_count_spread(tuples: &[Vec<Term>]) -> Result<(usize, usize), LogicError> {
    check_arity(tuples)?;
    let mut items = canonical(tuples);
    if items.len() > SPREAD_LIMIT {
        return Err(LogicError::TooLarge { size: items.len(), limit: SPREAD_LIMIT });
    }
    let (mut lo, mut hi) = (usize::MAX, 0);
    permute(&mut items, 0, &mut |order| {
        let c = count_in_order(order);
        lo = lo.min(c);
        hi = hi.max(c);
    });
    if lo == usize::MAX {
        lo = 0;
    }
    Ok((lo, hi))
}

fn permute<'a>(items: &mut Vec<&'a [Term]>, k: usize, visit: &mut dyn FnMut(&[&'a [Term]])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Term {
        Term::constant(s)
    }

    #[test]
    fn small_cases() {
        assert_eq!(sharp_count(&[]).unwrap(), 0);
        assert_eq!(sharp_count(&[vec![c("a"), c("b")]]).unwrap(), 2);
        assert_eq!(sharp_count(&[vec![c("a"), c("b")], vec![c("a"), c("b")]]).unwrap(), 2);
        assert_eq!(sharp_count(&[vec![c("a"), c("b")], vec![c("a"), c("d")]]).unwrap(), 3);
    }

    #[test]
    fn mixed_arity_rejected() {
        assert_eq!(
            sharp_count(&[vec![c("a")], vec![c("a"), c("b")]]),
            Err(LogicError::MixedArity { expected: 1, found: 2 })
        );
    }

    #[test]
    fn spread_brackets_the_canonical_count() {
        let ts = vec![vec![c("a"), c("b")], vec![c("a"), c("c")], vec![c("d"), c("b")], vec![c("d"), c("e")]];
        let (lo, hi) = sharp_count_spread(&ts).unwrap();
        let k = sharp_count(&ts).unwrap();
        assert!(lo <= k && k <= hi);
    }
}
