use super::sehs::Sehs;
use super::SolverError;
use crate::calculus::{is_tautology, tagged_leaves, Origins, TaggedSequent};
use crate::grammar::{X, Y};
use crate::logic::{dnf_of, ClauseSet, Formula, Sequent};

fn cut_matrix(cs: &ClauseSet) -> Result<Formula, SolverError> {
    for l in cs.iter().flatten() {
        if l.vars().iter().any(|v| v != X && v != Y) {
            return Err(SolverError::NotCutLiteral(l.to_string()));
        }
    }
    Ok(dnf_of(cs)?)
}

/// The two halves a solution must prove:
/// `F[U1] |- A[alpha,t_1], .., A[alpha,t_p], G[U2]` and
/// `F[U1], A[r_1,b_1], .., A[r_m,b_m] |- G[U2]`.
pub fn solution_sequents(sehs: &Sehs, cs: &ClauseSet) -> Result<(Sequent, Sequent), SolverError> {
    let eh = sehs.eh(&cut_matrix(cs)?)?;
    let mut left = sehs.reduced.clone();
    left.suc.extend(eh.left_instances());
    let mut right = sehs.reduced.clone();
    right.ant.extend(eh.right_instances());
    Ok((left, right))
}

/// Whether the DNF of `cs` solves the schematic sequent. Equivalent to the
/// tautology check of the whole extended sequent, split at the implication.
pub fn verify_solution(sehs: &Sehs, cs: &ClauseSet) -> Result<bool, SolverError> {
    let (left, right) = solution_sequents(sehs, cs)?;
    Ok(is_tautology(&left) && is_tautology(&right))
}

/// Every axiom of the maximal derivation of the instantiated sequent can be
/// closed by a pair with at least one member from the end-sequent side.
pub fn is_balanced(sehs: &Sehs, cs: &ClauseSet) -> Result<bool, SolverError> {
    let eh = sehs.eh(&cut_matrix(cs)?)?;
    let mut tagged = TaggedSequent::uniform(&sehs.reduced, Origins::END);
    let cut = Formula::imp(
        Formula::or_all(eh.left_instances()).expect("p >= 1"),
        Formula::and_all(eh.right_instances()).expect("m >= 1"),
    );
    tagged.insert(crate::logic::Side::Ant, cut, Origins::CUT_LEFT);
    let mut balanced = true;
    for leaf in tagged_leaves(&tagged)? {
        let pairs = leaf.closing_pairs();
        if pairs.is_empty() {
            return Err(SolverError::NotASolution);
        }
        balanced &= pairs.iter().any(|(_, a, s)| a.end_sequent || s.end_sequent);
    }
    Ok(balanced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{load, CROSSED, CUT_ONLY};

    #[test]
    fn balance() {
        let l = load(CROSSED);
        let p = l.clauses("(P x y)");
        assert!(verify_solution(&l.sehs, &p).unwrap());
        assert!(is_balanced(&l.sehs, &p).unwrap());

        let l = load(CUT_ONLY);
        let cs = l.clauses("(P x y)\n(not (P x c))");
        assert!(verify_solution(&l.sehs, &cs).unwrap());
        assert!(!is_balanced(&l.sehs, &cs).unwrap());
    }

    #[test]
    fn non_solutions() {
        let l = load(CROSSED);
        let both = l.clauses("(P x y) (Q x y)");
        assert!(!verify_solution(&l.sehs, &both).unwrap());
        assert!(matches!(is_balanced(&l.sehs, &both), Err(SolverError::NotASolution)));
        let (left, right) = solution_sequents(&l.sehs, &both).unwrap();
        assert_eq!(left.ant, right.ant.iter().filter(|f| left.ant.contains(*f)).cloned().collect());
    }

    #[test]
    fn foreign_variables_are_rejected() {
        let l = load(CROSSED);
        let mut cs = l.clauses("(P x y)");
        let bad = crate::logic::Literal::pos(crate::logic::Atom::new(
            "P",
            vec![crate::grammar::alpha(), crate::grammar::y()],
        ));
        cs.insert([bad].into_iter().collect());
        assert!(matches!(verify_solution(&l.sehs, &cs), Err(SolverError::NotCutLiteral(_))));
    }
}
