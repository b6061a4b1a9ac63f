//! Tracking where formula occurrences come from.
//!
//! Sequents are sets, so one formula may descend from several sources; the
//! origins of merged occurrences are united.

use std::collections::BTreeMap;

use serde::Serialize;

use super::derivation::DerivationTree;
use super::proof::Proof;
use super::rules::{premise_shapes, propositional_rule, PremiseShape, RuleLabel};
use super::CalculusError;
use crate::logic::{Formula, Sequent, Side};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Origins {
    pub end_sequent: bool,
    pub cut_left: bool,
    pub cut_right: bool,
}

impl Origins {
    pub const END: Origins = Origins { end_sequent: true, cut_left: false, cut_right: false };
    pub const CUT_LEFT: Origins = Origins { end_sequent: false, cut_left: true, cut_right: false };
    pub const CUT_RIGHT: Origins = Origins { end_sequent: false, cut_left: false, cut_right: true };

    pub fn union(self, o: Origins) -> Origins {
        Origins {
            end_sequent: self.end_sequent || o.end_sequent,
            cut_left: self.cut_left || o.cut_left,
            cut_right: self.cut_right || o.cut_right,
        }
    }

    pub fn from_cut(self) -> bool {
        self.cut_left || self.cut_right
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TaggedSequent {
    pub ant: BTreeMap<Formula, Origins>,
    pub suc: BTreeMap<Formula, Origins>,
}

impl TaggedSequent {
    /// Every occurrence tagged with `origin`.
    pub fn uniform(s: &Sequent, origin: Origins) -> TaggedSequent {
        TaggedSequent {
            ant: s.ant.iter().map(|f| (f.clone(), origin)).collect(),
            suc: s.suc.iter().map(|f| (f.clone(), origin)).collect(),
        }
    }

    pub fn side(&self, side: Side) -> &BTreeMap<Formula, Origins> {
        match side {
            Side::Ant => &self.ant,
            Side::Suc => &self.suc,
        }
    }

    fn side_mut(&mut self, side: Side) -> &mut BTreeMap<Formula, Origins> {
        match side {
            Side::Ant => &mut self.ant,
            Side::Suc => &mut self.suc,
        }
    }

    pub fn insert(&mut self, side: Side, f: Formula, o: Origins) {
        let e = self.side_mut(side).entry(f).or_default();
        *e = e.union(o);
    }

    pub fn sequent(&self) -> Sequent {
        Sequent { ant: self.ant.keys().cloned().collect(), suc: self.suc.keys().cloned().collect() }
    }

    /// Atoms on both sides, with the origins of the two occurrences.
    pub fn closing_pairs(&self) -> Vec<(&Formula, Origins, Origins)> {
        self.ant
            .iter()
            .filter(|(f, _)| f.is_atomic())
            .filter_map(|(f, o)| self.suc.get(f).map(|o2| (f, *o, *o2)))
            .collect()
    }

    /// Premise for one shape; components inherit the principal's origins.
    fn apply(&self, principal: Option<(Side, &Formula)>, sh: &PremiseShape, fresh: Option<Origins>) -> TaggedSequent {
        let mut out = self.clone();
        let inherited = principal.and_then(|(side, f)| self.side(side).get(f).copied()).or(fresh).unwrap_or_default();
        if sh.drop_principal {
            if let Some((side, f)) = principal {
                out.side_mut(side).remove(f);
            }
        }
        for (side, f) in &sh.add {
            out.insert(*side, f.clone(), inherited);
        }
        out
    }
}

/// Origins of `formula` on `side` at the node reached by `path`, with all
/// end-sequent occurrences tagged as such.
pub fn ancestry(p: &Proof, path: &[usize], side: Side, formula: &Formula) -> Result<Origins, CalculusError> {
    let mut tagged = TaggedSequent::uniform(&p.root.sequent, Origins::END);
    let mut node: &DerivationTree = &p.root;
    for &i in path {
        let next = node.premises.get(i).ok_or_else(|| CalculusError::UnknownNode(path.to_vec()))?;
        let principal = node.principal.as_ref().map(|(s, f)| (*s, f));
        let shapes = premise_shapes(&node.rule, principal.map(|p| p.1))
            .map_err(|_| CalculusError::UnknownNode(path.to_vec()))?;
        let sh = shapes.get(i).ok_or_else(|| CalculusError::UnknownNode(path.to_vec()))?;
        let fresh = match node.rule {
            RuleLabel::Cut(_) if i == 0 => Some(Origins::CUT_LEFT),
            RuleLabel::Cut(_) => Some(Origins::CUT_RIGHT),
            _ => None,
        };
        tagged = tagged.apply(principal, sh, fresh);
        node = next;
    }
    tagged.side(side).get(formula).copied().ok_or_else(|| CalculusError::UnknownOccurrence(formula.to_string()))
}

/// Leaves of the maximal derivation of a tagged sequent.
pub fn tagged_leaves(s: &TaggedSequent) -> Result<Vec<TaggedSequent>, CalculusError> {
    let mut out = Vec::new();
    let mut stack = vec![s.clone()];
    while let Some(cur) = stack.pop() {
        let pick = cur
            .ant
            .keys()
            .map(|f| (Side::Ant, f))
            .chain(cur.suc.keys().map(|f| (Side::Suc, f)))
            .find(|(_, f)| !f.is_atomic());
        match pick {
            None => out.push(cur),
            Some((_, f)) if f.is_quantified() => return Err(CalculusError::NotQuantifierFree(f.to_string())),
            Some((side, f)) => {
                let f = f.clone();
                let (_, shapes) = propositional_rule(side, &f).expect("compound formula");
                for sh in shapes.iter().rev() {
                    stack.push(cur.apply(Some((side, &f)), sh, None));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Term;

    fn p(n: &str) -> Formula {
        Formula::atom("P", vec![Term::constant(n)])
    }

    #[test]
    fn components_inherit_origin() {
        let mut t = TaggedSequent::default();
        t.insert(Side::Ant, Formula::and(p("a"), p("b")), Origins::CUT_RIGHT);
        t.insert(Side::Ant, p("a"), Origins::END);
        t.insert(Side::Suc, p("b"), Origins::END);
        let leaves = tagged_leaves(&t).unwrap();
        assert_eq!(leaves.len(), 1);
        let l = &leaves[0];
        assert_eq!(l.ant[&p("a")], Origins::END.union(Origins::CUT_RIGHT));
        assert_eq!(l.ant[&p("b")], Origins::CUT_RIGHT);
        assert_eq!(l.closing_pairs().len(), 1);
    }
}
