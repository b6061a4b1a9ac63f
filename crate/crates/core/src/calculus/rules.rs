//! Inference rules of G3c with cut, as premise shapes over set sequents.

use std::fmt;

use serde::Serialize;

use crate::logic::{Formula, LogicError, Sequent, Side, Substitution, Term};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleLabel {
    Axiom,
    NonTautLeaf,
    AndL,
    AndR,
    OrL,
    OrR,
    ImpL,
    ImpR,
    NegL,
    NegR,
    ForallL(Term),
    ForallR(String),
    ExistsL(String),
    ExistsR(Term),
    Cut(Formula),
}

impl RuleLabel {
    pub fn name(&self) -> &'static str {
        match self {
            RuleLabel::Axiom => "axiom",
            RuleLabel::NonTautLeaf => "open",
            RuleLabel::AndL => "and-l",
            RuleLabel::AndR => "and-r",
            RuleLabel::OrL => "or-l",
            RuleLabel::OrR => "or-r",
            RuleLabel::ImpL => "imp-l",
            RuleLabel::ImpR => "imp-r",
            RuleLabel::NegL => "not-l",
            RuleLabel::NegR => "not-r",
            RuleLabel::ForallL(_) => "forall-l",
            RuleLabel::ForallR(_) => "forall-r",
            RuleLabel::ExistsL(_) => "exists-l",
            RuleLabel::ExistsR(_) => "exists-r",
            RuleLabel::Cut(_) => "cut",
        }
    }

    pub fn is_weak_quantifier(&self) -> bool {
        matches!(self, RuleLabel::ForallL(_) | RuleLabel::ExistsR(_))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, RuleLabel::Axiom | RuleLabel::NonTautLeaf)
    }

    /// Side on which this rule's principal formula lives, if it has one.
    pub fn principal_side(&self) -> Option<Side> {
        match self {
            RuleLabel::AndL | RuleLabel::OrL | RuleLabel::ImpL | RuleLabel::NegL => Some(Side::Ant),
            RuleLabel::ForallL(_) | RuleLabel::ExistsL(_) => Some(Side::Ant),
            RuleLabel::AndR | RuleLabel::OrR | RuleLabel::ImpR | RuleLabel::NegR => Some(Side::Suc),
            RuleLabel::ForallR(_) | RuleLabel::ExistsR(_) => Some(Side::Suc),
            RuleLabel::Axiom | RuleLabel::NonTautLeaf | RuleLabel::Cut(_) => None,
        }
    }
}

impl fmt::Display for RuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleLabel::ForallL(t) | RuleLabel::ExistsR(t) => write!(f, "{} {t}", self.name()),
            RuleLabel::ForallR(v) | RuleLabel::ExistsL(v) => write!(f, "{} {v}", self.name()),
            RuleLabel::Cut(c) => write!(f, "cut {c}"),
            _ => f.write_str(self.name()),
        }
    }
}

/// How one premise arises from the conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PremiseShape {
    pub drop_principal: bool,
    pub add: Vec<(Side, Formula)>,
}

fn shape(drop_principal: bool, add: Vec<(Side, Formula)>) -> PremiseShape {
    PremiseShape { drop_principal, add }
}

/// Propositional rule for a compound, unquantified formula on `side`.
pub fn propositional_rule(side: Side, f: &Formula) -> Option<(RuleLabel, Vec<PremiseShape>)> {
    use Side::{Ant, Suc};
    let (a, b) = match f {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
        Formula::Not(a) => ((**a).clone(), (**a).clone()),
        _ => return None,
    };
    Some(match (f, side) {
        (Formula::And(..), Ant) => (RuleLabel::AndL, vec![shape(true, vec![(Ant, a), (Ant, b)])]),
        (Formula::And(..), Suc) => (RuleLabel::AndR, vec![shape(true, vec![(Suc, a)]), shape(true, vec![(Suc, b)])]),
        (Formula::Or(..), Ant) => (RuleLabel::OrL, vec![shape(true, vec![(Ant, a)]), shape(true, vec![(Ant, b)])]),
        (Formula::Or(..), Suc) => (RuleLabel::OrR, vec![shape(true, vec![(Suc, a), (Suc, b)])]),
        (Formula::Imp(..), Ant) => (RuleLabel::ImpL, vec![shape(true, vec![(Suc, a)]), shape(true, vec![(Ant, b)])]),
        (Formula::Imp(..), Suc) => (RuleLabel::ImpR, vec![shape(true, vec![(Ant, a), (Suc, b)])]),
        (Formula::Not(..), Ant) => (RuleLabel::NegL, vec![shape(true, vec![(Suc, a)])]),
        (Formula::Not(..), Suc) => (RuleLabel::NegR, vec![shape(true, vec![(Ant, a)])]),
        _ => unreachable!(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeError {
    PrincipalMismatch,
    Logic(LogicError),
}

/// Premise shapes for `rule` applied to `principal` (absent for cut and leaves).
pub fn premise_shapes(rule: &RuleLabel, principal: Option<&Formula>) -> Result<Vec<PremiseShape>, ShapeError> {
    use Side::{Ant, Suc};
    let instantiate =
        |v: &str, body: &Formula, t: Term| body.substitute(&Substitution::single(v, t)).map_err(ShapeError::Logic);
    match (rule, principal) {
        (RuleLabel::Axiom | RuleLabel::NonTautLeaf, None) => Ok(Vec::new()),
        (RuleLabel::Cut(c), None) => {
            Ok(vec![shape(false, vec![(Suc, c.clone())]), shape(false, vec![(Ant, c.clone())])])
        }
        (RuleLabel::ForallL(t), Some(Formula::Forall(v, body))) => {
            Ok(vec![shape(false, vec![(Ant, instantiate(v, body, t.clone())?)])])
        }
        (RuleLabel::ExistsR(t), Some(Formula::Exists(v, body))) => {
            Ok(vec![shape(false, vec![(Suc, instantiate(v, body, t.clone())?)])])
        }
        (RuleLabel::ForallR(a), Some(Formula::Forall(v, body))) => {
            Ok(vec![shape(true, vec![(Suc, instantiate(v, body, Term::var(a.clone()))?)])])
        }
        (RuleLabel::ExistsL(a), Some(Formula::Exists(v, body))) => {
            Ok(vec![shape(true, vec![(Ant, instantiate(v, body, Term::var(a.clone()))?)])])
        }
        (r, Some(f)) => match r.principal_side().and_then(|side| propositional_rule(side, f)) {
            Some((label, shapes)) if &label == r => Ok(shapes),
            _ => Err(ShapeError::PrincipalMismatch),
        },
        _ => Err(ShapeError::PrincipalMismatch),
    }
}

pub fn apply_shape(s: &Sequent, principal: Option<(Side, &Formula)>, sh: &PremiseShape) -> Sequent {
    let mut out = s.clone();
    if sh.drop_principal {
        if let Some((side, f)) = principal {
            out.side_mut(side).remove(f);
        }
    }
    for (side, f) in &sh.add {
        out.side_mut(*side).insert(f.clone());
    }
    out
}
