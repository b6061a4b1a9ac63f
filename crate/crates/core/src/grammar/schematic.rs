use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{alpha, beta, beta_name, GrammarError, ALPHA, F_WRAPPER, G_WRAPPER, TAU};
use crate::logic::{Signature, Substitution, Term};

/// Rigid tree grammar with one universal and `m` existential cut
/// nonterminals.
///
/// `f_tuples` and `g_tuples` are the right-hand sides of the start symbol
/// (without their wrappers), `r_terms` the productions of `alpha` and
/// `t_terms` the schematic productions of the betas. The productions of
/// `b_j` are derived as `t_i[alpha := r_j]` and never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchematicPi2Grammar {
    pub f_tuples: Vec<Vec<Term>>,
    pub g_tuples: Vec<Vec<Term>>,
    pub r_terms: Vec<Term>,
    pub t_terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    NoRTerms,
    NoTTerms,
    TupleLength {
        block: &'static str,
        expected: usize,
        found: usize,
    },
    /// A variable outside the allowed set; `what` names the offending term.
    ForbiddenVariable {
        what: String,
        var: String,
    },
    StartSymbolInProduction(String),
    Arity(String),
    DuplicateProduction(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoRTerms => f.write_str("alpha has no productions"),
            Violation::NoTTerms => f.write_str("the betas have no schematic productions"),
            Violation::TupleLength { block, expected, found } => {
                write!(f, "{block} tuple of length {found}, expected {expected}")
            }
            Violation::ForbiddenVariable { what, var } => write!(f, "{what} may not contain {var}"),
            Violation::StartSymbolInProduction(t) => write!(f, "start symbol occurs in {t}"),
            Violation::Arity(msg) => f.write_str(msg),
            Violation::DuplicateProduction(t) => write!(f, "duplicate production {t}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn tuple_string(t: &[Term]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(" "))
}

impl SchematicPi2Grammar {
    pub fn m(&self) -> usize {
        self.r_terms.len()
    }

    pub fn p(&self) -> usize {
        self.t_terms.len()
    }

    /// The productions of `b_j` (1-based): `t_i[alpha := r_j]`.
    pub fn beta_productions(&self, j: usize) -> Vec<Term> {
        let s = Substitution::single(ALPHA, self.r_terms[j - 1].clone());
        self.t_terms.iter().map(|t| t.substitute(&s)).collect()
    }

    pub fn betas(&self) -> Vec<Term> {
        (1..=self.m()).map(beta).collect()
    }

    /// Checks the variable conditions, tuple lengths and optionally arities.
    /// Duplicate productions are violations in strict mode and warnings otherwise.
    pub fn validate(&self, sig: Option<&Signature>, strict: bool) -> ValidationReport {
        let mut rep = ValidationReport::default();
        if self.r_terms.is_empty() {
            rep.violations.push(Violation::NoRTerms);
        }
        if self.t_terms.is_empty() {
            rep.violations.push(Violation::NoTTerms);
        }
        let m = self.m();
        let all_betas: BTreeSet<String> = (1..=m).map(beta_name).collect();

        let allow = |what: String, t: &Term, allowed: &BTreeSet<String>, rep: &mut ValidationReport| {
            for v in t.vars() {
                if !allowed.contains(&v) {
                    rep.violations.push(Violation::ForbiddenVariable { what: what.clone(), var: v });
                }
            }
            if t.contains_var(TAU) {
                rep.violations.push(Violation::StartSymbolInProduction(what.clone()));
            }
            if let Some(sig) = sig {
                if let Err(e) = sig.check_term(t) {
                    rep.violations.push(Violation::Arity(format!("{what}: {e}")));
                }
            }
        };

        let only_alpha: BTreeSet<String> = [ALPHA.to_string()].into();
        for (block, tuples, allowed) in [("f", &self.f_tuples, &only_alpha), ("g", &self.g_tuples, &all_betas)] {
            if let Some(first) = tuples.first() {
                for t in tuples.iter() {
                    if t.len() != first.len() {
                        rep.violations.push(Violation::TupleLength { block, expected: first.len(), found: t.len() });
                    }
                }
            }
            for tuple in tuples.iter() {
                for t in tuple {
                    allow(format!("{block}-tuple {}", tuple_string(tuple)), t, allowed, &mut rep);
                }
            }
        }
        for (j, r) in self.r_terms.iter().enumerate() {
            let earlier: BTreeSet<String> = (1..=j).map(beta_name).collect();
            allow(format!("r-term {} ({r})", j + 1), r, &earlier, &mut rep);
        }
        for (i, t) in self.t_terms.iter().enumerate() {
            allow(format!("t-term {} ({t})", i + 1), t, &only_alpha, &mut rep);
        }

        let mut dups = Vec::new();
        let mut seen = BTreeSet::new();
        for r in &self.r_terms {
            if !seen.insert(("r", tuple_string(std::slice::from_ref(r)))) {
                dups.push(Violation::DuplicateProduction(format!("alpha -> {r}")));
            }
        }
        for t in &self.t_terms {
            if !seen.insert(("t", t.to_string())) {
                dups.push(Violation::DuplicateProduction(format!("beta -> {t}")));
            }
        }
        for (block, tuples) in [("f", &self.f_tuples), ("g", &self.g_tuples)] {
            for tuple in tuples.iter() {
                if !seen.insert((block, tuple_string(tuple))) {
                    dups.push(Violation::DuplicateProduction(format!("tau -> {block}{}", tuple_string(tuple))));
                }
            }
        }
        if strict {
            rep.violations.extend(dups);
        } else {
            rep.warnings.extend(dups);
        }
        rep
    }

    fn ensure_valid(&self) -> Result<(), GrammarError> {
        let rep = self.validate(None, false);
        if rep.is_ok() {
            Ok(())
        } else {
            Err(GrammarError::Invalid(rep.violations))
        }
    }

    /// Every assignment of beta values, built bottom-up: `b_k` takes
    /// `t_i[alpha := r_k[b_1..b_{k-1}]]` for each choice of `i`.
    fn beta_assignments(&self, upto: usize) -> Vec<Substitution> {
        let mut layer = vec![Substitution::new()];
        for k in 1..=upto {
            let mut next = Vec::new();
            for s in &layer {
                let r = self.r_terms[k - 1].substitute(s);
                for t in &self.t_terms {
                    let mut s2 = s.clone();
                    s2.insert(beta_name(k), t.substitute(&Substitution::single(ALPHA, r.clone())));
                    next.push(s2);
                }
            }
            layer = next;
        }
        layer
    }

    /// Values `alpha` can take in a rigid derivation: `r_j` under every
    /// assignment of the betas it depends on.
    pub fn alpha_values(&self) -> Result<BTreeSet<Term>, GrammarError> {
        self.ensure_valid()?;
        let mut out = BTreeSet::new();
        for j in 1..=self.m() {
            for s in self.beta_assignments(j - 1) {
                out.insert(self.r_terms[j - 1].substitute(&s));
            }
        }
        Ok(out)
    }

    /// Instances of the f-tuples and g-tuples generated by the grammar.
    pub fn instance_tuples(&self) -> Result<(BTreeSet<Vec<Term>>, BTreeSet<Vec<Term>>), GrammarError> {
        let mut f = BTreeSet::new();
        for a in self.alpha_values()? {
            let s = Substitution::single(ALPHA, a);
            for u in &self.f_tuples {
                f.insert(u.iter().map(|t| t.substitute(&s)).collect());
            }
        }
        let mut g = BTreeSet::new();
        for s in self.beta_assignments(self.m()) {
            for v in &self.g_tuples {
                g.insert(v.iter().map(|t| t.substitute(&s)).collect());
            }
        }
        Ok((f, g))
    }

    /// Rigid language: `alpha` and each beta take one value per derivation.
    pub fn rigid_language(&self) -> Result<BTreeSet<Term>, GrammarError> {
        let (f, g) = self.instance_tuples()?;
        Ok(f.into_iter()
            .map(|t| Term::app(F_WRAPPER, t))
            .chain(g.into_iter().map(|t| Term::app(G_WRAPPER, t)))
            .collect())
    }

    /// Whether every wrapped term of `terms` is in the rigid language.
    pub fn covers(&self, terms: &BTreeSet<Term>) -> Result<bool, GrammarError> {
        let k = self.f_tuples.first().map(Vec::len);
        let l = self.g_tuples.first().map(Vec::len);
        for t in terms {
            match t {
                Term::App(w, args) if w == F_WRAPPER && k.is_none_or(|k| k == args.len()) => {}
                Term::App(w, args) if w == G_WRAPPER && l.is_none_or(|l| l == args.len()) => {}
                other => return Err(GrammarError::BadWrappedTerm(other.to_string())),
            }
        }
        let lang = self.rigid_language()?;
        Ok(terms.is_subset(&lang))
    }

    pub fn nonterminals(&self) -> Vec<Term> {
        std::iter::once(alpha()).chain(self.betas()).collect()
    }
}

impl fmt::Display for SchematicPi2Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut taus: Vec<String> = self.f_tuples.iter().map(|t| format!("{F_WRAPPER}{}", tuple_string(t))).collect();
        taus.extend(self.g_tuples.iter().map(|t| format!("{G_WRAPPER}{}", tuple_string(t))));
        writeln!(f, "{TAU} -> {}", taus.join(" | "))?;
        let rs: Vec<String> = self.r_terms.iter().map(|t| t.to_string()).collect();
        writeln!(f, "{ALPHA} -> {}", rs.join(" | "))?;
        for j in 1..=self.m() {
            let ps: Vec<String> = self.beta_productions(j).iter().map(|t| t.to_string()).collect();
            writeln!(f, "{} -> {}", beta_name(j), ps.join(" | "))?;
        }
        Ok(())
    }
}
