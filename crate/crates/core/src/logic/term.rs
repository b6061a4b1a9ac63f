use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

/// First-order term. Constants are nullary applications.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

/// Path into a term: successive argument indices.
pub type Position = Vec<usize>;

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::App(name.into(), Vec::new())
    }

    pub fn app(f: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App(f.into(), args)
    }

    /// Unary application, the most common shape in the benchmark families.
    pub fn un(f: impl Into<String>, arg: Term) -> Term {
        Term::App(f.into(), vec![arg])
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn contains_var(&self, v: &str) -> bool {
        match self {
            Term::Var(w) => w == v,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(v)),
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// Number of symbol occurrences (variables and function symbols).
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    /// Counts occurrences of `needle` as a subterm.
    pub fn occurrences_of(&self, needle: &Term) -> usize {
        if self == needle {
            return 1;
        }
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => args.iter().map(|a| a.occurrences_of(needle)).sum(),
        }
    }

    pub fn substitute(&self, sigma: &Substitution) -> Term {
        match self {
            Term::Var(v) => sigma.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| a.substitute(sigma)).collect()),
        }
    }

    pub fn subterm_at(&self, pos: &[usize]) -> Option<&Term> {
        match pos.split_first() {
            None => Some(self),
            Some((&i, rest)) => match self {
                Term::App(_, args) => args.get(i)?.subterm_at(rest),
                Term::Var(_) => None,
            },
        }
    }

    pub fn replace_at(&self, pos: &[usize], new: &Term) -> Option<Term> {
        match pos.split_first() {
            None => Some(new.clone()),
            Some((&i, rest)) => match self {
                Term::App(f, args) => {
                    let mut args = args.clone();
                    let child = args.get(i)?.replace_at(rest, new)?;
                    args[i] = child;
                    Some(Term::App(f.clone(), args))
                }
                Term::Var(_) => None,
            },
        }
    }

    /// All positions in pre-order, including the root.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.walk_positions(&mut cur, &mut out);
        out
    }

    fn walk_positions(&self, cur: &mut Position, out: &mut Vec<Position>) {
        out.push(cur.clone());
        if let Term::App(_, args) = self {
            for (i, a) in args.iter().enumerate() {
                cur.push(i);
                a.walk_positions(cur, out);
                cur.pop();
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(g, args) if args.is_empty() => f.write_str(g),
            Term::App(g, args) => {
                write!(f, "({g}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Simultaneous substitution of terms for variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Substitution(BTreeMap<String, Term>);

impl Substitution {
    pub fn new() -> Self {
        Substitution(BTreeMap::new())
    }

    pub fn single(v: impl Into<String>, t: Term) -> Self {
        let mut s = Substitution::new();
        s.insert(v, t);
        s
    }

    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, Term)>,
        S: Into<String>,
    {
        let mut s = Substitution::new();
        for (v, t) in pairs {
            s.insert(v, t);
        }
        s
    }

    pub fn insert(&mut self, v: impl Into<String>, t: Term) {
        self.0.insert(v.into(), t);
    }

    pub fn get(&self, v: &str) -> Option<&Term> {
        self.0.get(v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn domain(&self) -> impl Iterator<Item = &String> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Term)> {
        self.0.iter()
    }

    /// Variables occurring in the range terms.
    pub fn range_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for t in self.0.values() {
            t.collect_vars(&mut out);
        }
        out
    }

    /// Drops the binding for `v`; used when passing under a binder of `v`.
    pub fn without(&self, v: &str) -> Substitution {
        let mut s = self.clone();
        s.0.remove(v);
        s
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (v, t)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}\\{t}")?;
        }
        f.write_str("]")
    }
}
