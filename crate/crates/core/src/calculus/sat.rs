//! Propositional validity of sequents: Tseitin encoding plus a small DPLL.
//!
//! Atoms are propositional variables. Quantified subformulas are treated
//! as opaque propositional variables as well.

use std::collections::HashMap;

use crate::logic::{Formula, Sequent};

#[derive(Default)]
struct Encoder {
    ids: HashMap<Formula, i32>,
    next: i32,
    clauses: Vec<Vec<i32>>,
}

impl Encoder {
    fn fresh(&mut self) -> i32 {
        self.next += 1;
        self.next
    }

    fn encode(&mut self, f: &Formula) -> i32 {
        if let Formula::Not(a) = f {
            return -self.encode(a);
        }
        if let Some(&v) = self.ids.get(f) {
            return v;
        }
        let v = match f {
            Formula::Atom(_) | Formula::Forall(..) | Formula::Exists(..) => self.fresh(),
            Formula::And(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.extend([vec![-v, a], vec![-v, b], vec![v, -a, -b]]);
                v
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.extend([vec![-v, a, b], vec![v, -a], vec![v, -b]]);
                v
            }
            Formula::Imp(a, b) => {
                let (a, b) = (-self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.extend([vec![-v, a, b], vec![v, -a], vec![v, -b]]);
                v
            }
            Formula::Not(_) => unreachable!(),
        };
        self.ids.insert(f.clone(), v);
        v
    }
}

struct Solver<'a> {
    clauses: &'a [Vec<i32>],
    value: Vec<i8>,
}

impl Solver<'_> {
    fn lit_value(&self, l: i32) -> i8 {
        let v = self.value[l.unsigned_abs() as usize];
        if l > 0 {
            v
        } else {
            -v
        }
    }

    fn set(&mut self, l: i32) {
        self.value[l.unsigned_abs() as usize] = if l > 0 { 1 } else { -1 };
    }

    fn undo(&mut self, trail: &[i32]) {
        for &l in trail {
            self.value[l.unsigned_abs() as usize] = 0;
        }
    }

    /// Unit propagation; `false` on conflict. Assigned literals go to `trail`.
    fn propagate(&mut self, trail: &mut Vec<i32>) -> bool {
        loop {
            let mut changed = false;
            for c in self.clauses {
                let mut open = None;
                let mut n_open = 0;
                let mut sat = false;
                for &l in c {
                    match self.lit_value(l) {
                        1 => {
                            sat = true;
                            break;
                        }
                        0 => {
                            n_open += 1;
                            open = Some(l);
                        }
                        _ => {}
                    }
                }
                if sat {
                    continue;
                }
                match n_open {
                    0 => return false,
                    1 => {
                        let l = open.unwrap();
                        self.set(l);
                        trail.push(l);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn branch_literal(&self) -> Option<i32> {
        for c in self.clauses {
            if c.iter().any(|&l| self.lit_value(l) == 1) {
                continue;
            }
            if let Some(&l) = c.iter().find(|&&l| self.lit_value(l) == 0) {
                return Some(l);
            }
        }
        None
    }

    fn solve(&mut self) -> bool {
        let mut trail = Vec::new();
        if !self.propagate(&mut trail) {
            self.undo(&trail);
            return false;
        }
        let Some(l) = self.branch_literal() else {
            return true;
        };
        for choice in [l, -l] {
            self.set(choice);
            if self.solve() {
                return true;
            }
            self.undo(&[choice]);
        }
        self.undo(&trail);
        false
    }
}

/// Whether the conjunction of `pos` and the negations of `neg` is satisfiable.
pub fn satisfiable<'a>(pos: impl IntoIterator<Item = &'a Formula>, neg: impl IntoIterator<Item = &'a Formula>) -> bool {
    let mut enc = Encoder::default();
    for f in pos {
        let l = enc.encode(f);
        enc.clauses.push(vec![l]);
    }
    for f in neg {
        let l = enc.encode(f);
        enc.clauses.push(vec![-l]);
    }
    let mut s = Solver { clauses: &enc.clauses, value: vec![0; enc.next as usize + 1] };
    s.solve()
}

/// Propositional validity of `Γ ⊢ Δ`, i.e. unsatisfiability of `Γ, ¬Δ`.
pub fn is_tautology(s: &Sequent) -> bool {
    !satisfiable(&s.ant, &s.suc)
}
