//! Fixtures and a generator of small random schematic sequents shared by
//! the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use pi2cut::bench::{parse_problem, ProblemFile};
use pi2cut::grammar::{alpha, beta, gstar_of, SchematicPi2Grammar};
use pi2cut::herbrand::PrenexProblem;
use pi2cut::logic::{ClauseSet, Formula, Literal, Signature, Term};
use pi2cut::solver::{
    build_sehs, for_each_candidate, gstar_pool, in_cl, in_sol, naive_pool, partitioned_dnta, starting_set_from_pool,
    AllowedReading, Caps, PartitionedLeaf, Sehs,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const FIXTURES: [&str; 4] = ["crossed_pq", "nested_beta", "split_pq", "split_pq_shared_r"];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.p2"))
}

pub fn fixture(name: &str) -> ProblemFile {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    parse_problem(&text).expect("fixture parses")
}

/// Caps small enough for exhaustive comparison against brute force.
pub const SMALL_CAPS: Caps = Caps { max_clauses: 3, max_clause_size: 2, max_candidates: 100_000 };

pub struct Instance {
    pub problem: PrenexProblem,
    pub grammar: SchematicPi2Grammar,
    pub sehs: Sehs,
    pub leaves: Vec<PartitionedLeaf>,
}

impl Instance {
    pub fn new(problem: PrenexProblem, grammar: SchematicPi2Grammar) -> Option<Instance> {
        let sehs = build_sehs(&problem, &grammar, None).ok()?;
        let leaves = partitioned_dnta(&sehs).ok()?;
        Some(Instance { problem, grammar, sehs, leaves })
    }

    pub fn naive(&self) -> BTreeSet<Literal> {
        naive_pool(&self.sehs, &self.leaves).unwrap_or_default()
    }

    pub fn gstar(&self) -> BTreeSet<Literal> {
        gstar_pool(&gstar_of(&self.grammar), &self.leaves).literals
    }

    pub fn passes(&self, cs: &ClauseSet) -> bool {
        in_cl(&self.sehs, &self.leaves, cs) && in_sol(&self.sehs, &self.leaves, cs, AllowedReading::PerSlot)
    }

    /// Every candidate drawn from the pool, in search order.
    pub fn candidates(&self, pool: &BTreeSet<Literal>, caps: &Caps) -> Vec<ClauseSet> {
        let starting = starting_set_from_pool(pool, caps.max_clause_size);
        let mut out = Vec::new();
        for_each_candidate(&starting, caps, &mut |cs| {
            out.push(cs.clone());
            std::ops::ControlFlow::Continue(())
        })
        .expect("within caps");
        out
    }
}

fn signature() -> Signature {
    let mut sig = Signature::new();
    for (f, a) in [("r1", 0), ("r2", 0), ("c", 0), ("t1", 1), ("t2", 1)] {
        sig.add_function(f, a).unwrap();
    }
    for (p, a) in [("P", 2), ("Q", 2), ("R", 1)] {
        sig.add_predicate(p, a).unwrap();
    }
    sig
}

fn random_formula(rng: &mut ChaCha8Rng, atoms: &[Formula], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        let a = atoms.choose(rng).unwrap().clone();
        return if rng.gen_bool(0.2) { Formula::not(a) } else { a };
    }
    let l = random_formula(rng, atoms, depth - 1);
    let r = random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..4) {
        0 | 1 => Formula::and(l, r),
        2 => Formula::or(l, r),
        _ => Formula::imp(l, r),
    }
}

/// A random problem with one variable per block and a grammar with one or
/// two cut instances on each side. Rejects instances with more than three
/// leaves.
pub fn random_instance(rng: &mut ChaCha8Rng) -> Option<Instance> {
    let u = Term::var("u");
    let v = Term::var("v");
    let t = |i: usize, x: Term| Term::un(format!("t{i}"), x);
    let atom = |p: &str, args: Vec<Term>| Formula::atom(p, args);
    let f_atoms = [
        atom("P", vec![u.clone(), t(1, u.clone())]),
        atom("P", vec![u.clone(), t(2, u.clone())]),
        atom("Q", vec![u.clone(), t(1, u.clone())]),
        atom("Q", vec![u.clone(), t(2, u.clone())]),
        atom("P", vec![u.clone(), Term::constant("c")]),
        atom("R", vec![t(1, u.clone())]),
    ];
    let g_atoms = [
        atom("P", vec![Term::constant("r1"), v.clone()]),
        atom("Q", vec![Term::constant("r1"), v.clone()]),
        atom("P", vec![Term::constant("r2"), v.clone()]),
        atom("Q", vec![Term::constant("c"), v.clone()]),
        atom("R", vec![v.clone()]),
    ];
    let pick = |rng: &mut ChaCha8Rng, from: &[Formula]| -> Vec<Formula> {
        let k = rng.gen_range(1..=3);
        from.choose_multiple(rng, k).cloned().collect()
    };
    let mut fa = pick(rng, &f_atoms);
    let mut ga = pick(rng, &g_atoms);
    // half the instances share a P pattern across the sides, which makes
    // solutions much more common
    let planted = rng.gen_bool(0.5);
    if planted {
        fa.push(f_atoms[0].clone());
        ga.push(g_atoms[0].clone());
    }
    let antecedent = random_formula(rng, &fa, 2);
    let succedent = random_formula(rng, &ga, 2);
    if !antecedent.has_free_var("u") || !succedent.has_free_var("v") {
        return None;
    }
    let problem = PrenexProblem::new(signature(), vec!["u".into()], vec!["v".into()], antecedent, succedent).ok()?;

    let m = rng.gen_range(1..=2);
    let p = rng.gen_range(1..=2);
    let r_choices = [vec![Term::constant("r1"), Term::constant("c")], vec![Term::constant("r2"), t(1, beta(1))]];
    let mut r_terms: Vec<Term> = (0..m).map(|j| r_choices[j].choose(rng).unwrap().clone()).collect();
    if planted {
        r_terms[0] = Term::constant("r1");
    }
    let grammar = SchematicPi2Grammar {
        f_tuples: vec![vec![alpha()]],
        g_tuples: (1..=m).map(|j| vec![beta(j)]).collect(),
        r_terms,
        t_terms: (1..=p).map(|i| t(i, alpha())).collect(),
    };
    let inst = Instance::new(problem, grammar)?;
    (1..=3).contains(&inst.leaves.len()).then_some(inst)
}

/// At most four literals from the union of both pools.
pub fn random_small_pool(rng: &mut ChaCha8Rng, inst: &Instance) -> BTreeSet<Literal> {
    let all: Vec<Literal> = inst.naive().into_iter().chain(inst.gstar()).collect::<BTreeSet<_>>().into_iter().collect();
    let k = all.len().min(4);
    all.choose_multiple(rng, k).cloned().collect()
}

/// `count` accepted random instances from a fixed seed.
pub fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        if let Some(i) = random_instance(&mut rng) {
            out.push(i);
        }
    }
    out
}

fn eval(f: &Formula, val: &dyn Fn(&pi2cut::logic::Atom) -> bool) -> bool {
    match f {
        Formula::Atom(a) => val(a),
        Formula::Not(a) => !eval(a, val),
        Formula::And(a, b) => eval(a, val) && eval(b, val),
        Formula::Or(a, b) => eval(a, val) || eval(b, val),
        Formula::Imp(a, b) => !eval(a, val) || eval(b, val),
        Formula::Forall(..) | Formula::Exists(..) => panic!("oracle is propositional"),
    }
}

/// Truth-table validity of a quantifier-free sequent.
pub fn truth_table_valid(s: &pi2cut::logic::Sequent) -> bool {
    let atoms: Vec<pi2cut::logic::Atom> = s.atoms().into_iter().collect();
    assert!(atoms.len() <= 20, "truth table too large");
    (0u32..1 << atoms.len()).all(|bits| {
        let val = |a: &pi2cut::logic::Atom| {
            let i = atoms.iter().position(|b| b == a).unwrap();
            bits >> i & 1 == 1
        };
        !s.ant.iter().all(|f| eval(f, &val)) || s.suc.iter().any(|f| eval(f, &val))
    })
}
