//! Runs the ten acceptance criteria and prints one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use common::{fixture, random_instances, random_small_pool, truth_table_valid, Instance, SMALL_CAPS};
use pi2cut::bench::{generate_sn, minimal_cutfree_instances};
use pi2cut::calculus::io::{read_proof, write_proof};
use pi2cut::calculus::{check_proof, is_tautology, maximal_derivation, non_tautological_leaves, Proof};
use pi2cut::herbrand::{
    eh_build, herbrand_check, proof_from_eh, proof_from_herbrand, ExtendedHerbrandSequent, HerbrandInstanceSet,
};
use pi2cut::logic::syntax::{parse_term, VarScope};
use pi2cut::logic::{clause_set_to_string, dnf_of, Formula, Sequent, Signature, Term};
use pi2cut::sexpr::parse_all;
use pi2cut::solver::{
    cl_filter, introduce_cut, is_balanced, parse_starting_set, sol_filter, starting_set_from_pool, verify_solution,
    AllowedReading, Caps, PoolChoice, SolveOptions, SolverError,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn ground(text: &str, sig: &Signature) -> Term {
    let e = parse_all(text).unwrap().remove(0);
    parse_term(&e, sig, &VarScope::only(Vec::<String>::new())).unwrap()
}

fn xy_matrix(text: &str, sig: &Signature) -> Formula {
    dnf_of(&parse_starting_set(text, sig).unwrap()).unwrap()
}

fn nested_beta() -> Outcome {
    let start = Instant::now();
    let pf = fixture("nested_beta");
    let sig = &pf.problem.signature;
    let eh = ExtendedHerbrandSequent::new(pf.problem.clone(), pf.grammar.clone(), xy_matrix("(P x y)", sig))
        .map_err(|e| e.to_string())?;
    let rep = eh_build(&eh).map_err(|e| e.to_string())?;
    ensure(rep.tautology, || "EH is not a tautology".into())?;
    ensure(rep.complexity == 7, || format!("|EH| = {}", rep.complexity))?;

    let h = pf.herbrand_terms.clone().ok_or("fixture has no herbrand-terms")?;
    let inst = HerbrandInstanceSet::from_term_set(&h).map_err(|e| e.to_string())?;
    let chk = herbrand_check(&pf.problem, &inst).map_err(|e| e.to_string())?;
    ensure(chk.valid, || "H is not valid".into())?;
    ensure(chk.complexity == 9, || format!("|H| = {}", chk.complexity))?;

    let lang = pf.grammar.rigid_language().map_err(|e| e.to_string())?;
    ensure(lang == h && lang.len() == 7, || format!("rigid language has {} terms and differs from H", lang.len()))?;
    let excluded = Term::app("hG", vec![ground("(t1 r1)", sig), ground("(t1 (r2 (t2 r1)))", sig)]);
    ensure(!lang.contains(&excluded), || format!("{excluded} is in the rigid language"))?;
    within(start, Duration::from_secs(1), "nested beta")?;
    Ok(format!("|H| = {}, |EH| = {}, {} rigid terms", chk.complexity, rep.complexity, lang.len()))
}

fn unsolvable() -> Outcome {
    let mut parts = Vec::new();
    for name in ["split_pq", "split_pq_shared_r"] {
        let pf = fixture(name);
        for pool in [PoolChoice::GStar, PoolChoice::Naive] {
            let start = Instant::now();
            let label = format!("{name}/{pool:?}");
            let opts = SolveOptions { pool, ..SolveOptions::default() };
            match introduce_cut(&pf.problem, &pf.grammar, &opts) {
                Err(SolverError::NoSolutionUnderPool(s)) => parts.push(format!("{label}: {}", s.candidates_examined)),
                Err(e) => return Err(format!("{label}: {e}")),
                Ok(out) => return Err(format!("{label}: found {:?}", out.report.solutions)),
            }
            within(start, Duration::from_secs(5), &label)?;
        }
    }
    Ok(format!("no solution; candidates {}", parts.join(", ")))
}

fn sol_example() -> Outcome {
    let start = Instant::now();
    let pf = fixture("crossed_pq");
    let inst = Instance::new(pf.problem.clone(), pf.grammar.clone()).ok_or("fixture does not build")?;
    let sig = &pf.problem.signature;
    let caps = Caps::default();

    let both = parse_starting_set("(P x y) (Q x y)", sig).unwrap();
    let cl = cl_filter(&both, &inst.sehs, &inst.leaves, &caps).map_err(|e| e.to_string())?;
    ensure(cl == vec![both.clone()], || format!("Cl = {:?}", cl.iter().map(clause_set_to_string).collect::<Vec<_>>()))?;
    let sol = sol_filter(&cl, &inst.sehs, &inst.leaves, AllowedReading::PerSlot);
    ensure(sol.is_empty(), || "Sol of {{P,Q}} is not empty".into())?;

    let p = parse_starting_set("(P x y)", sig).unwrap();
    let cl = cl_filter(&p, &inst.sehs, &inst.leaves, &caps).map_err(|e| e.to_string())?;
    let sol = sol_filter(&cl, &inst.sehs, &inst.leaves, AllowedReading::PerSlot);
    ensure(sol == vec![p.clone()], || format!("Sol = {:?}", sol.iter().map(clause_set_to_string).collect::<Vec<_>>()))?;
    ensure(verify_solution(&inst.sehs, &p).map_err(|e| e.to_string())?, || "{{P}} does not verify".into())?;
    let eh = inst.sehs.eh(&dnf_of(&p).unwrap()).map_err(|e| e.to_string())?;
    ensure(truth_table_valid(&eh.sequent().unwrap()), || "truth table rejects {{P}}".into())?;
    within(start, Duration::from_secs(1), "sol example")?;
    Ok(format!("{} leaves, Cl = {{A}}, Sol = {{}}; {{{{P(x,y)}}}} solves", inst.leaves.len()))
}

fn sn_benchmark() -> Outcome {
    let mut qs = Vec::new();
    for n in 2..=5 {
        let start = Instant::now();
        let sn = generate_sn(n).map_err(|e| e.to_string())?;
        let opts = SolveOptions { all: true, ..SolveOptions::default() };
        let out = introduce_cut(&sn.problem, &sn.grammar, &opts).map_err(|e| format!("n={n}: {e}"))?;
        let r = &out.report;
        let pool: Vec<String> = r.pool.iter().map(|l| l.to_string()).collect();
        ensure(pool == ["(P x (f y))"], || format!("n={n}: pool {pool:?}"))?;
        ensure(r.solutions == ["{{(P x (f y))}}"], || format!("n={n}: solutions {:?}", r.solutions))?;
        check_proof(&out.proof).map_err(|e| format!("n={n}: {e}"))?;
        let q = r.proof_complexity.quantifier;
        ensure(q == 4 * n + 3, || format!("n={n}: q = {q}"))?;
        within(start, Duration::from_secs(30), &format!("n={n}"))?;
        qs.push(q.to_string());
    }
    Ok(format!("q = {} for n = 2..5", qs.join(", ")))
}

fn cutfree_bound() -> Outcome {
    let mut parts = Vec::new();
    for n in [2usize, 3] {
        let start = Instant::now();
        let cf = minimal_cutfree_instances(n).map_err(|e| e.to_string())?;
        ensure(cf.midsequent_valid, || format!("n={n}: midsequent not valid"))?;
        let bound = n.pow(n as u32);
        ensure(cf.counted_q > bound, || format!("n={n}: q = {} <= {bound}", cf.counted_q))?;
        within(start, Duration::from_secs(60), &format!("n={n}"))?;
        parts.push(format!("n={n}: {} > {bound}", cf.counted_q));
    }
    Ok(parts.join(", "))
}

const RANDOM_SEED: u64 = 0x5eed;
const RANDOM_COUNT: usize = 300;

fn soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut checked, mut with_solution) = (0, 0);
    for (i, inst) in random_instances(RANDOM_SEED, RANDOM_COUNT).iter().enumerate() {
        let pool = random_small_pool(&mut rng, inst);
        let starting = starting_set_from_pool(&pool, SMALL_CAPS.max_clause_size);
        let cl = cl_filter(&starting, &inst.sehs, &inst.leaves, &SMALL_CAPS).map_err(|e| e.to_string())?;
        let sol = sol_filter(&cl, &inst.sehs, &inst.leaves, AllowedReading::PerSlot);
        for cs in &sol {
            let ok = verify_solution(&inst.sehs, cs).map_err(|e| e.to_string())?;
            ensure(ok, || format!("instance {i}: {} passed both filters", clause_set_to_string(cs)))?;
            checked += 1;
        }
        with_solution += usize::from(!sol.is_empty());
    }
    ensure(with_solution > 0, || "no instance had a solution".into())?;
    Ok(format!("{RANDOM_COUNT} instances, {checked} filtered sets verified, {with_solution} instances solvable"))
}

fn completeness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut solutions, mut candidates) = (0, 0);
    for (i, inst) in random_instances(RANDOM_SEED, RANDOM_COUNT).iter().enumerate() {
        let pool = random_small_pool(&mut rng, inst);
        for cs in inst.candidates(&pool, &SMALL_CAPS) {
            candidates += 1;
            if verify_solution(&inst.sehs, &cs).map_err(|e| e.to_string())? {
                solutions += 1;
                ensure(inst.passes(&cs), || {
                    format!("instance {i}: solution {} filtered out", clause_set_to_string(&cs))
                })?;
            }
        }
    }
    ensure(solutions > 0, || "no solutions found by brute force".into())?;
    Ok(format!("{candidates} candidates, all {solutions} solutions kept"))
}

/// Whether some candidate from the naive pool is a verified balanced solution.
fn naive_balanced(inst: &Instance, caps: &Caps) -> Result<bool, String> {
    for cs in inst.candidates(&inst.naive(), caps) {
        if verify_solution(&inst.sehs, &cs).map_err(|e| e.to_string())?
            && is_balanced(&inst.sehs, &cs).map_err(|e| e.to_string())?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

fn gstar_has_solution(inst: &Instance) -> Result<bool, String> {
    let starting = starting_set_from_pool(&inst.gstar(), Caps::default().max_clause_size);
    let cl = cl_filter(&starting, &inst.sehs, &inst.leaves, &Caps::default()).map_err(|e| e.to_string())?;
    Ok(!sol_filter(&cl, &inst.sehs, &inst.leaves, AllowedReading::PerSlot).is_empty())
}

fn balanced_gstar() -> Outcome {
    let mut cases: Vec<(String, Instance)> = common::FIXTURES
        .iter()
        .map(|n| {
            let pf = fixture(n);
            (n.to_string(), Instance::new(pf.problem, pf.grammar).unwrap())
        })
        .collect();
    for n in 2..=3 {
        let sn = generate_sn(n).unwrap();
        cases.push((format!("S{n}"), Instance::new(sn.problem, sn.grammar).unwrap()));
    }
    cases.extend(
        random_instances(RANDOM_SEED, RANDOM_COUNT).into_iter().enumerate().map(|(i, c)| (format!("random {i}"), c)),
    );
    let (mut balanced, mut skipped) = (0, 0);
    for (name, inst) in &cases {
        // keeps the brute force over the naive pool small
        if inst.naive().len() > 8 {
            skipped += 1;
            continue;
        }
        if naive_balanced(inst, &SMALL_CAPS)? {
            balanced += 1;
            ensure(gstar_has_solution(inst)?, || format!("{name}: balanced solution but empty Sol over G*"))?;
        }
    }
    ensure(balanced > 0, || "no balanced solutions seen".into())?;
    Ok(format!("{} cases, {balanced} with a balanced solution, {skipped} skipped for naive pool size", cases.len()))
}

fn random_sequent(rng: &mut ChaCha8Rng) -> Sequent {
    let n_atoms = rng.gen_range(1..=8);
    let atoms: Vec<Formula> = (0..n_atoms).map(|i| Formula::atom(format!("A{i}"), vec![])).collect();
    fn build(rng: &mut ChaCha8Rng, atoms: &[Formula], depth: usize) -> Formula {
        if depth == 0 || rng.gen_bool(0.25) {
            return atoms.choose(rng).unwrap().clone();
        }
        match rng.gen_range(0..4) {
            0 => Formula::not(build(rng, atoms, depth - 1)),
            1 => Formula::and(build(rng, atoms, depth - 1), build(rng, atoms, depth - 1)),
            2 => Formula::or(build(rng, atoms, depth - 1), build(rng, atoms, depth - 1)),
            _ => Formula::imp(build(rng, atoms, depth - 1), build(rng, atoms, depth - 1)),
        }
    }
    let ant = (0..rng.gen_range(0..=3)).map(|_| build(rng, &atoms, 3)).collect::<Vec<_>>();
    let suc = (0..rng.gen_range(0..=3)).map(|_| build(rng, &atoms, 3)).collect::<Vec<_>>();
    Sequent::new(ant, suc)
}

fn oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut valid = 0;
    for i in 0..1000 {
        let s = random_sequent(&mut rng);
        let taut = is_tautology(&s);
        let d = maximal_derivation(&s).map_err(|e| e.to_string())?;
        let leaves_empty = non_tautological_leaves(&d).is_empty();
        ensure(taut == leaves_empty, || format!("sequent {i} {s:?}: tautology {taut}, no open leaves {leaves_empty}"))?;
        ensure(taut == truth_table_valid(&s), || format!("sequent {i}: truth table disagrees"))?;
        valid += usize::from(taut);
    }
    Ok(format!("1000 sequents agree, {valid} valid"))
}

fn check_with_round_trip(p: &Proof, sig: &Signature, what: &str) -> Result<(), String> {
    check_proof(p).map_err(|e| format!("{what}: {e}"))?;
    let (back, _) = read_proof(&write_proof(p, sig)).map_err(|e| format!("{what}: reread: {e}"))?;
    ensure(&back == p, || format!("{what}: proof changed in print/read"))?;
    check_proof(&back).map_err(|e| format!("{what}: reread: {e}"))
}

fn kernel_round_trips() -> Outcome {
    let mut from_eh = 0;
    let mut from_h = 0;
    for name in common::FIXTURES {
        let pf = fixture(name);
        let sig = &pf.problem.signature;
        if let Ok(out) = introduce_cut(&pf.problem, &pf.grammar, &SolveOptions::default()) {
            check_with_round_trip(&out.proof, sig, name)?;
            from_eh += 1;
            let (f, g) = pf.grammar.instance_tuples().map_err(|e| e.to_string())?;
            let inst = HerbrandInstanceSet { f_tuples: f.into_iter().collect(), g_tuples: g.into_iter().collect() };
            let p = proof_from_herbrand(&pf.problem, &inst).map_err(|e| format!("{name}: {e}"))?;
            check_with_round_trip(&p, sig, name)?;
            from_h += 1;
        }
        if let Some(h) = &pf.herbrand_terms {
            let inst = HerbrandInstanceSet::from_term_set(h).map_err(|e| e.to_string())?;
            let p = proof_from_herbrand(&pf.problem, &inst).map_err(|e| format!("{name}: {e}"))?;
            check_with_round_trip(&p, sig, name)?;
            from_h += 1;
        }
    }
    for n in 2..=5 {
        let sn = generate_sn(n).unwrap();
        let eh = ExtendedHerbrandSequent::new(sn.problem.clone(), sn.grammar.clone(), sn.cut_matrix.clone())
            .map_err(|e| e.to_string())?;
        let p = proof_from_eh(&eh).map_err(|e| format!("S{n}: {e}"))?;
        check_with_round_trip(&p, &sn.problem.signature, &format!("S{n}"))?;
        from_eh += 1;
        if n <= 3 {
            let cf = minimal_cutfree_instances(n).unwrap();
            let p = proof_from_herbrand(&sn.problem, &cf.instances).map_err(|e| format!("S{n}: {e}"))?;
            check_with_round_trip(&p, &sn.problem.signature, &format!("S{n} cut-free"))?;
            from_h += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (i, inst) in random_instances(RANDOM_SEED, RANDOM_COUNT).iter().enumerate() {
        let pool = random_small_pool(&mut rng, inst);
        let sig = &inst.problem.signature;
        for cs in inst.candidates(&pool, &SMALL_CAPS) {
            if !verify_solution(&inst.sehs, &cs).map_err(|e| e.to_string())? {
                continue;
            }
            let eh = inst.sehs.eh(&dnf_of(&cs).unwrap()).map_err(|e| e.to_string())?;
            let p = proof_from_eh(&eh).map_err(|e| format!("random {i}: {e}"))?;
            check_with_round_trip(&p, sig, &format!("random {i}"))?;
            from_eh += 1;

            let (f, g) = inst.grammar.instance_tuples().map_err(|e| e.to_string())?;
            let h = HerbrandInstanceSet { f_tuples: f.into_iter().collect(), g_tuples: g.into_iter().collect() };
            ensure(herbrand_check(&inst.problem, &h).map_err(|e| e.to_string())?.valid, || {
                format!("random {i}: grammar language of a solvable instance is not a Herbrand sequent")
            })?;
            let p = proof_from_herbrand(&inst.problem, &h).map_err(|e| format!("random {i}: {e}"))?;
            check_with_round_trip(&p, sig, &format!("random {i} cut-free"))?;
            from_h += 1;
            break;
        }
    }
    Ok(format!("{from_eh} proofs with cut and {from_h} cut-free proofs check and survive print/read"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("nested beta: EH and H tautologies, |H| = 9, |EH| = 7, rigid language", nested_beta),
        ("unsolvable instances under both pools", unsolvable),
        ("Cl and Sol on the crossed example", sol_example),
        ("S_n for n = 2..5: pool, solution, q = 4n+3", sn_benchmark),
        ("cut-free count exceeds n^n for n = 2, 3", cutfree_bound),
        ("soundness of the filters", soundness),
        ("partial completeness of the filters", completeness),
        ("balanced solution implies a G* solution", balanced_gstar),
        ("tautology check agrees with open leaves", oracle),
        ("kernel round trips", kernel_round_trips),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match res {
            Ok(detail) => println!("PASS {:>2}. {name} [{detail}] ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
