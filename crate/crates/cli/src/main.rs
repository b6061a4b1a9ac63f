use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use pi2cut::bench::{bench_row, parse_problem, BenchError, BenchRow, ProblemFile};
use pi2cut::calculus::check_proof;
use pi2cut::calculus::io::{read_proof, write_proof};
use pi2cut::logic::clause_set_to_string;
use pi2cut::solver::{
    build_sehs, introduce_cut, parse_starting_set, verify_solution, Caps, CutOutcome, PoolChoice, SolveOptions,
    SolverError,
};

#[derive(Parser)]
#[command(name = "pi2cut", version, about = "Introduce a single forall-exists cut into a cut-free proof")]
struct Cli {
    /// Print machine-readable JSON instead of the text report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Search a cut formula for the problem's grammar and build the proof.
    Solve {
        file: PathBuf,
        /// gstar, naive or file:<path> (one clause per line).
        #[arg(long, default_value = "gstar")]
        pool: String,
        #[arg(long)]
        max_clauses: Option<usize>,
        #[arg(long)]
        max_clause_size: Option<usize>,
        #[arg(long)]
        max_candidates: Option<usize>,
        /// Report every solution instead of the first.
        #[arg(long)]
        all: bool,
        /// Write the proof with cut to this file.
        #[arg(long)]
        emit_proof: Option<PathBuf>,
        /// Re-verify every solution and re-check the proof after a print/read round trip.
        #[arg(long)]
        verify: bool,
    },
    /// Check a proof file.
    Check { proof: PathBuf },
    /// Print the rigid language of the problem's grammar.
    Language { file: PathBuf },
    /// Compare the one-cut proof of S_n with its cut-free instance count.
    BenchSn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cut_free: bool,
    },
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl ToString) -> Failure {
        Failure { code: 2, msg: msg.to_string() }
    }

    fn check(msg: impl ToString) -> Failure {
        Failure { code: 3, msg: msg.to_string() }
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Failure {
        let code = match e {
            SolverError::NoSolutionUnderPool(_) | SolverError::CapExceeded(_) => 1,
            SolverError::VerificationFailed(_) | SolverError::NotASolution => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Failure {
        Failure::input(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<ProblemFile, Failure> {
    parse_problem(&read(path)?).map_err(|e| Failure::input(format!("{}:{e}", path.display())))
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

fn solve(
    json: bool,
    file: &Path,
    pool: &str,
    caps: Caps,
    all: bool,
    emit: Option<&Path>,
    verify: bool,
) -> Result<(), Failure> {
    let pf = load_problem(file)?;
    let pool = match pool {
        "gstar" => PoolChoice::GStar,
        "naive" => PoolChoice::Naive,
        other => match other.strip_prefix("file:") {
            Some(p) => PoolChoice::Clauses(parse_starting_set(&read(Path::new(p))?, &pf.problem.signature)?),
            None => {
                return Err(Failure::input(format!("unknown pool '{other}', expected gstar, naive or file:<path>")))
            }
        },
    };
    let opts = SolveOptions { pool, caps, all, terms: pf.herbrand_terms.clone(), ..SolveOptions::default() };
    let out = match introduce_cut(&pf.problem, &pf.grammar, &opts) {
        Ok(out) => out,
        Err(e @ (SolverError::NoSolutionUnderPool(_) | SolverError::CapExceeded(_))) => {
            if json {
                let stats = match &e {
                    SolverError::NoSolutionUnderPool(s) | SolverError::CapExceeded(s) => s,
                    _ => unreachable!(),
                };
                print_json(&serde_json::json!({ "error": e.to_string(), "stats": stats }));
            }
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    if verify {
        reverify(&pf, &out)?;
    }
    if let Some(path) = emit {
        fs::write(path, write_proof(&out.proof, &pf.problem.signature))
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    if json {
        print_json(&out.report);
    } else {
        print_report(&out);
    }
    Ok(())
}

fn reverify(pf: &ProblemFile, out: &CutOutcome) -> Result<(), Failure> {
    let sehs = build_sehs(&pf.problem, &pf.grammar, None)?;
    for cs in &out.solutions {
        if !verify_solution(&sehs, cs)? {
            return Err(Failure::check(format!("{} does not verify", clause_set_to_string(cs))));
        }
    }
    let text = write_proof(&out.proof, &pf.problem.signature);
    let (back, _) = read_proof(&text).map_err(|e| Failure::check(format!("emitted proof does not parse: {e}")))?;
    check_proof(&back).map_err(Failure::check)
}

fn print_report(out: &CutOutcome) {
    let r = &out.report;
    let pool: Vec<String> = r.pool.iter().map(|l| l.to_string()).collect();
    let rows: Vec<(&str, String)> = vec![
        ("pool", format!("{} ({} literals)", r.pool_kind, r.pool.len())),
        ("pool literals", pool.join(" ")),
        ("leaves", r.leaves.to_string()),
        ("candidates", r.stats.candidates_examined.to_string()),
        ("passed Cl", r.stats.passed_cl.to_string()),
        ("passed Sol", r.stats.passed_sol.to_string()),
        ("cap hit", r.stats.cap_hit.to_string()),
        ("cut formula", r.cut_formula.to_string()),
        ("verified", r.verified.to_string()),
        ("balanced", r.balanced.to_string()),
        ("proof checked", r.proof_checked.to_string()),
        ("|EH|", r.herbrand_complexity.to_string()),
        ("q", r.proof_complexity.quantifier.to_string()),
        ("l", r.proof_complexity.logical.to_string()),
        ("s", r.proof_complexity.symbolic.to_string()),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &rows {
        println!("{k:<width$}  {v}");
    }
    for (i, s) in r.solutions.iter().enumerate() {
        println!("{:<width$}  {s}", format!("solution {}", i + 1));
    }
    if r.unifiable == Some(false) {
        println!("note: some leaf has no unifiable partner");
    }
}

fn check(json: bool, path: &Path) -> Result<(), Failure> {
    let (proof, _) = read_proof(&read(path)?).map_err(|e| Failure::input(format!("{}:{e}", path.display())))?;
    let res = check_proof(&proof);
    if json {
        print_json(&serde_json::json!({ "ok": res.is_ok(), "error": res.as_ref().err().map(|e| e.to_string()) }));
    } else if res.is_ok() {
        println!("ok");
    }
    res.map_err(Failure::check)
}

fn language(json: bool, path: &Path) -> Result<(), Failure> {
    let pf = load_problem(path)?;
    let lang = pf.grammar.rigid_language().map_err(Failure::input)?;
    let terms: Vec<String> = lang.iter().map(|t| t.to_string()).collect();
    let covered = pf.herbrand_terms.as_ref().map(|h| h.is_subset(&lang));
    if json {
        print_json(&serde_json::json!({ "language": terms, "covers_herbrand_terms": covered }));
    } else {
        for t in &terms {
            println!("{t}");
        }
        if let Some(c) = covered {
            println!("; covers herbrand-terms: {c}");
        }
    }
    Ok(())
}

fn print_bench(row: &BenchRow) {
    let q = row.cut_proof.quantifier;
    println!("n                  {}", row.n);
    println!("cut proof q/l/s    {}/{}/{}", q, row.cut_proof.logical, row.cut_proof.symbolic);
    println!("expected cut q     {}", row.expected_cut_q);
    println!("cut proof checked  {}", row.cut_proof_checked);
    println!("n^n                {}", row.lower_bound);
    if let Some(cf) = &row.cutfree {
        println!("cut-free q         {}", cf.counted_q);
        println!("closed form        {}", cf.stated_q);
        println!("midsequent valid   {}", cf.midsequent_valid);
    }
}

fn bench(json: bool, n: usize, cut_free: bool) -> Result<(), Failure> {
    let row = bench_row(n, cut_free)?;
    if json {
        print_json(&row);
    } else {
        print_bench(&row);
    }
    if !row.cut_proof_checked || row.cutfree.as_ref().is_some_and(|c| !c.midsequent_valid) {
        return Err(Failure::check("benchmark proof or midsequent failed to check"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Solve { file, pool, max_clauses, max_clause_size, max_candidates, all, emit_proof, verify } => {
            let d = Caps::default();
            let caps = Caps {
                max_clauses: max_clauses.unwrap_or(d.max_clauses),
                max_clause_size: max_clause_size.unwrap_or(d.max_clause_size),
                max_candidates: max_candidates.unwrap_or(d.max_candidates),
            };
            solve(cli.json, &file, &pool, caps, all, emit_proof.as_deref(), verify)
        }
        Cmd::Check { proof } => check(cli.json, &proof),
        Cmd::Language { file } => language(cli.json, &file),
        Cmd::BenchSn { n, cut_free } => bench(cli.json, n, cut_free),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
