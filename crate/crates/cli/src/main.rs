use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use glsigma::groupcore::{outer_classes, AutoKind, AutoSpec};
use glsigma::oracle::{dixon_table, match_outer, outer_class_columns, semidirect_group};
use glsigma::parametrize::{class_size, class_size_histogram, count_identity, enum_char_types, enum_class_types};
use glsigma::tables::{build_table, regular_qss_value, verify_orthogonality};
use glsigma::weyl::WElement;
use glsigma::weylcosets::{coset_cardinalities, isolated_subgroup, solve, verify_structure, CosetProblem};
use glsigma::Result;

const SCHEMA: &str = "1";

/// A single rank or an inclusive range `lo..hi`.
#[derive(Clone, Copy, Debug)]
struct NRange {
    lo: u32,
    hi: u32,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad rank {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => (parse(s)?, parse(s)?),
        };
        if lo == 0 || lo > hi {
            return Err(format!("empty rank range {s}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Sigma,
    SigmaPrime,
}

impl From<Kind> for AutoKind {
    fn from(k: Kind) -> AutoKind {
        match k {
            Kind::Sigma => AutoKind::Sigma,
            Kind::SigmaPrime => AutoKind::SigmaPrime,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "glsigma", version, about = "Characters and classes of GL_n(q) extended by transpose-inverse")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value = "2")]
    n: NRange,
    #[arg(long, global = true, default_value_t = 5)]
    q: u64,
    #[arg(long, global = true, value_enum, default_value = "sigma")]
    kind: Kind,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// σ-stable character labels.
    Chars,
    /// Outer class labels with their sizes.
    Classes,
    /// Character and class counts over a range of ranks.
    Counts,
    /// Character table on the outer coset, with orthogonality checks.
    Table,
    /// Oracle character table matched against the printed one (n = 2).
    Oracle,
    /// Randomized Weyl-group coset problems.
    Wcosets {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// The full property suite.
    Selftest,
}

struct Job {
    artifact: String,
    ok: bool,
}

fn single_n(cli: &Cli) -> std::result::Result<u32, String> {
    if cli.n.lo != cli.n.hi {
        return Err("this command takes a single rank".into());
    }
    Ok(cli.n.lo)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn chars(n: u32, q: u64) -> Result<Job> {
    let types = enum_char_types(n, q)?;
    let v = json!({ "schema": SCHEMA, "n": n, "q": q, "count": types.len(), "chars": types });
    Ok(Job { artifact: pretty(&v), ok: true })
}

fn classes(n: u32, q: u64) -> Result<Job> {
    let mut rows = Vec::new();
    let mut total = 0u128;
    for c in enum_class_types(n, q)? {
        let size = class_size(&c, n, q)?;
        total += size;
        rows.push(json!({ "class": c, "size": size.to_string() }));
    }
    let order = AutoSpec::new(n as usize, q, AutoKind::Sigma)?.group_size() as u128;
    let v = json!({
        "schema": SCHEMA, "n": n, "q": q, "count": rows.len(),
        "total_size": total.to_string(), "group_order": order.to_string(), "classes": rows,
    });
    Ok(Job { artifact: pretty(&v), ok: total == order })
}

fn counts(r: NRange, q: u64) -> Result<Job> {
    let mut counts = BTreeMap::new();
    let mut ok = true;
    for n in r.lo..=r.hi {
        let c = count_identity(n, q)?;
        ok &= c.equal;
        counts.insert(n.to_string(), c.chars);
    }
    let v = json!({ "schema": SCHEMA, "q": q, "counts": counts, "classes_equal_chars": ok });
    Ok(Job { artifact: pretty(&v), ok })
}

fn table(n: u32, q: u64, kind: AutoKind, format: Format) -> Result<Job> {
    let t = build_table(n, q, kind)?;
    let rep = verify_orthogonality(&t, &t.class_sizes()?)?;
    eprintln!("orthogonality: {}", rep.summary());
    for f in &rep.failures {
        eprintln!("  {f}");
    }
    let artifact = match format {
        Format::Csv => t.to_csv(),
        Format::Json => pretty(&json!({ "schema": SCHEMA, "table": t, "orthogonality": rep })),
    };
    Ok(Job { artifact, ok: rep.passed() })
}

fn oracle(n: u32, q: u64, kind: AutoKind) -> Result<Job> {
    if n != 2 {
        return Err(glsigma::Error::Precondition("the oracle runs for n = 2 only".into()));
    }
    let spec = AutoSpec::new(2, q, kind)?;
    let t = build_table(2, q, kind)?;
    let (g, elems) = semidirect_group(&spec)?;
    let oracle = dixon_table(&g)?;
    let mut columns = Vec::new();
    for c in &g.classes {
        columns.push(t.column_of(&spec, &elems[c[0]])?);
    }
    debug_assert_eq!(columns, outer_class_columns(&g, &elems, |x| t.column_of(&spec, x).ok().flatten()));
    let (p, _) = glsigma::ffield::split_prime_power(q)?;
    let rep = match_outer(&oracle, &columns, &t.outer_block(), p)?;
    eprintln!("{}", rep.summary());
    let ok = rep.matched.len() == rep.pairs && rep.pairs == t.rows.len();
    let v = json!({ "schema": SCHEMA, "n": 2, "q": q, "group_order": g.order(), "summary": rep.summary(), "report": rep });
    Ok(Job { artifact: pretty(&v), ok })
}

fn random_problem(rng: &mut ChaCha8Rng) -> Option<CosetProblem> {
    let n = rng.gen_range(1..=4);
    let all = WElement::all(n);
    let a = rng.gen_range(0..=n);
    let b = rng.gen_range(0..=n - a);
    let gens = isolated_subgroup(a, b, n - a - b);
    let tau = all[rng.gen_range(0..all.len())].clone();
    let mu = if rng.gen_bool(0.5) { tau.clone() } else { all[rng.gen_range(0..all.len())].clone() };
    CosetProblem::new(n, gens, tau, mu).ok()
}

fn wcosets(seed: u64, count: usize) -> Result<Job> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut passed, mut done, mut failures) = (0usize, 0usize, Vec::new());
    let mut samples = Vec::new();
    while done < count {
        let Some(p) = random_problem(&mut rng) else { continue };
        done += 1;
        let r = solve(&p);
        let structure = verify_structure(&p, &r);
        // the preimage of a class is z_τ/z_ν preimages of one coset
        let card = coset_cardinalities(&r, 12, 10, 4)?;
        let consistent = r.classes.iter().zip(&card).all(|(c, k)| k.class_preimage * c.z_nu as u128 == k.coset_preimage * c.z_tau as u128);
        match (&structure, consistent) {
            (Ok(()), true) => passed += 1,
            _ => failures.push(format!("{:?}: {:?}", p.tau, structure.err())),
        }
        if samples.len() < 3 && !r.empty {
            samples.push(json!({ "rank": p.rank, "tau": p.tau, "mu": p.mu, "solutions": r.solution_count(), "cardinalities": card }));
        }
    }
    let v = json!({ "schema": SCHEMA, "seed": seed, "problems": done, "passed": passed, "failures": failures, "samples": samples });
    Ok(Job { artifact: pretty(&v), ok: passed == done })
}

fn census_ok(q: u64) -> Result<bool> {
    let brute = outer_classes(2, q, AutoKind::Sigma)?;
    let mut sizes: BTreeMap<u128, usize> = BTreeMap::new();
    for c in &brute {
        *sizes.entry(c.size as u128).or_default() += 1;
    }
    Ok(brute.len() as u64 == q + 3 && sizes == class_size_histogram(2, q)?)
}

fn selftest(seed: u64) -> Result<Job> {
    let mut lines = Vec::new();
    let mut check = |name: &str, ok: bool| {
        lines.push(json!({ "check": name, "pass": ok }));
        eprintln!("{} {name}", if ok { "PASS" } else { "FAIL" });
        ok
    };
    let mut ok = true;
    for n in 2..=5 {
        for q in [5, 9, 13] {
            ok &= check(&format!("count identity n={n} q={q}"), count_identity(n, q)?.equal);
        }
    }
    for q in [5, 9] {
        ok &= check(&format!("outer class census n=2 q={q}"), census_ok(q)?);
    }
    for n in [2, 3] {
        for q in [5, 9, 13] {
            let t = build_table(n, q, AutoKind::Sigma)?;
            ok &= check(&format!("orthogonality n={n} q={q}"), verify_orthogonality(&t, &t.class_sizes()?)?.passed());
            if q < 13 {
                let mut agree = true;
                for (r, row) in t.rows.iter().enumerate().filter(|(_, r)| r.family.is_parametric()) {
                    for (c, col) in t.columns.iter().enumerate().filter(|(_, c)| c.is_regular()) {
                        agree &= regular_qss_value(n, q, row, col)? == *t.value(r, c);
                    }
                }
                ok &= check(&format!("regular cells n={n} q={q}"), agree);
            }
        }
    }
    for kind in [AutoKind::Sigma, AutoKind::SigmaPrime] {
        ok &= check(&format!("oracle match {kind:?}"), oracle(2, 5, kind)?.ok);
    }
    ok &= check("coset problems", wcosets(seed, 200)?.ok);
    let v = json!({ "schema": SCHEMA, "seed": seed, "checks": lines, "pass": ok });
    Ok(Job { artifact: pretty(&v), ok })
}

fn run(cli: &Cli) -> std::result::Result<Job, String> {
    let kind: AutoKind = cli.kind.into();
    let q = cli.q;
    let job = match &cli.command {
        Command::Chars => chars(single_n(cli)?, q),
        Command::Classes => classes(single_n(cli)?, q),
        Command::Counts => counts(cli.n, q),
        Command::Table => table(single_n(cli)?, q, kind, cli.format),
        Command::Oracle => oracle(single_n(cli)?, q, kind),
        Command::Wcosets { count } => wcosets(cli.seed, *count),
        Command::Selftest => selftest(cli.seed),
    };
    job.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match run(&cli) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &job.artifact) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", job.artifact),
    }
    if job.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
