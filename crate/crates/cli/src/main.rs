//! `biproj`: line-bundle cohomology, ACM checks, Hilbert polynomials and
//! parameter counts for complete intersections in `P^m x P^n`.
//!
//! Every command prints a JSON report on stdout (or an indented text
//! rendering with `--pretty`). Exit status: 0 success, 2 invalid input,
//! 3 ACM criterion violated, 4 oracle mismatch.

mod bidegrees;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use biproj::catalog::{enumerate_canonical, merge_swap_equivalent};
use biproj::combinat::line_bundle_cohomology;
use biproj::koszul::{genus_of_curve, hilbert_polynomial};
use biproj::oracle::{verify_spec, DEFAULT_PRIME, DEFAULT_TRIALS};
use biproj::tower::hilbert_scheme_dimension;
use biproj::{AmbientSpace, Bidegree, CiSpec, Error, Int};

use crate::bidegrees::parse_bidegrees;
use crate::report::{bidegree, bidegrees as bidegree_list, envelope, int, pretty, rational, spec_input};

#[derive(Parser, Debug)]
#[command(name = "biproj", version, about = "Complete intersections in P^m x P^n")]
struct Cli {
    /// Render the report as indented text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Also write the report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Generator bidegrees as "a,b;a,b;...".
    #[arg(long, allow_hyphen_values = true)]
    bidegrees: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology dimensions h^0..h^{m+n} of O(a,b).
    Cohomology {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
    /// Regular-sequence, ordering and canonical-curve checks.
    Check(SpecArgs),
    /// Hilbert polynomial, with the genus for curves.
    Hilbert(SpecArgs),
    /// Hilbert-scheme dimension level by level, and the moduli dimension.
    Tower(SpecArgs),
    /// All canonical curves cut out by ample divisors.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// On P^m x P^m, list a profile and its mirror image only once.
        #[arg(long)]
        merge_swap: bool,
    },
    /// Compare the predicted ideal dimensions in twists (d,d) with ranks of
    /// random forms over a prime field.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest d checked, starting from 0.
        #[arg(long, default_value_t = 6)]
        dmax: u32,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u32,
    },
}

enum Failure {
    Input(String),
    Criterion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_criterion_violation() {
            Failure::Criterion(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn parse_spec(args: &SpecArgs) -> Result<CiSpec, Failure> {
    let list = parse_bidegrees(&args.bidegrees).map_err(|e| Failure::Input(format!("--bidegrees: {e}")))?;
    let space = AmbientSpace::new(args.m, args.n)?;
    Ok(CiSpec::new(space, list)?)
}

fn cohomology(m: u32, n: u32, a: i64, b: i64) -> Result<Value, Failure> {
    let space = AmbientSpace::new(m, n)?;
    let h = line_bundle_cohomology::<Int>(space, Bidegree::new(a, b));
    let result = json!({
        "h": h.dims().iter().map(int).collect::<Vec<_>>(),
        "euler_characteristic": int(&h.euler_characteristic()),
    });
    Ok(envelope("cohomology", json!({"m": m, "n": n, "a": a, "b": b}), result))
}

fn check(args: &SpecArgs) -> Result<Value, Failure> {
    let spec = parse_spec(args)?;
    let (first, second) = spec.positive_excesses();
    let result = json!({
        "regular": spec.is_regular_sequence_criterion(),
        "excesses": [first, second],
        "hypothesis_warning": spec.regular_sequence_hypothesis_warning(),
        "acm_order": spec.is_acm_order(),
        "acm": spec.is_acm(),
        "violation": spec.acm_violation().map(|v| v.to_string()),
        "canonical_ample": spec.is_canonical_ample(),
        "dualizing": bidegree(spec.dualizing_bidegree()),
        "stabilizer_finite": biproj::tower::stabilizer_is_finite(&spec),
    });
    Ok(envelope("check", spec_input(&spec), result))
}

fn hilbert(args: &SpecArgs) -> Result<Value, Failure> {
    let spec = parse_spec(args)?;
    let p = hilbert_polynomial::<Int>(&spec)?;
    let mut result = json!({
        "polynomial": p.to_string(),
        "coefficients": p.coeffs().iter().map(rational).collect::<Vec<_>>(),
        "genus": null,
    });
    if p.degree() == Some(1) {
        let g = genus_of_curve::<Int>(&spec)?;
        result["genus"] = int(&g.genus);
        result["degree"] = int(&g.degree);
        result["canonical"] = json!(g.canonical);
    }
    Ok(envelope("hilbert", spec_input(&spec), result))
}

fn tower(args: &SpecArgs) -> Result<Value, Failure> {
    let spec = parse_spec(args)?;
    let t = hilbert_scheme_dimension::<Int>(&spec)?;
    let levels: Vec<Value> = t
        .levels
        .iter()
        .map(|l| {
            json!({
                "bidegree": bidegree(l.bidegree),
                "multiplicity": l.multiplicity,
                "ambient_sections": int(&l.ambient_sections),
                "kernel_dim": int(&l.kernel_dim),
                "rank": int(&l.rank),
                "fiber_dim": int(&l.fiber_dim),
            })
        })
        .collect();
    let result = json!({
        "levels": levels,
        "hilbert_dim": int(&t.hilbert_dim),
        "group_dim": int(&t.group_dim),
        "moduli_dim": int(&t.moduli_dim),
        "stabilizer_finite": t.stabilizer_finite,
    });
    Ok(envelope("tower", spec_input(&spec), result))
}

fn enumerate(m: u32, n: u32, merge_swap: bool) -> Result<Value, Failure> {
    let space = AmbientSpace::new(m, n)?;
    let mut entries = enumerate_canonical::<Int>(space);
    if merge_swap {
        entries = merge_swap_equivalent(entries);
    }
    let rows: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "bidegrees": bidegree_list(e.spec.bidegrees()),
                "genus": int(&e.genus),
                "hilbert_dim": int(&e.hilbert_dim),
                "moduli_dim": int(&e.moduli_dim),
                "stabilizer_finite": e.stabilizer_finite,
            })
        })
        .collect();
    let result = json!({"count": rows.len(), "entries": rows});
    Ok(envelope("enumerate", json!({"m": m, "n": n, "merge_swap": merge_swap}), result))
}

fn verify(args: &SpecArgs, dmax: u32, prime: u64, seed: u64, trials: u32) -> Result<(Value, bool), Failure> {
    let spec = parse_spec(args)?;
    let r = verify_spec(&spec, i64::from(dmax), prime, seed, trials)?;
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "d": row.d,
                "predicted": int(&row.predicted),
                "observed": row.observed,
                "pass": row.pass,
            })
        })
        .collect();
    let mut input = spec_input(&spec);
    input["dmax"] = json!(dmax);
    input["prime"] = json!(prime);
    input["seed"] = json!(seed);
    input["trials"] = json!(trials);
    let pass = r.all_pass();
    Ok((envelope("verify", input, json!({"pass": pass, "rows": rows})), pass))
}

fn run(cli: &Cli) -> Result<(Value, bool), Failure> {
    let passed = |v| (v, true);
    match &cli.command {
        Command::Cohomology { m, n, a, b } => cohomology(*m, *n, *a, *b).map(passed),
        Command::Check(args) => check(args).map(passed),
        Command::Hilbert(args) => hilbert(args).map(passed),
        Command::Tower(args) => tower(args).map(passed),
        Command::Enumerate { m, n, merge_swap } => enumerate(*m, *n, *merge_swap).map(passed),
        Command::Verify {
            spec,
            dmax,
            prime,
            seed,
            trials,
        } => verify(spec, *dmax, *prime, *seed, *trials),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, ok) = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Criterion(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let text = if cli.pretty {
        pretty(&report)
    } else {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    };
    print!("{text}");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: oracle rank differs from the prediction");
        ExitCode::from(4)
    }
}
