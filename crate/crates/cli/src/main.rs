//! Command-line surface: constant tables, verification suites and direct
//! evaluation of the library's functions.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors,
//! 3 unsupported mathematical precondition, 4 evaluation precondition
//! failures.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use weylcones::constants::{
    b_constant, cbar, d_table, d_vee_table, knapp_c, m_r, psi_r, BQuery,
};
use weylcones::cones::{cone_from_generators, Cone};
use weylcones::parafan::{levi_fan, nu_middle, truncated_cohomology_in, Nu};
use weylcones::ratgeom::RatVec;
use weylcones::rootsys::{root_system, Chamber, RootSystem};
use weylcones::verify::{run_suite, GoldenSource, SuiteConfig, SuiteKind};
use weylcones::Error;

#[derive(Parser)]
#[command(name = "weylcones", version, about = "Exact chamber sums, cone valuations and constant tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a constant table.
    Table(TableArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Evaluate one library function.
    Eval(EvalArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Table kind; `d` is the only one.
    kind: String,
    /// Cartan type, e.g. B2 or A1xA1.
    #[arg(long = "type")]
    cartan_type: String,
    /// Base chamber as a reduced word (default "e").
    #[arg(long, default_value = "e")]
    base_chamber: String,
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of appendixA, appendixB, section1, section2, section3, section5,
    /// section6, all.
    #[arg(long)]
    suite: String,
    /// Comma-separated Cartan types; suite defaults when omitted.
    #[arg(long)]
    types: Option<String>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Scales the randomized case counts.
    #[arg(long)]
    cases: Option<u64>,
    /// Directory of golden tables overriding the embedded ones.
    #[arg(long)]
    golden_dir: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// One of psi, phi, psiR, m, cbar, b, kostant, e_nu_p.
    expr: String,
    #[arg(long = "type")]
    cartan_type: Option<String>,
    /// Cone generators for psi/phi, e.g. "1,0;0,1".
    #[arg(long)]
    cone_gens: Option<String>,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    /// Chamber as a reduced word such as "e" or "s1*s2".
    #[arg(long)]
    chamber: Option<String>,
    /// Levi subset as comma-separated simple-root indices (1-based); empty
    /// string for the full torus.
    #[arg(long)]
    levi: Option<String>,
    /// Open fan cell: "e" for the dominant one or a cell id.
    #[arg(long)]
    p: Option<String>,
    /// Weight profile: a covector, or "middle", "-inf", "+inf".
    #[arg(long)]
    nu: Option<String>,
    /// Weyl element for kostant/compact-root style queries.
    #[arg(long)]
    w: Option<String>,
    /// Compact root indices for the re-indexed constants.
    #[arg(long)]
    compact: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) => 2,
        Error::MinusOneNotInWeylGroup(_) => 3,
        _ => 4,
    }
}

fn chamber_by_word(sys: &RootSystem, word: &str) -> Result<Chamber, Error> {
    sys.chambers()
        .into_iter()
        .find(|c| c.word() == word)
        .ok_or_else(|| Error::Unsupported(format!("no chamber with reduced word {word:?}")))
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Error> {
    if args.kind != "d" {
        return Err(Error::Unsupported(format!(
            "unknown table kind {:?}",
            args.kind
        )));
    }
    let sys = root_system(&args.cartan_type)?;
    let c0 = chamber_by_word(&sys, &args.base_chamber)?;
    let d = d_table(&sys, &c0, args.seed)?;
    let dv = d_vee_table(&sys, &c0, args.seed)?;
    match args.format.as_str() {
        "json" => {
            let table: serde_json::Map<String, serde_json::Value> = d
                .values
                .iter()
                .map(|(w, v)| (w.clone(), json!(v)))
                .collect();
            let table_dual: serde_json::Map<String, serde_json::Value> = dv
                .values
                .iter()
                .map(|(w, v)| (w.clone(), json!(v)))
                .collect();
            let out = json!({
                "system": d.system,
                "base_chamber": d.base_chamber,
                "q": d.q,
                "seed": d.seed,
                "x0": d.x0,
                "lambda0": d.lambda0,
                "table": table,
                "table_dual": table_dual,
            });
            println!("{out}");
        }
        "csv" => {
            println!("word,d,d_dual");
            for ((w, v), (_, vd)) in d.values.iter().zip(&dv.values) {
                println!("{w},{v},{vd}");
            }
        }
        other => {
            return Err(Error::Unsupported(format!("unknown format {other:?}")));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let kind = SuiteKind::parse(&args.suite)
        .ok_or_else(|| Error::Unsupported(format!("unknown suite {:?}", args.suite)))?;
    let types: Vec<String> = args
        .types
        .map(|t| t.split(',').map(|s| s.trim().to_string()).collect())
        .unwrap_or_default();
    let cfg = SuiteConfig {
        seed: args.seed,
        cases: args.cases,
        golden: args
            .golden_dir
            .map(GoldenSource::Dir)
            .unwrap_or(GoldenSource::Embedded),
    };
    let reports = run_suite(kind, &types, &cfg)?;
    let body = serde_json::to_string_pretty(&reports).expect("reports serialize");
    match &args.out {
        Some(path) => std::fs::write(path, body.as_bytes())
            .map_err(|e| Error::Unsupported(format!("cannot write {path:?}: {e}")))?,
        None => println!("{body}"),
    }
    let failed: u64 = reports.iter().map(|r| r.cases_failed).sum();
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_vec(s: &str) -> Result<RatVec, Error> {
    RatVec::parse(s)
}

fn parse_cone(spec: &str) -> Result<Cone, Error> {
    let gens: Result<Vec<RatVec>, Error> = spec
        .split(';')
        .filter(|p| !p.trim().is_empty())
        .map(parse_vec)
        .collect();
    let gens = gens?;
    let dim = gens
        .first()
        .map(RatVec::dim)
        .ok_or_else(|| Error::Unsupported("cone needs at least one generator".into()))?;
    cone_from_generators(&gens, dim)
}

fn required<T>(opt: Option<T>, flag: &str) -> Result<T, Error> {
    opt.ok_or_else(|| Error::Unsupported(format!("missing required flag --{flag}")))
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, Error> {
    let value = match args.expr.as_str() {
        "psi" | "phi" => {
            let cone = parse_cone(&required(args.cone_gens.clone(), "cone-gens")?)?;
            let x = parse_vec(&required(args.x.clone(), "x")?)?;
            let lambda = parse_vec(&required(args.lambda.clone(), "lambda")?)?;
            if x.dim() != cone.ambient_dim() || lambda.dim() != cone.ambient_dim() {
                return Err(Error::DimensionMismatch("eval: point dimensions".into()));
            }
            let v = if args.expr == "psi" {
                cone.psi(&x, &lambda)
            } else {
                cone.phi(&x, &lambda)
            };
            json!({ "value": v })
        }
        "psiR" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let c0 = chamber_by_word(&sys, args.chamber.as_deref().unwrap_or("e"))?;
            let x = parse_vec(&required(args.x.clone(), "x")?)?;
            let lambda = parse_vec(&required(args.lambda.clone(), "lambda")?)?;
            json!({ "value": psi_r(&sys, &c0, &x, &lambda)? })
        }
        "m" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let x = parse_vec(&required(args.x.clone(), "x")?)?;
            let lambda = parse_vec(&required(args.lambda.clone(), "lambda")?)?;
            json!({ "value": m_r(&sys, &x, &lambda)? })
        }
        "cbar" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let x = parse_vec(&required(args.x.clone(), "x")?)?;
            let lambda = parse_vec(&required(args.lambda.clone(), "lambda")?)?;
            json!({ "value": cbar(&sys, &x, &lambda)? })
        }
        "b" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let chamber = chamber_by_word(&sys, args.chamber.as_deref().unwrap_or("e"))?;
            let query = BQuery {
                tau: parse_vec(&required(args.tau.clone(), "tau")?)?,
                chamber,
                x: parse_vec(&required(args.x.clone(), "x")?)?,
                lambda: parse_vec(&required(args.lambda.clone(), "lambda")?)?,
            };
            json!({ "value": b_constant(&sys, &query)? })
        }
        "c" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let compact: BTreeSet<usize> = match args.compact.as_deref().unwrap_or("") {
                "" => BTreeSet::new(),
                s => s
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Unsupported(format!("bad root index {p:?}")))
                    })
                    .collect::<Result<_, _>>()?,
            };
            let w_word = args.w.as_deref().unwrap_or("e");
            let w_index = sys
                .weyl()
                .iter()
                .position(|w| w.word_string() == w_word)
                .ok_or_else(|| Error::Unsupported(format!("no Weyl element {w_word:?}")))?;
            let lambda = parse_vec(&required(args.lambda.clone(), "lambda")?)?;
            let positive = chamber_by_word(&sys, args.chamber.as_deref().unwrap_or("e"))?;
            json!({ "value": knapp_c(&sys, &compact, w_index, &lambda, &positive)? })
        }
        "kostant" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let levi = parse_levi(args.levi.as_deref().unwrap_or(""))?;
            let reps = weylcones::parafan::kostant_reps(&sys, &levi)?;
            let items: Vec<serde_json::Value> = reps
                .iter()
                .map(|&w| {
                    json!({
                        "word": sys.weyl()[w].word_string(),
                        "length": sys.weyl()[w].word.len(),
                    })
                })
                .collect();
            json!({ "count": reps.len(), "representatives": items })
        }
        "e_nu_p" => {
            let sys = root_system(&required(args.cartan_type.clone(), "type")?)?;
            let levi = parse_levi(args.levi.as_deref().unwrap_or(""))?;
            let fan = levi_fan(&sys, &levi)?;
            let cell = match args.p.as_deref().unwrap_or("e") {
                "e" => fan.dominant_open_cell()?,
                other => {
                    let id: usize = other
                        .parse()
                        .map_err(|_| Error::Unsupported(format!("bad cell id {other:?}")))?;
                    id
                }
            };
            let lambda = parse_vec(&required(args.lambda.clone(), "lambda")?)?;
            let nu = match args.nu.as_deref().unwrap_or("middle") {
                "middle" => Nu::Finite(nu_middle(&sys)),
                "-inf" => Nu::NegInfinity,
                "+inf" => Nu::PosInfinity,
                s => Nu::Finite(parse_vec(s)?),
            };
            let vw = truncated_cohomology_in(&fan, cell, &lambda, &nu)?;
            let terms: Vec<serde_json::Value> = vw
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "sign": t.sign,
                        "weight": t.weight.to_string(),
                        "length": t.kostant_length,
                    })
                })
                .collect();
            json!({ "terms": terms })
        }
        other => {
            return Err(Error::Unsupported(format!("unknown expression {other:?}")));
        }
    };
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn parse_levi(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Unsupported(format!("bad levi index {p:?}")))
                .and_then(|i| {
                    if i == 0 {
                        Err(Error::Unsupported("levi indices are 1-based".into()))
                    } else {
                        Ok(i - 1)
                    }
                })
        })
        .collect()
}

