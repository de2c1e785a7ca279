use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qstructure::exact_algebra::parse_rational;
use qstructure::families::{BigQParams, FamilyKind};
use qstructure::harness::{parse_config_file, parse_params, run_verify, VerifyConfig};
use qstructure::limits::{eps_sequence, limit_aw_to_bigq, limit_cqjacobi_to_jacobi};
use qstructure::relations::IdentityId;

#[derive(Parser)]
#[command(name = "qstructure", version, about = "Exact checks of structure relations for q-orthogonal polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification grid and write a JSON report.
    Verify(VerifyArgs),
    /// Print a convergence table for one limit transition.
    Limits(LimitsArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Family name, comma list, or `all`.
    #[arg(long)]
    family: Option<String>,
    /// Identity name, comma list, or `all`.
    #[arg(long)]
    identity: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Single parameter point, e.g. `a=1/3,b=1/4,c=1/5,q=1/2`.
    #[arg(long)]
    params: Option<String>,
    #[arg(long)]
    degree_cap: Option<usize>,
    /// Largest degree for operator matrix identities.
    #[arg(long)]
    matrix_degree: Option<usize>,
    /// Write `null` for the report timestamp.
    #[arg(long)]
    no_timestamp: bool,
    /// `key=value` file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// JSON report path; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    summary_csv: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    CqjacobiToJacobi,
    AwToBigq,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, default_value = "0")]
    alpha: String,
    #[arg(long, default_value = "0")]
    beta: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Number of halvings of epsilon.
    #[arg(long, default_value_t = 8)]
    eps_steps: usize,
    /// q = 1 - 2^-k for k in k-min..=k-max.
    #[arg(long, default_value_t = 3)]
    k_min: u32,
    #[arg(long, default_value_t = 10)]
    k_max: u32,
    /// Big q-Jacobi point `a=..,b=..,c=..,q=..` for the epsilon path.
    #[arg(long, default_value = "a=1/3,b=1/4,c=1/5,q=1/2")]
    params: String,
    /// CSV path; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Bad input (exit 2) versus a failed check (exit 1).
enum Failure {
    Config(String),
    Checks,
}

fn config<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Config(e.to_string())
}

fn pick<T: FromStr>(flag: Option<T>, file: &BTreeMap<String, String>, key: &str, default: T) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    if let Some(v) = flag {
        return Ok(v);
    }
    match file.get(key) {
        Some(s) => s.parse().map_err(|e| Failure::Config(format!("config key {key}: {e}"))),
        None => Ok(default),
    }
}

fn split_list<T>(s: &str, one: impl Fn(&str) -> qstructure::error::Result<Vec<T>>) -> Result<Vec<T>, Failure> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        out.extend(one(part).map_err(config)?);
    }
    if out.is_empty() {
        return Err(Failure::Config("empty selection".into()));
    }
    Ok(out)
}

fn build_config(args: &VerifyArgs) -> Result<(VerifyConfig, bool), Failure> {
    let file = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Config(format!("{}: {e}", p.display())))?;
            parse_config_file(&text).map_err(config)?
        }
        None => BTreeMap::new(),
    };
    const KEYS: [&str; 9] =
        ["family", "identity", "n-max", "samples", "seed", "params", "degree-cap", "matrix-degree", "no-timestamp"];
    if let Some(k) = file.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(Failure::Config(format!("unknown config key '{k}'")));
    }
    let d = VerifyConfig::default();
    let family = pick(args.family.clone(), &file, "family", "all".to_string())?;
    let identity = pick(args.identity.clone(), &file, "identity", "all".to_string())?;
    let params = args.params.clone().or_else(|| file.get("params").cloned());
    let cfg = VerifyConfig {
        families: split_list(&family, FamilyKind::parse_selection)?,
        identities: split_list(&identity, IdentityId::parse_selection)?,
        n_max: pick(args.n_max, &file, "n-max", d.n_max)?,
        samples: pick(args.samples, &file, "samples", d.samples)?,
        seed: pick(args.seed, &file, "seed", d.seed)?,
        degree_cap: pick(args.degree_cap, &file, "degree-cap", d.degree_cap)?,
        matrix_degree: pick(args.matrix_degree, &file, "matrix-degree", d.matrix_degree)?,
        params: params.map(|p| parse_params(&p)).transpose().map_err(config)?,
    };
    let no_timestamp = args.no_timestamp || pick(None, &file, "no-timestamp", false)?;
    cfg.validate().map_err(config)?;
    Ok((cfg, no_timestamp))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Config(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let (cfg, no_timestamp) = build_config(&args)?;
    let timestamp = (!no_timestamp).then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    let report = run_verify(&cfg, timestamp).map_err(config)?;
    for e in &report.errors {
        eprintln!("error: {e}");
    }
    write_out(args.output.as_deref(), &report.to_json())?;
    if let Some(p) = &args.summary_csv {
        write_out(Some(p), &report.summary_csv())?;
    }
    let failed = report.results.iter().filter(|r| r.status == qstructure::harness::Status::Fail).count();
    eprintln!("{} results, {failed} failed", report.results.len());
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn limits(args: LimitsArgs) -> Result<(), Failure> {
    let table = match args.which {
        Which::CqjacobiToJacobi => {
            let alpha = parse_rational(&args.alpha).map_err(config)?;
            let beta = parse_rational(&args.beta).map_err(config)?;
            if args.k_min > args.k_max {
                return Err(Failure::Config("k-min exceeds k-max".into()));
            }
            let ks: Vec<u32> = (args.k_min..=args.k_max).collect();
            limit_cqjacobi_to_jacobi(&alpha, &beta, args.n, &ks).map_err(config)?
        }
        Which::AwToBigq => {
            let m = parse_params(&args.params).map_err(config)?;
            let get = |k: &str| m.get(k).cloned().ok_or_else(|| Failure::Config(format!("--params needs {k}")));
            let p = BigQParams::new(get("a")?, get("b")?, get("c")?, get("q")?);
            limit_aw_to_bigq(&p, args.n, &eps_sequence(args.eps_steps)).map_err(config)?.1
        }
    };
    write_out(args.output.as_deref(), &table.to_csv())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Limits(a) => limits(a),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
