use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, ValueEnum};
use matrixcs::corpus::{self, default_functionals, default_pairs, CheckId, PassRule, RunConfig};
use matrixcs::lieb::{FactorPair, LiebFunctional};
use matrixcs::ToleranceConfig;

use crate::exit::{CliResult, Failure, FAILED, INCONCLUSIVE};
use crate::io;

pub const THREADS_VAR: &str = "MATRIXCS_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Comma-separated dimensions, each in [2, 16].
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    dims: Vec<usize>,
    #[arg(long, default_value_t = 1e-12)]
    tol_abs: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol_rel: f64,
    /// Check names (with or without the `check_` prefix) or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    checks: Vec<String>,
    /// Functional names, e.g. `det,per,rho,esym(2),frobenius,kyfan(2),schatten(3)`.
    #[arg(long, value_delimiter = ',')]
    functionals: Vec<String>,
    /// Factor pairs, e.g. `sqrt,power(0.25)`.
    #[arg(long, value_delimiter = ',')]
    pairs: Vec<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include a metadata block with a timestamp (json only).
    #[arg(long)]
    metadata: bool,
    /// Emit only the per-variant summary, not every outcome.
    #[arg(long)]
    summary_only: bool,
}

fn parse_checks(names: &[String]) -> Result<Vec<CheckId>, Failure> {
    if names.iter().any(|n| n.trim().eq_ignore_ascii_case("all")) {
        if names.len() > 1 {
            return Err(Failure::usage("`all` cannot be combined with other check names"));
        }
        return Ok(CheckId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in names {
        let id: CheckId = name.parse().map_err(|_| Failure::usage(format!("unknown check '{name}'")))?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    if out.is_empty() {
        return Err(Failure::usage("no checks selected"));
    }
    Ok(out)
}

fn parse_list<T: std::str::FromStr>(names: &[String], what: &str, default: Vec<T>) -> Result<Vec<T>, Failure>
where
    T::Err: std::fmt::Display,
{
    if names.is_empty() {
        return Ok(default);
    }
    names
        .iter()
        .map(|n| n.parse::<T>().map_err(|e| Failure::usage(format!("unknown {what} '{n}': {e}"))))
        .collect()
}

pub fn config(args: &VerifyArgs) -> Result<RunConfig, Failure> {
    if args.trials == 0 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    if args.dims.is_empty() {
        return Err(Failure::usage("--dims is empty"));
    }
    if let Some(d) = args.dims.iter().find(|d| !(2..=16).contains(*d)) {
        return Err(Failure::usage(format!("dimension {d} outside [2, 16]")));
    }
    for (flag, v) in [("--tol-abs", args.tol_abs), ("--tol-rel", args.tol_rel)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Failure::usage(format!("{flag} must be positive, got {v}")));
        }
    }
    let checks = parse_checks(&args.checks)?;
    let functionals: Vec<LiebFunctional> = parse_list(&args.functionals, "functional", default_functionals())?;
    let pairs: Vec<FactorPair> = parse_list(&args.pairs, "factor pair", default_pairs())?;
    if args.metadata && args.format == Format::Csv {
        return Err(Failure::usage("--metadata is only available with --format json"));
    }
    let mut dims = args.dims.clone();
    dims.sort_unstable();
    dims.dedup();
    Ok(RunConfig {
        seed: args.seed,
        trials: args.trials,
        dims,
        checks,
        functionals,
        pairs,
        rule: PassRule { abs: args.tol_abs, rel: args.tol_rel },
        tol: ToleranceConfig::default(),
        keep_outcomes: !args.summary_only,
    })
}

pub fn thread_count() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::usage(format!("{THREADS_VAR} must be a positive integer, got '{v}'"))),
        },
    }
}

pub fn run(args: VerifyArgs) -> CliResult {
    let config = config(&args)?;
    let threads = thread_count()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    let mut report = pool.install(|| corpus::run(&config));

    if args.metadata {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let mut meta = std::collections::BTreeMap::new();
        meta.insert("timestamp".to_string(), secs.to_string());
        meta.insert("version".to_string(), env!("CARGO_PKG_VERSION").to_string());
        report.metadata = Some(meta);
    }

    let text = match args.format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => io::report_csv(&report).map_err(|e| Failure::usage(format!("csv: {e}")))?,
    };
    match &args.output {
        Some(path) => io::write_file(path, &text)?,
        None => print!("{text}"),
    }

    let (failures, inconclusive) = (report.failures(), report.inconclusive());
    eprintln!("{} outcomes, {failures} failed, {inconclusive} inconclusive", report.total_trials());
    Ok(if failures > 0 {
        ExitCode::from(FAILED)
    } else if inconclusive > 0 {
        ExitCode::from(INCONCLUSIVE)
    } else {
        ExitCode::SUCCESS
    })
}

fn show_values(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(", ")
}

pub fn counterexample() -> CliResult {
    let tol = ToleranceConfig::default();
    let ce = corpus::reproduce_counterexample(&tol)?;
    println!("T = {}", ce.t.to_json());
    println!("|T| + |T*| = {}", ce.polar_sum.to_json());
    println!("T + T* = {}", ce.real_sum.to_json());
    println!("singular values of |T| + |T*|: {}", show_values(&ce.polar_sum_singular));
    println!("singular values of T + T*: {}", show_values(&ce.real_sum_singular));
    println!("lambda_min(|T| + |T*| - |T + T*|) = {:.15}", ce.lambda_min);
    let direction: Vec<[f64; 2]> = ce.eigenvector.iter().map(|z| [z.re, z.im]).collect();
    println!(
        "violating direction = {}",
        serde_json::to_string(&direction).map_err(|e| Failure::usage(e.to_string()))?
    );
    if ce.confirmed {
        println!("confirmed: |T + T*| <= |T| + |T*| fails");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("not confirmed");
        Ok(ExitCode::from(FAILED))
    }
}
