use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args};
use matrixcs::lieb::{lieb_eval, LiebFunctional, NormKind};
use matrixcs::means::{geom_mean, weighted_geom_mean, WeightedMeanQuery};
use matrixcs::{CMatrix, Complex64, ToleranceConfig};

use crate::exit::{CliResult, Failure};
use crate::io;

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true).args([
    "det", "per", "rho", "esym", "trace", "frobenius", "operator", "kyfan", "schatten", "gm", "wgm",
])))]
pub struct EvalArgs {
    #[arg(long)]
    det: bool,
    #[arg(long)]
    per: bool,
    #[arg(long)]
    rho: bool,
    /// Elementary symmetric function e_K of the eigenvalues.
    #[arg(long, value_name = "K")]
    esym: Option<usize>,
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    frobenius: bool,
    #[arg(long)]
    operator: bool,
    #[arg(long, value_name = "K")]
    kyfan: Option<usize>,
    #[arg(long, value_name = "P")]
    schatten: Option<f64>,
    /// Geometric mean A # B of two PD matrices.
    #[arg(long)]
    gm: bool,
    /// Weighted geometric mean A #_T B.
    #[arg(long, value_name = "T")]
    wgm: Option<f64>,
    /// Matrix JSON files: one for functionals, two for means.
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

enum What {
    Functional(LiebFunctional),
    Mean(f64),
}

fn what(args: &EvalArgs) -> What {
    use LiebFunctional::*;
    if args.det {
        What::Functional(Determinant)
    } else if args.per {
        What::Functional(Permanent)
    } else if args.rho {
        What::Functional(SpectralRadius)
    } else if let Some(k) = args.esym {
        What::Functional(ElemSym(k))
    } else if args.trace {
        What::Functional(UINorm(NormKind::Trace))
    } else if args.frobenius {
        What::Functional(UINorm(NormKind::Frobenius))
    } else if args.operator {
        What::Functional(UINorm(NormKind::Operator))
    } else if let Some(k) = args.kyfan {
        What::Functional(UINorm(NormKind::KyFan(k)))
    } else if let Some(p) = args.schatten {
        What::Functional(UINorm(NormKind::SchattenP(p)))
    } else if let Some(t) = args.wgm {
        What::Mean(t)
    } else {
        What::Mean(0.5)
    }
}

/// Prints real values plainly and complex ones as `re+imi`.
pub fn format_scalar(z: Complex64) -> String {
    if z.im.abs() <= 1e-12 * z.re.abs().max(1.0) {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn two(files: &[PathBuf]) -> Result<(CMatrix, CMatrix), Failure> {
    match files {
        [a, b] => Ok((io::read_matrix(a)?, io::read_matrix(b)?)),
        _ => Err(Failure::usage(format!("a mean needs exactly two files, got {}", files.len()))),
    }
}

pub fn run(args: EvalArgs) -> CliResult {
    let tol = ToleranceConfig::default();
    match what(&args) {
        What::Functional(f) => {
            if let LiebFunctional::UINorm(kind) = f {
                kind.validate().map_err(|e| Failure::usage(e.to_string()))?;
            }
            let [path] = args.files.as_slice() else {
                return Err(Failure::usage(format!("a functional takes one file, got {}", args.files.len())));
            };
            let m = io::read_matrix(path)?;
            println!("{}", format_scalar(lieb_eval(&f, &m, &tol)?));
        }
        What::Mean(t) => {
            let (a, b) = two(&args.files)?;
            let mean = if args.gm {
                geom_mean(&a, &b, &tol)?
            } else {
                weighted_geom_mean(&WeightedMeanQuery::new(a, b, t, &tol)?, &tol)?
            };
            println!("{}", mean.to_json());
        }
    }
    Ok(ExitCode::SUCCESS)
}
