use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use matrixcs::blocks::{cartesian_pinch_decompose, factor_pair_block, pinch_decompose_matrix};
use matrixcs::lieb::FactorPair;
use matrixcs::ToleranceConfig;

use crate::exit::{CliResult, Failure, FAILED};
use crate::io;

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// Matrix JSON file: a PSD (n+m)x(n+m) block matrix, or a square T with --from-matrix.
    input: PathBuf,
    /// Size of the top-left block. Defaults to half the matrix.
    #[arg(long)]
    n: Option<usize>,
    /// Size of the bottom-right block. Defaults to the remainder.
    #[arg(long)]
    m: Option<usize>,
    /// Factor pair for --from-matrix.
    #[arg(long, default_value = "sqrt")]
    pair: String,
    /// Treat the input as T and decompose [[g^2(|T|), T*], [T, h^2(|T*|)]] through its Cartesian rotation.
    #[arg(long)]
    from_matrix: bool,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

/// Allowed reconstruction residual for a source of Frobenius norm `scale`.
pub fn residual_tolerance(scale: f64) -> f64 {
    1e-10 * (1.0 + scale)
}

pub fn run(args: DecomposeArgs) -> CliResult {
    let tol = ToleranceConfig::default();
    let input = io::read_matrix(&args.input)?;
    let size = input.require_square().map_err(|e| Failure::usage(e.to_string()))?;

    let (source, decomp) = if args.from_matrix {
        if args.n.is_some() || args.m.is_some() {
            return Err(Failure::usage("--n/--m do not apply with --from-matrix"));
        }
        let pair: FactorPair = args.pair.parse().map_err(|e| Failure::usage(format!("{e}")))?;
        let block = factor_pair_block(&input, &pair, &tol).map_err(precondition)?;
        let decomp = cartesian_pinch_decompose(&input, &pair, &tol).map_err(precondition)?;
        (block.assembled().clone(), decomp)
    } else {
        let n = match (args.n, args.m) {
            (Some(n), Some(m)) if n + m != size => {
                return Err(Failure::usage(format!("n + m = {} but the matrix is {size}x{size}", n + m)))
            }
            (Some(n), _) => n,
            (None, Some(m)) => size.checked_sub(m).ok_or_else(|| Failure::usage("m exceeds the matrix size"))?,
            (None, None) => size / 2,
        };
        if n == 0 || n >= size {
            return Err(Failure::usage(format!("split {n} leaves an empty block in a {size}x{size} matrix")));
        }
        let decomp = pinch_decompose_matrix(&input, n, &tol).map_err(precondition)?;
        (input, decomp)
    };

    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| Failure::usage(format!("cannot create {}: {e}", args.out_dir.display())))?;
    for (name, m) in [("u", &decomp.u), ("v", &decomp.v), ("top", &decomp.top), ("bottom", &decomp.bottom)] {
        io::write_file(&args.out_dir.join(format!("{name}.json")), &m.to_json())?;
    }

    let residual = decomp.residual(&source);
    let allowed = residual_tolerance(source.frobenius_norm());
    println!("residual {residual:e} (allowed {allowed:e}), unitarity defect {:e}", decomp.unitarity_defect());
    Ok(if residual <= allowed { ExitCode::SUCCESS } else { ExitCode::from(FAILED) })
}

fn precondition(e: matrixcs::Error) -> Failure {
    match e {
        matrixcs::Error::NotPsd { lambda_min } => println!("lambda_min {lambda_min:e}"),
        matrixcs::Error::NotHermitian { .. } => return Failure::precondition(e.to_string()),
        _ => {}
    }
    Failure::from(e)
}
