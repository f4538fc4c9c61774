use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod decompose;
mod eval;
mod exit;
mod io;
mod verify;

use exit::Failure;

#[derive(Parser)]
#[command(name = "matrixcs", version, about = "Verify matrix Cauchy-Schwarz inequalities on seeded random ensembles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the inequality corpus and write a report.
    Verify(verify::VerifyArgs),
    /// Reproduce the 3x3 example where |T + T*| <= |T| + |T*| fails.
    Counterexample,
    /// Pinch a PSD 2x2 block matrix into u diag(A, 0) u* + v diag(0, B) v*.
    Decompose(decompose::DecomposeArgs),
    /// Evaluate a functional, norm or geometric mean of matrix files.
    Eval(eval::EvalArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify::run(args),
        Command::Counterexample => verify::counterexample(),
        Command::Decompose(args) => decompose::run(args),
        Command::Eval(args) => eval::run(args),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
