//! Exit codes: 0 pass, 1 failed check, 2 usage, 3 inconclusive, 4 precondition.

use std::process::ExitCode;

pub const FAILED: u8 = 1;
pub const USAGE: u8 = 2;
pub const INCONCLUSIVE: u8 = 3;
pub const PRECONDITION: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: USAGE, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self { code: PRECONDITION, message: message.into() }
    }
}

impl From<matrixcs::Error> for Failure {
    fn from(e: matrixcs::Error) -> Self {
        match e {
            matrixcs::Error::NotPsd { .. } | matrixcs::Error::NotPositiveDefinite { .. } => {
                Failure::precondition(e.to_string())
            }
            matrixcs::Error::NoConvergence { .. } | matrixcs::Error::RootFindingFailed { .. } => {
                Failure { code: INCONCLUSIVE, message: e.to_string() }
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

pub type CliResult = Result<ExitCode, Failure>;
