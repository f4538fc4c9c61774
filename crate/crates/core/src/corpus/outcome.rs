use serde::{Deserialize, Serialize};

use crate::linalg::{herm_eig, CMatrix};
use crate::{Error, Result, ToleranceConfig};

/// `margin >= -(abs + rel * max(1, |rhs|))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PassRule {
    pub abs: f64,
    pub rel: f64,
}

impl Default for PassRule {
    fn default() -> Self {
        Self { abs: 1e-12, rel: 1e-8 }
    }
}

impl PassRule {
    pub fn slack(&self, rhs: f64) -> f64 {
        self.abs + self.rel * rhs.abs().max(1.0)
    }

    pub fn passes(&self, margin: f64, rhs: f64) -> bool {
        margin >= -self.slack(rhs)
    }
}

/// One evaluated inequality `lhs <= rhs`.
///
/// Order relations `X <= Y` are stored with `rhs = max|lambda(Y - X)|`,
/// `lhs = rhs - lambda_min(Y - X)` and `margin = lambda_min(Y - X)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measure {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// Diagonal shift applied to make geometric-mean operands definite.
    pub shift: Option<f64>,
}

impl Measure {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Self { lhs, rhs, margin: rhs - lhs, shift: None }
    }

    /// `m >= O`.
    pub fn psd(m: &CMatrix, tol: &ToleranceConfig) -> Result<Self> {
        let eig = herm_eig(&m.hermitian_part(), tol)?;
        let scale = eig.spectral_abs_max();
        let lambda_min = eig.lambda_min();
        Ok(Self { lhs: scale - lambda_min, rhs: scale, margin: lambda_min, shift: None })
    }

    /// `lower <= upper` in the Loewner order.
    pub fn order(lower: &CMatrix, upper: &CMatrix, tol: &ToleranceConfig) -> Result<Self> {
        Self::psd(&(upper - lower), tol)
    }

    /// `-c <= upper` and `c <= upper`, reported by the tighter side.
    pub fn plus_minus(c: &CMatrix, upper: &CMatrix, tol: &ToleranceConfig) -> Result<Self> {
        let plus = Self::order(c, upper, tol)?;
        let minus = Self::psd(&(upper + c), tol)?;
        Ok(if minus.margin < plus.margin { minus } else { plus })
    }

    pub fn with_shift(mut self, shift: Option<f64>) -> Self {
        self.shift = shift;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A solver failed, so the inequality could not be evaluated.
    Inconclusive,
}

/// A single trial's record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check_id: String,
    pub trial: u64,
    pub dim: usize,
    pub seed: u64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub pass: bool,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckOutcome {
    pub fn new(check_id: String, dim: usize, trial: u64, seed: u64, result: Result<Measure>, rule: &PassRule) -> Self {
        match result {
            Ok(m) => {
                let pass = m.margin.is_finite() && rule.passes(m.margin, m.rhs);
                Self {
                    check_id,
                    trial,
                    dim,
                    seed,
                    lhs: Some(m.lhs),
                    rhs: Some(m.rhs),
                    margin: Some(m.margin),
                    pass,
                    status: if pass { Status::Pass } else { Status::Fail },
                    shift: m.shift,
                    error: None,
                }
            }
            Err(e) => Self::inconclusive(check_id, dim, trial, seed, &e),
        }
    }

    fn inconclusive(check_id: String, dim: usize, trial: u64, seed: u64, e: &Error) -> Self {
        Self {
            check_id,
            trial,
            dim,
            seed,
            lhs: None,
            rhs: None,
            margin: None,
            pass: false,
            status: Status::Inconclusive,
            shift: None,
            error: Some(e.to_string()),
        }
    }
}
