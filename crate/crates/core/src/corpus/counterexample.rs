use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::{abs_hermitian, is_psd, singular_values, CMatrix, PolarSpectra};
use crate::{Result, ToleranceConfig};

use super::ensemble::Sampler;
use super::outcome::{CheckOutcome, Measure, Status};

/// The 3x3 nilpotent shift with `|T + T*| <= |T| + |T*|` failing.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub t: CMatrix,
    /// `|T| + |T*|`.
    pub polar_sum: CMatrix,
    /// `T + T*`.
    pub real_sum: CMatrix,
    /// `|T + T*|`.
    pub abs_real_sum: CMatrix,
    pub polar_sum_singular: Vec<f64>,
    pub real_sum_singular: Vec<f64>,
    /// `lambda_min(|T| + |T*| - |T + T*|)` and its eigenvector.
    pub lambda_min: f64,
    pub eigenvector: Vec<Complex64>,
    /// Both singular-value lists match and the order relation fails by more
    /// than `1e-3`.
    pub confirmed: bool,
}

pub const EXPECTED_POLAR_SUM_SINGULAR: [f64; 3] = [2.0, 1.0, 1.0];

pub fn expected_real_sum_singular() -> [f64; 3] {
    [std::f64::consts::SQRT_2, std::f64::consts::SQRT_2, 0.0]
}

fn matches(got: &[f64], want: &[f64]) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(a, b)| (a - b).abs() <= 1e-10)
}

pub fn reproduce_counterexample(tol: &ToleranceConfig) -> Result<Counterexample> {
    let t = CMatrix::from_real(3, 3, &[0., 1., 0., 0., 0., 1., 0., 0., 0.])?;
    let spectra = PolarSpectra::new(&t, tol)?;
    let polar_sum = &spectra.abs_fn(|s| s, tol)? + &spectra.abs_star_fn(|s| s, tol)?;
    let real_sum = &t + &t.adjoint();
    let abs_real_sum = abs_hermitian(&real_sum, tol)?;
    let polar_sum_singular = singular_values(&polar_sum, tol)?;
    let real_sum_singular = singular_values(&real_sum, tol)?;
    let witness = is_psd(&(&polar_sum - &abs_real_sum), tol)?;
    let confirmed = matches(&polar_sum_singular, &EXPECTED_POLAR_SUM_SINGULAR)
        && matches(&real_sum_singular, &expected_real_sum_singular())
        && witness.lambda_min < -1e-3;
    Ok(Counterexample {
        t,
        polar_sum,
        real_sum,
        abs_real_sum,
        polar_sum_singular,
        real_sum_singular,
        lambda_min: witness.lambda_min,
        eigenvector: witness.eigenvector,
        confirmed,
    })
}

impl Counterexample {
    /// The order relation `|T + T*| <= |T| + |T*|` as an outcome. Here the
    /// expected result is a violation, so `pass` means the violation was
    /// reproduced.
    pub fn outcome(&self, tol: &ToleranceConfig) -> Result<CheckOutcome> {
        let m = Measure::order(&self.abs_real_sum, &self.polar_sum, tol)?;
        Ok(CheckOutcome {
            check_id: "reproduce_counterexample".into(),
            trial: 0,
            dim: 3,
            seed: 0,
            lhs: Some(m.lhs),
            rhs: Some(m.rhs),
            margin: Some(m.margin),
            pass: self.confirmed,
            status: if self.confirmed { Status::Pass } else { Status::Fail },
            shift: None,
            error: None,
        })
    }
}

/// Result of sampling for 2x2 violations of `|T + T*| <= |T| + |T*|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub draws: u64,
    pub violations: u64,
    /// Smallest `lambda_min(|T| + |T*| - |T + T*|)` seen.
    pub min_lambda: f64,
}

/// Draws Ginibre matrices of size `dim` and counts order violations beyond
/// `tol.psd`. This records what was observed; it proves nothing.
pub fn search_small_counterexamples(dim: usize, draws: u64, seed: u64, tol: &ToleranceConfig) -> Result<SearchRecord> {
    let mut sampler = Sampler::new(seed);
    let mut record = SearchRecord { draws, violations: 0, min_lambda: f64::INFINITY };
    for _ in 0..draws {
        let t = sampler.ginibre(dim);
        let spectra = PolarSpectra::new(&t, tol)?;
        let polar_sum = &spectra.abs_fn(|s| s, tol)? + &spectra.abs_star_fn(|s| s, tol)?;
        let abs_real_sum = abs_hermitian(&(&t + &t.adjoint()), tol)?;
        let w = is_psd(&(&polar_sum - &abs_real_sum), tol)?;
        record.min_lambda = record.min_lambda.min(w.lambda_min);
        if !w.holds {
            record.violations += 1;
        }
    }
    Ok(record)
}
