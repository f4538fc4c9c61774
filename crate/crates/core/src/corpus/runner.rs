use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lieb::{FactorPair, LiebFunctional, NormKind};
use crate::ToleranceConfig;

use super::outcome::{CheckOutcome, PassRule, Status};
use super::registry::{CheckId, TrialContext};
use super::rng::trial_seed;

/// Functionals exercised by default.
pub fn default_functionals() -> Vec<LiebFunctional> {
    vec![
        LiebFunctional::Determinant,
        LiebFunctional::Permanent,
        LiebFunctional::SpectralRadius,
        LiebFunctional::ElemSym(2),
        LiebFunctional::UINorm(NormKind::Frobenius),
        LiebFunctional::UINorm(NormKind::Trace),
        LiebFunctional::UINorm(NormKind::Operator),
        LiebFunctional::UINorm(NormKind::KyFan(2)),
        LiebFunctional::UINorm(NormKind::SchattenP(3.0)),
    ]
}

/// Factor pairs exercised by default.
pub fn default_pairs() -> Vec<FactorPair> {
    vec![FactorPair::Sqrt, FactorPair::Power(0.25), FactorPair::Power(0.5), FactorPair::Power(0.75)]
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: u64,
    pub dims: Vec<usize>,
    pub checks: Vec<CheckId>,
    pub functionals: Vec<LiebFunctional>,
    pub pairs: Vec<FactorPair>,
    pub rule: PassRule,
    pub tol: ToleranceConfig,
    /// Keep every outcome, not only the per-variant summary.
    pub keep_outcomes: bool,
}

impl RunConfig {
    /// All checks with the default functionals and pairs.
    pub fn new(seed: u64, trials: u64, dims: Vec<usize>) -> Self {
        Self {
            seed,
            trials,
            dims,
            checks: CheckId::ALL.to_vec(),
            functionals: default_functionals(),
            pairs: default_pairs(),
            rule: PassRule::default(),
            tol: ToleranceConfig::default(),
            keep_outcomes: true,
        }
    }

    pub fn record(&self) -> ConfigRecord {
        ConfigRecord {
            seed: self.seed,
            trials: self.trials,
            dims: self.dims.clone(),
            checks: self.checks.iter().map(|c| c.name().to_string()).collect(),
            functionals: self.functionals.iter().map(|f| f.to_string()).collect(),
            pairs: self.pairs.iter().map(|p| p.to_string()).collect(),
            tol_abs: self.rule.abs,
            tol_rel: self.rule.rel,
        }
    }
}

/// The serialized form of a [`RunConfig`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub seed: u64,
    pub trials: u64,
    pub dims: Vec<usize>,
    pub checks: Vec<String>,
    pub functionals: Vec<String>,
    pub pairs: Vec<String>,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub trials: u64,
    pub failures: u64,
    pub inconclusive: u64,
    pub min_margin: Option<f64>,
}

impl CheckSummary {
    fn empty() -> Self {
        Self { trials: 0, failures: 0, inconclusive: 0, min_margin: None }
    }

    fn add(&mut self, o: &CheckOutcome) {
        self.trials += 1;
        match o.status {
            Status::Pass => {}
            Status::Fail => self.failures += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
        if let Some(m) = o.margin.filter(|m| !m.is_nan()) {
            self.min_margin = Some(self.min_margin.map_or(m, |x| x.min(m)));
        }
    }

    fn merge(&mut self, other: &CheckSummary) {
        self.trials += other.trials;
        self.failures += other.failures;
        self.inconclusive += other.inconclusive;
        self.min_margin = match (self.min_margin, other.min_margin) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: ConfigRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: BTreeMap<String, CheckSummary>,
}

impl RunReport {
    pub fn total_trials(&self) -> u64 {
        self.summary.values().map(|s| s.trials).sum()
    }

    pub fn failures(&self) -> u64 {
        self.summary.values().map(|s| s.failures).sum()
    }

    pub fn inconclusive(&self) -> u64 {
        self.summary.values().map(|s| s.inconclusive).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Default)]
struct Partial {
    outcomes: Vec<CheckOutcome>,
    summary: BTreeMap<String, CheckSummary>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.outcomes.extend(other.outcomes);
        for (k, v) in other.summary {
            self.summary.entry(k).or_insert_with(CheckSummary::empty).merge(&v);
        }
        self
    }
}

/// Runs one `(check, dim, trial)` cell.
pub fn run_trial(config: &RunConfig, check: CheckId, dim: usize, trial: u64) -> Vec<CheckOutcome> {
    let seed = trial_seed(config.seed, check.name(), dim, trial);
    let mut cx = TrialContext::new(check, dim, seed, &config.functionals, &config.pairs, &config.tol);
    check.run(&mut cx);
    cx.into_variants()
        .into_iter()
        .map(|(id, m)| CheckOutcome::new(id, dim, trial, seed, m, &config.rule))
        .collect()
}

/// Runs the configured corpus on the current rayon pool. The report does not
/// depend on scheduling: outcomes are sorted by `(check_id, dim, trial)`.
pub fn run(config: &RunConfig) -> RunReport {
    let cells: Vec<(CheckId, usize, u64)> = config
        .checks
        .iter()
        .flat_map(|&c| config.dims.iter().flat_map(move |&d| (0..config.trials).map(move |t| (c, d, t))))
        .collect();

    let partial = cells
        .par_iter()
        .fold(Partial::default, |mut acc, &(check, dim, trial)| {
            for o in run_trial(config, check, dim, trial) {
                acc.summary.entry(o.check_id.clone()).or_insert_with(CheckSummary::empty).add(&o);
                if config.keep_outcomes {
                    acc.outcomes.push(o);
                }
            }
            acc
        })
        .reduce(Partial::default, Partial::merge);

    let mut outcomes = partial.outcomes;
    outcomes.sort_by(|a, b| (&a.check_id, a.dim, a.trial).cmp(&(&b.check_id, b.dim, b.trial)));
    RunReport { config: config.record(), metadata: None, outcomes, summary: partial.summary }
}
