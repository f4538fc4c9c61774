//! Every inequality as a seeded, tolerance-aware check over random ensembles.

pub mod checks;
mod counterexample;
mod ensemble;
mod outcome;
mod registry;
pub mod rng;
mod runner;

pub use counterexample::{reproduce_counterexample, search_small_counterexamples, Counterexample, SearchRecord};
pub use ensemble::{EnsembleKind, EnsembleSpec, Sampler, PD_FLOOR};
pub use outcome::{CheckOutcome, Measure, PassRule, Status};
pub use registry::{CheckId, TrialContext};
pub use runner::{
    default_functionals, default_pairs, run, run_trial, CheckSummary, ConfigRecord, RunConfig, RunReport,
};
