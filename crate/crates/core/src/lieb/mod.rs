//! Lieb functionals, unitarily invariant norms and factor pairs.

mod axioms;
mod functional;
mod norm;
mod pair;
mod permanent;
pub mod poly;

pub use axioms::{check_lieb_axioms, lieb_axiom_trial};
pub use functional::{lieb_eval, LiebFunctional, MatrixProfile};
pub use norm::NormKind;
pub use pair::{apply_pair, FactorPair};
pub use permanent::{permanent, PERMANENT_LIMIT};
