//! Numerical matrix analysis around the matrix Cauchy-Schwarz inequality.
//!
//! The crate is layered bottom-up:
//!
//! - [`linalg`]: a dense complex matrix type with a cyclic Jacobi Hermitian
//!   eigensolver, an SVD built on it, functional calculus, PSD certificates
//!   and polar/Cartesian parts.
//! - [`means`]: the (weighted) matrix geometric mean.
//! - [`lieb`]: Lieb functionals (determinant, permanent, spectral radius,
//!   elementary symmetric functions, unitarily invariant norms) and factor
//!   pairs `g(t) h(t) = t`.
//! - [`blocks`]: 2x2 block matrices and the constructive pinching
//!   decomposition `M = U diag(A, 0) U* + V diag(0, B) V*`.
//! - [`corpus`]: every inequality as a seeded, tolerance-aware check over
//!   random ensembles, plus the counterexample showing
//!   `|Re T| <= (|T| + |T*|)/2` fails in general.

pub mod blocks;
pub mod corpus;
mod error;
pub mod lieb;
pub mod linalg;
pub mod means;
mod tolerance;

pub use error::{Error, Result};
pub use linalg::CMatrix;
pub use num_complex::Complex64;
pub use tolerance::ToleranceConfig;
