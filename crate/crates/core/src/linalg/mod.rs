//! Dense complex linear algebra: the matrix carrier, a Jacobi Hermitian
//! eigensolver, SVD, functional calculus and PSD certificates.

mod eig;
mod func;
mod lu;
mod matrix;
mod polar;
mod svd;

pub use eig::{herm_eig, require_hermitian, EigDecomp};
pub use func::{abs_hermitian, apply_fn, is_psd, loewner_leq, require_positive_definite, sqrtm, PsdWitness};
pub use lu::determinant;
pub use matrix::{inner, quadratic_form, vec_norm, CMatrix};
pub use polar::{polar_parts, PolarParts, PolarSpectra};
pub use svd::{singular_values, svd, SvdDecomp};
pub(crate) use svd::orthonormalize_against;
