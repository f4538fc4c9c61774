use num_complex::Complex64;

use super::{herm_eig, CMatrix, EigDecomp};
use crate::{Error, Result, ToleranceConfig};

/// `phi(A) = U diag(phi(lambda_i)) U*` for PSD `A`.
///
/// Negative eigenvalues within `tol.psd` of zero are clamped before `phi` is
/// applied; anything more negative is rejected.
pub fn apply_fn(a: &CMatrix, phi: impl Fn(f64) -> f64, tol: &ToleranceConfig) -> Result<CMatrix> {
    herm_eig(a, tol)?.psd_map(phi, tol)
}

/// Principal square root of a PSD matrix.
pub fn sqrtm(a: &CMatrix, tol: &ToleranceConfig) -> Result<CMatrix> {
    apply_fn(a, f64::sqrt, tol)
}

/// `|H| = (H^2)^{1/2}` of a Hermitian matrix, computed from the spectrum of `H`.
pub fn abs_hermitian(h: &CMatrix, tol: &ToleranceConfig) -> Result<CMatrix> {
    Ok(herm_eig(h, tol)?.map(f64::abs))
}

/// Result of a PSD certification: the smallest eigenvalue and its eigenvector.
#[derive(Debug, Clone)]
pub struct PsdWitness {
    pub holds: bool,
    pub lambda_min: f64,
    pub lambda_abs_max: f64,
    pub eigenvector: Vec<Complex64>,
}

/// Certifies `H >= O`: true iff `lambda_min >= -tol.psd * max(1, max|lambda|)`.
pub fn is_psd(h: &CMatrix, tol: &ToleranceConfig) -> Result<PsdWitness> {
    let eig = herm_eig(h, tol)?;
    Ok(witness_from(&eig, tol.psd))
}

pub(crate) fn witness_from(eig: &EigDecomp, threshold: f64) -> PsdWitness {
    let n = eig.dim();
    let lambda_min = eig.lambda_min();
    let lambda_abs_max = eig.spectral_abs_max();
    PsdWitness {
        holds: lambda_min >= -threshold * lambda_abs_max.max(1.0),
        lambda_min,
        lambda_abs_max,
        eigenvector: eig.basis.col(n - 1),
    }
}

/// Loewner order test `A <= B`, i.e. `B - A >= O`.
pub fn loewner_leq(a: &CMatrix, b: &CMatrix, tol: &ToleranceConfig) -> Result<PsdWitness> {
    a.require_same_shape(b)?;
    super::eig::require_hermitian(a, tol)?;
    super::eig::require_hermitian(b, tol)?;
    is_psd(&(b - a), tol)
}

/// Positive definiteness test `lambda_min > tol.pd * lambda_max`.
pub fn require_positive_definite(eig: &EigDecomp, tol: &ToleranceConfig) -> Result<()> {
    let (lambda_min, lambda_max) = (eig.lambda_min(), eig.lambda_max());
    if lambda_max > 0.0 && lambda_min > tol.pd * lambda_max {
        Ok(())
    } else {
        Err(Error::NotPositiveDefinite { lambda_min, lambda_max })
    }
}
