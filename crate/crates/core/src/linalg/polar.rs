use super::{svd, CMatrix, EigDecomp};
use crate::{Result, ToleranceConfig};

/// `|T|`, `|T*|`, `Re T` and `Im T` of a square matrix.
#[derive(Debug, Clone)]
pub struct PolarParts {
    pub abs_t: CMatrix,
    pub abs_tstar: CMatrix,
    pub re_t: CMatrix,
    pub im_t: CMatrix,
}

pub fn polar_parts(t: &CMatrix, tol: &ToleranceConfig) -> Result<PolarParts> {
    let spectra = PolarSpectra::new(t, tol)?;
    Ok(PolarParts {
        abs_t: spectra.abs_fn(|s| s, tol)?,
        abs_tstar: spectra.abs_star_fn(|s| s, tol)?,
        re_t: t.real_part(),
        im_t: t.imag_part(),
    })
}

/// The singular value decomposition of `T`, from which any `phi(|T|)` and
/// `phi(|T*|)` is synthesized without a new decomposition.
///
/// With `T = U diag(sigma) V*`, `phi(|T|) = V diag(phi(sigma)) V*` and
/// `phi(|T*|) = U diag(phi(sigma)) U*`. Taking `sqrt` of the Gram eigenvalues
/// instead would turn roundoff of order `eps ||T||^2` into errors of order
/// `sqrt(eps) ||T||` on rank-deficient inputs.
#[derive(Debug, Clone)]
pub struct PolarSpectra {
    right: EigDecomp,
    left: EigDecomp,
}

impl PolarSpectra {
    pub fn new(t: &CMatrix, tol: &ToleranceConfig) -> Result<Self> {
        t.require_square()?;
        let d = svd(t, tol)?;
        Ok(Self {
            right: EigDecomp { eigenvalues: d.singular_values.clone(), basis: d.right },
            left: EigDecomp { eigenvalues: d.singular_values, basis: d.left },
        })
    }

    /// `phi(|T|)`.
    pub fn abs_fn(&self, phi: impl Fn(f64) -> f64, _tol: &ToleranceConfig) -> Result<CMatrix> {
        Ok(self.right.map(phi))
    }

    /// `phi(|T*|)`.
    pub fn abs_star_fn(&self, phi: impl Fn(f64) -> f64, _tol: &ToleranceConfig) -> Result<CMatrix> {
        Ok(self.left.map(phi))
    }

    /// Singular values of `T`, descending.
    pub fn singular_values(&self) -> Vec<f64> {
        self.right.eigenvalues.clone()
    }
}
