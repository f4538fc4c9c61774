//! Matrix geometric means of positive definite matrices.

use crate::linalg::{herm_eig, is_psd, require_positive_definite, CMatrix};
use crate::{Error, Result, ToleranceConfig};

/// Arguments of the weighted geometric mean `A #_t B`.
#[derive(Debug, Clone)]
pub struct WeightedMeanQuery {
    pub a: CMatrix,
    pub b: CMatrix,
    pub weight: f64,
}

impl WeightedMeanQuery {
    pub fn new(a: CMatrix, b: CMatrix, weight: f64, tol: &ToleranceConfig) -> Result<Self> {
        a.require_same_shape(&b)?;
        a.require_square()?;
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidArgument(format!("weight {weight} outside [0, 1]")));
        }
        require_positive_definite(&herm_eig(&a, tol)?, tol)?;
        require_positive_definite(&herm_eig(&b, tol)?, tol)?;
        Ok(Self { a, b, weight })
    }
}

/// `A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}`.
pub fn geom_mean(a: &CMatrix, b: &CMatrix, tol: &ToleranceConfig) -> Result<CMatrix> {
    mean_path(a, b, 0.5, tol)
}

/// `A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}`.
pub fn weighted_geom_mean(q: &WeightedMeanQuery, tol: &ToleranceConfig) -> Result<CMatrix> {
    mean_path(&q.a, &q.b, q.weight, tol)
}

fn mean_path(a: &CMatrix, b: &CMatrix, t: f64, tol: &ToleranceConfig) -> Result<CMatrix> {
    a.require_same_shape(b)?;
    a.require_square()?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidArgument(format!("weight {t} outside [0, 1]")));
    }
    let eig_a = herm_eig(a, tol)?;
    require_positive_definite(&eig_a, tol)?;
    require_positive_definite(&herm_eig(b, tol)?, tol)?;

    let a_half = eig_a.map(f64::sqrt);
    let a_inv_half = eig_a.map(|l| 1.0 / l.sqrt());
    let middle = a_inv_half.matmul(b).matmul(&a_inv_half).hermitian_part();
    let middle_pow = herm_eig(&middle, tol)?.psd_map(|l| l.powf(t), tol)?;
    let raw = a_half.matmul(&middle_pow).matmul(&a_half);

    let mean = raw.hermitian_part();
    let correction = raw.distance(&mean);
    if correction > tol.herm * (1.0 + mean.frobenius_norm()) {
        return Err(Error::AsymmetricMean { correction });
    }
    Ok(mean)
}

/// The block `[[A, A#B], [A#B, B]]`, certified positive semidefinite.
pub fn gm_block(a: &CMatrix, b: &CMatrix, tol: &ToleranceConfig) -> Result<CMatrix> {
    let g = geom_mean(a, b, tol)?;
    let block = CMatrix::from_blocks(a, &g, &g, b)?;
    let w = is_psd(&block, tol)?;
    if !w.holds {
        return Err(Error::NotPsd { lambda_min: w.lambda_min });
    }
    Ok(block)
}
