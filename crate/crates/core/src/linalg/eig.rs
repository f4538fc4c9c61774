use num_complex::Complex64;

use super::CMatrix;
use crate::{Error, Result, ToleranceConfig};

/// Spectral decomposition `H = basis * diag(eigenvalues) * basis*`.
///
/// Eigenvalues are sorted in descending order; column `k` of `basis` is the
/// eigenvector for `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigDecomp {
    pub eigenvalues: Vec<f64>,
    pub basis: CMatrix,
}

impl EigDecomp {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// `max |lambda|`.
    pub fn spectral_abs_max(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0_f64, |m, l| m.max(l.abs()))
    }

    /// `basis * diag(values) * basis*` for arbitrary real `values`.
    pub fn synthesize(&self, values: &[f64]) -> CMatrix {
        let n = self.dim();
        assert_eq!(values.len(), n);
        let u = &self.basis;
        let mut out = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &lk) in values.iter().enumerate() {
                    if lk != 0.0 {
                        acc += u[(i, k)] * u[(j, k)].conj() * lk;
                    }
                }
                if i == j {
                    out[(i, i)] = Complex64::new(acc.re, 0.0);
                } else {
                    out[(i, j)] = acc;
                    out[(j, i)] = acc.conj();
                }
            }
        }
        out
    }

    /// `phi(H)` by functional calculus, applied to the raw eigenvalues.
    pub fn map(&self, phi: impl Fn(f64) -> f64) -> CMatrix {
        let values: Vec<f64> = self.eigenvalues.iter().map(|&l| phi(l)).collect();
        self.synthesize(&values)
    }

    pub fn reconstruct(&self) -> CMatrix {
        self.synthesize(&self.eigenvalues)
    }

    /// Eigenvalues with roundoff negatives clamped to zero.
    ///
    /// Fails with `NotPsd` if some eigenvalue lies below
    /// `-tol.psd * max(1, max |lambda|)`.
    pub fn clamped_spectrum(&self, tol: &ToleranceConfig) -> Result<Vec<f64>> {
        let floor = -tol.psd * self.spectral_abs_max().max(1.0);
        let lambda_min = self.lambda_min();
        if lambda_min < floor {
            return Err(Error::NotPsd { lambda_min });
        }
        Ok(self.eigenvalues.iter().map(|&l| l.max(0.0)).collect())
    }

    /// `phi(A)` for PSD `A`, clamping roundoff negatives before `phi`.
    pub fn psd_map(&self, phi: impl Fn(f64) -> f64, tol: &ToleranceConfig) -> Result<CMatrix> {
        let values: Vec<f64> = self.clamped_spectrum(tol)?.into_iter().map(phi).collect();
        Ok(self.synthesize(&values))
    }
}

fn off_diagonal_mass(a: &CMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Checks that `h` is square and Hermitian within
/// `tol.herm * (1 + ||h||_F)`.
pub fn require_hermitian(h: &CMatrix, tol: &ToleranceConfig) -> Result<usize> {
    let n = h.require_square()?;
    let defect = h.hermitian_defect();
    let allowed = tol.herm * (1.0 + h.frobenius_norm());
    if defect > allowed {
        return Err(Error::NotHermitian { defect, allowed });
    }
    Ok(n)
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Each rotation first removes the phase of `h[p][q]` with a diagonal unitary
/// and then applies the real symmetric Jacobi rotation, so the accumulated
/// basis stays unitary to working precision.
pub fn herm_eig(h: &CMatrix, tol: &ToleranceConfig) -> Result<EigDecomp> {
    let n = require_hermitian(h, tol)?;
    let mut a = h.hermitian_part();
    let mut v = CMatrix::identity(n);
    let target = tol.offdiag * a.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(&a);
        if off <= target {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    Ok(EigDecomp {
        eigenvalues: order.iter().map(|&i| a[(i, i)].re).collect(),
        basis: v.permute_cols(&order),
    })
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let n = a.rows();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // conj(phase) = e^{-i arg(apq)}
    let phase_conj = apq.conj() / r;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on coordinates (p, q).
    let j_pp = Complex64::new(c, 0.0);
    let j_pq = Complex64::new(s, 0.0);
    let j_qp = phase_conj * (-s);
    let j_qq = phase_conj * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * j_pp + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * j_qq;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * r, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * r, 0.0);
}
