use num_complex::Complex64;

use super::matrix::{inner, vec_norm};
use super::{herm_eig, CMatrix};
use crate::{Result, ToleranceConfig};

/// Full singular value decomposition `T = left * diag(sigma) * right*`.
///
/// `left` is `rows x rows`, `right` is `cols x cols` and `singular_values`
/// has `min(rows, cols)` entries in descending order.
#[derive(Debug, Clone)]
pub struct SvdDecomp {
    pub left: CMatrix,
    pub singular_values: Vec<f64>,
    pub right: CMatrix,
}

impl SvdDecomp {
    pub fn reconstruct(&self) -> CMatrix {
        let (m, n) = (self.left.rows(), self.right.rows());
        let mut out = CMatrix::zeros(m, n);
        for (k, &s) in self.singular_values.iter().enumerate() {
            if s == 0.0 {
                continue;
            }
            for i in 0..m {
                let us = self.left[(i, k)] * s;
                for j in 0..n {
                    out[(i, j)] += us * self.right[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.singular_values.iter().filter(|&&s| s > 0.0).count()
    }
}

/// SVD through the Hermitian eigenproblem of `T* T`.
///
/// Singular values are taken as `||T v_i||` rather than `sqrt(lambda_i)`, which
/// keeps absolute accuracy near zero. Left vectors are `T v_i / sigma_i`,
/// re-orthonormalized by modified Gram-Schmidt; values below
/// `tol.rank * sigma_max` are set to zero and their left vectors come from
/// completing the basis.
pub fn svd(t: &CMatrix, tol: &ToleranceConfig) -> Result<SvdDecomp> {
    let (m, n) = t.shape();
    let gram = t.adjoint_mul(t);
    let eig = herm_eig(&gram, tol)?;
    let tv = t.matmul(&eig.basis);

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n).map(|j| vec_norm(&tv.col(j))).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    let right = eig.basis.permute_cols(&order);
    let tv = tv.permute_cols(&order);

    let k = m.min(n);
    let mut sigma: Vec<f64> = order.iter().take(k).map(|&i| norms[i]).collect();
    let cutoff = tol.rank * sigma.first().copied().unwrap_or(0.0);

    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    let mut slots: Vec<Option<usize>> = vec![None; k];
    for (i, s) in sigma.iter_mut().enumerate() {
        if *s <= cutoff || *s == 0.0 {
            *s = 0.0;
            continue;
        }
        let u: Vec<Complex64> = tv.col(i).iter().map(|z| z / *s).collect();
        match orthonormalize_against(&u, &basis) {
            Some(u) => {
                slots[i] = Some(basis.len());
                basis.push(u);
            }
            None => *s = 0.0,
        }
    }
    let rank = basis.len();
    complete_basis(&mut basis, m);

    // completion vectors fill the zero-sigma slots first, then columns k..m
    let mut extra = rank..m;
    let mut left = CMatrix::zeros(m, m);
    for (j, slot) in slots.iter().enumerate() {
        let src = slot.unwrap_or_else(|| extra.next().expect("enough completion vectors"));
        left.set_col(j, &basis[src]);
    }
    for j in k..m {
        left.set_col(j, &basis[extra.next().expect("enough completion vectors")]);
    }
    Ok(SvdDecomp { left, singular_values: sigma, right })
}

/// Singular values only, descending.
pub fn singular_values(t: &CMatrix, tol: &ToleranceConfig) -> Result<Vec<f64>> {
    Ok(svd(t, tol)?.singular_values)
}

/// Two passes of modified Gram-Schmidt; `None` if `v` is numerically in the span.
pub(crate) fn orthonormalize_against(v: &[Complex64], basis: &[Vec<Complex64>]) -> Option<Vec<Complex64>> {
    let start = vec_norm(v);
    if start == 0.0 {
        return None;
    }
    let mut w = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let proj = inner(&w, b);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= proj * bi;
            }
        }
    }
    let norm = vec_norm(&w);
    if norm <= 1e-8 * start {
        return None;
    }
    Some(w.into_iter().map(|z| z / norm).collect())
}

/// Extends an orthonormal set to a basis of `C^m` using standard basis vectors.
pub(crate) fn complete_basis(basis: &mut Vec<Vec<Complex64>>, m: usize) {
    // try the least-represented coordinates first
    let mut candidates: Vec<(f64, usize)> = (0..m)
        .map(|j| (basis.iter().map(|b| b[j].norm_sqr()).sum::<f64>(), j))
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    for (_, j) in candidates {
        if basis.len() == m {
            break;
        }
        let mut e = vec![Complex64::new(0.0, 0.0); m];
        e[j] = Complex64::new(1.0, 0.0);
        if let Some(u) = orthonormalize_against(&e, basis) {
            basis.push(u);
        }
    }
    assert_eq!(basis.len(), m, "basis completion failed");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn zero_matrix_has_zero_singular_values() {
        let d = svd(&CMatrix::zeros(3, 2), &tol()).unwrap();
        assert_eq!(d.singular_values, vec![0.0, 0.0]);
        assert!(d.left.unitarity_defect() < 1e-14);
        assert!(d.right.unitarity_defect() < 1e-14);
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn rectangular_reconstruction() {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let t = CMatrix::new(2, 3, vec![c(1., 1.), c(0., 2.), c(-1., 0.), c(3., 0.), c(1., -1.), c(0.5, 0.5)]).unwrap();
        for m in [t.clone(), t.adjoint()] {
            let d = svd(&m, &tol()).unwrap();
            assert_eq!(d.singular_values.len(), 2);
            assert!(d.reconstruct().max_abs_diff(&m) < 1e-13);
            assert!(d.left.unitarity_defect() < 1e-13);
            assert!(d.right.unitarity_defect() < 1e-13);
        }
    }

    #[test]
    fn rank_deficient_matrix_gets_completed_left_basis() {
        // rank one: outer product
        let t = CMatrix::from_real(3, 3, &[1., 2., 3., 2., 4., 6., 3., 6., 9.]).unwrap();
        let d = svd(&t, &tol()).unwrap();
        assert!((d.singular_values[0] - 14.0).abs() < 1e-12);
        assert_eq!(&d.singular_values[1..], &[0.0, 0.0]);
        assert!(d.left.unitarity_defect() < 1e-13);
        assert!(d.reconstruct().max_abs_diff(&t) < 1e-12);
    }

    #[test]
    fn shift_plus_adjoint_singular_values() {
        let s = CMatrix::from_real(3, 3, &[0., 1., 0., 1., 0., 1., 0., 1., 0.]).unwrap();
        let sv = singular_values(&s, &tol()).unwrap();
        let r2 = 2f64.sqrt();
        assert!((sv[0] - r2).abs() < 1e-14 && (sv[1] - r2).abs() < 1e-14);
        assert!(sv[2].abs() < 1e-14);
    }
}
