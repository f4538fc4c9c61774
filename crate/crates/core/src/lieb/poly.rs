//! Characteristic polynomials and simultaneous polynomial root finding.

use num_complex::Complex64;

use crate::linalg::CMatrix;
use crate::{Error, Result};

const MAX_ITERATIONS: usize = 200;
const MOVEMENT_TOL: f64 = 1e-12;

/// Coefficients of `det(zI - M)` in ascending order; the last entry is 1.
///
/// Faddeev-LeVerrier recursion: `M_k = M M_{k-1} + c_{n-k+1} I`,
/// `c_{n-k} = -tr(M M_k) / k`.
pub fn char_poly(m: &CMatrix) -> Result<Vec<Complex64>> {
    let n = m.require_square()?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = CMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m.matmul(&mk);
        for i in 0..n {
            mk[(i, i)] += coeffs[n - k + 1];
        }
        coeffs[n - k] = -m.matmul(&mk).trace() / k as f64;
    }
    Ok(coeffs)
}

/// `(p(z), p'(z))` by Horner's rule, ascending coefficients.
fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Rounding-error level of `p(z)`: `eps * sum |c_j| |z|^j`, inflated by the degree.
fn noise_floor(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * r + c.norm();
    }
    8.0 * coeffs.len() as f64 * f64::EPSILON * acc
}

/// All roots of a polynomial given in ascending order (Aberth-Ehrlich).
///
/// Exact zero constant terms are split off as roots at the origin; the rest
/// are iterated simultaneously without deflation. A root is accepted once
/// its correction is below `1e-12 * |z|` or `p(z)` is at rounding level.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut coeffs: Vec<Complex64> = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let lead = *coeffs.last().ok_or_else(|| Error::InvalidArgument("empty polynomial".into()))?;
    if lead.norm() == 0.0 {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    let coeffs: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();

    let zero_roots = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = &coeffs[zero_roots..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zero_roots];
    let degree = reduced.len() - 1;
    match degree {
        0 => return Ok(roots),
        1 => {
            roots.push(-reduced[0]);
            return Ok(roots);
        }
        _ => {}
    }

    let center = -reduced[degree - 1] / degree as f64;
    // Fujiwara-type radius about the origin, shrunk toward the centroid.
    let radius = (1..=degree)
        .map(|k| reduced[degree - k].norm().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        .max(1e-300);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + 0.4;
            center + Complex64::from_polar(radius, angle)
        })
        .collect();
    let mut done = vec![false; degree];

    for _ in 0..MAX_ITERATIONS {
        for k in 0..degree {
            if done[k] {
                continue;
            }
            let (p, dp) = horner(reduced, z[k]);
            if p.norm() <= noise_floor(reduced, z[k]) {
                done[k] = true;
                continue;
            }
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = if dp.norm() == 0.0 {
                // stationary point: nudge off it
                Complex64::new(radius * 1e-3, radius * 1e-3)
            } else {
                let newton = p / dp;
                let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
                if denom.norm() == 0.0 {
                    newton
                } else {
                    newton / denom
                }
            };
            z[k] -= step;
            if step.norm() <= MOVEMENT_TOL * z[k].norm() {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            roots.extend(z);
            return Ok(roots);
        }
    }
    Err(Error::RootFindingFailed { iterations: MAX_ITERATIONS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_re(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn char_poly_of_known_matrices() {
        // [[2,1],[1,2]]: z^2 - 4z + 3
        let m = CMatrix::from_real(2, 2, &[2., 1., 1., 2.]).unwrap();
        let p = char_poly(&m).unwrap();
        assert!((p[0] - c(3., 0.)).norm() < 1e-14);
        assert!((p[1] - c(-4., 0.)).norm() < 1e-14);
        assert_eq!(p[2], c(1., 0.));
        // nilpotent shift: z^3 exactly
        let s = CMatrix::from_real(3, 3, &[0., 1., 0., 0., 0., 1., 0., 0., 0.]).unwrap();
        assert_eq!(char_poly(&s).unwrap(), vec![c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]);
    }

    #[test]
    fn roots_of_cubic() {
        // (z-1)(z-2)(z+3) = z^3 - 7z + 6
        let roots = sorted_re(poly_roots(&[c(6., 0.), c(-7., 0.), c(0., 0.), c(1., 0.)]).unwrap());
        for (r, e) in roots.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((r - c(e, 0.)).norm() < 1e-12, "{r} vs {e}");
        }
    }

    #[test]
    fn complex_and_zero_roots() {
        // z^2 (z^2 + 1)
        let roots = poly_roots(&[c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(1., 0.)]).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.norm() == 0.0).count(), 2);
        assert!(roots.iter().any(|r| (r - c(0., 1.)).norm() < 1e-12));
        assert!(roots.iter().any(|r| (r - c(0., -1.)).norm() < 1e-12));
    }

    #[test]
    fn double_root_terminates() {
        // (z-1)^2 (z+2): converges at the conditioning-limited accuracy
        let roots = poly_roots(&[c(2., 0.), c(-3., 0.), c(0., 0.), c(1., 0.)]).unwrap();
        assert!(roots.iter().filter(|r| (*r - c(1., 0.)).norm() < 1e-6).count() == 2);
        assert!(roots.iter().any(|r| (r - c(-2., 0.)).norm() < 1e-12));
    }

    #[test]
    fn rejects_zero_polynomial() {
        assert!(poly_roots(&[c(0., 0.), c(0., 0.)]).is_err());
        assert!(poly_roots(&[]).is_err());
    }
}
