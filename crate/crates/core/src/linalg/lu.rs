use num_complex::Complex64;

use super::CMatrix;
use crate::Result;

/// Determinant by LU factorization with partial pivoting.
pub fn determinant(m: &CMatrix) -> Result<Complex64> {
    let n = m.require_square()?;
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
            .expect("non-empty range");
        if a[(pivot, col)].norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot, j)];
                a[(pivot, j)] = tmp;
            }
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for i in (col + 1)..n {
            let factor = a[(i, col)] / p;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in (col + 1)..n {
                let v = a[(col, j)];
                a[(i, j)] -= factor * v;
            }
        }
    }
    Ok(det)
}
