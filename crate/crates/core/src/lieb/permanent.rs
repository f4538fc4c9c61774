use num_complex::Complex64;

use crate::linalg::CMatrix;
use crate::{Error, Result};

pub const PERMANENT_LIMIT: usize = 12;

/// Permanent by Ryser's inclusion-exclusion formula, walking column subsets
/// in Gray-code order so each step updates the row sums with one column.
///
/// `per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij`.
pub fn permanent(m: &CMatrix) -> Result<Complex64> {
    let n = m.require_square()?;
    if n > PERMANENT_LIMIT {
        return Err(Error::TooLargeForPermanent { n, limit: PERMANENT_LIMIT });
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut in_set = vec![false; n];
    let mut size = 0usize;
    let mut total = Complex64::new(0.0, 0.0);
    for step in 1u32..(1u32 << n) {
        let j = step.trailing_zeros() as usize;
        let sign = if in_set[j] { -1.0 } else { 1.0 };
        in_set[j] = !in_set[j];
        if in_set[j] {
            size += 1;
        } else {
            size -= 1;
        }
        for (i, s) in row_sums.iter_mut().enumerate() {
            *s += m[(i, j)] * sign;
        }
        let prod: Complex64 = row_sums.iter().product();
        if size.is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(if n % 2 == 0 { total } else { -total })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(m: &CMatrix) -> Complex64 {
        fn rec(m: &CMatrix, row: usize, used: &mut Vec<bool>) -> Complex64 {
            let n = m.rows();
            if row == n {
                return Complex64::new(1.0, 0.0);
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if !used[j] {
                    used[j] = true;
                    acc += m[(row, j)] * rec(m, row + 1, used);
                    used[j] = false;
                }
            }
            acc
        }
        rec(m, 0, &mut vec![false; m.rows()])
    }

    #[test]
    fn all_ones_counts_permutations() {
        for (n, fact) in [(1usize, 1.0), (2, 2.0), (3, 6.0), (4, 24.0), (5, 120.0)] {
            let ones = CMatrix::from_real(n, n, &vec![1.0; n * n]).unwrap();
            assert!((permanent(&ones).unwrap() - Complex64::new(fact, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn matches_permutation_sum() {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let m = CMatrix::new(
            4,
            4,
            (0..16).map(|k| c(((k * 7) % 5) as f64 - 2.0, ((k * 3) % 4) as f64 * 0.5 - 0.7)).collect(),
        )
        .unwrap();
        assert!((permanent(&m).unwrap() - brute_force(&m)).norm() < 1e-11);
    }

    #[test]
    fn identity_and_limit() {
        assert!((permanent(&CMatrix::identity(6)).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!(matches!(
            permanent(&CMatrix::identity(13)),
            Err(Error::TooLargeForPermanent { n: 13, .. })
        ));
    }
}
