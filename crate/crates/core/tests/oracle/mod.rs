//! Test-side reference implementations, written independently of the library
//! kernels they check.
//!
//! - Hermitian spectra and functional calculus: cyclic real Jacobi on the
//!   `2n x 2n` embedding `[[X, -Y], [Y, X]]` of `X + iY`, in double-double.
//! - Geometric mean: Newton on the Riccati equation `X A^{-1} X = B`.
//! - Characteristic polynomials by Faddeev-LeVerrier, roots by Durand-Kerner.
//! - Determinant and permanent by permutation expansion, e_k by subset sums.

#![allow(dead_code)]

use matrixcs::lieb::{LiebFunctional, NormKind};
use matrixcs::{CMatrix, Complex64};
use twofloat::TwoFloat;

fn dd(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

/// Real embedding of a complex `n x n` matrix, stored row-major at size `2n`.
#[derive(Clone, Debug)]
pub struct Embedded {
    n: usize,
    a: Vec<TwoFloat>,
}

impl Embedded {
    pub fn new(m: &CMatrix) -> Self {
        let n = m.rows();
        assert_eq!(n, m.cols());
        let size = 2 * n;
        let mut a = vec![dd(0.0); size * size];
        for i in 0..n {
            for j in 0..n {
                let z = m[(i, j)];
                a[i * size + j] = dd(z.re);
                a[(n + i) * size + n + j] = dd(z.re);
                a[(n + i) * size + j] = dd(z.im);
                a[i * size + n + j] = dd(-z.im);
            }
        }
        Self { n, a }
    }

    fn size(&self) -> usize {
        2 * self.n
    }

    fn at(&self, i: usize, j: usize) -> TwoFloat {
        self.a[i * self.size() + j]
    }

    pub fn to_complex(&self) -> CMatrix {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(Complex64::new(self.at(i, j).hi(), self.at(n + i, j).hi()));
            }
        }
        CMatrix::new(n, n, data).unwrap()
    }

    pub fn transpose(&self) -> Self {
        let s = self.size();
        let mut a = vec![dd(0.0); s * s];
        for i in 0..s {
            for j in 0..s {
                a[j * s + i] = self.at(i, j);
            }
        }
        Self { n: self.n, a }
    }

    pub fn mul(&self, rhs: &Embedded) -> Self {
        let s = self.size();
        let mut a = vec![dd(0.0); s * s];
        for i in 0..s {
            for k in 0..s {
                let x = self.at(i, k);
                if x == dd(0.0) {
                    continue;
                }
                for j in 0..s {
                    a[i * s + j] += x * rhs.at(k, j);
                }
            }
        }
        Self { n: self.n, a }
    }

    pub fn add(&self, rhs: &Embedded) -> Self {
        Self { n: self.n, a: self.a.iter().zip(&rhs.a).map(|(x, y)| *x + *y).collect() }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { n: self.n, a: self.a.iter().map(|x| *x * s).collect() }
    }

    fn symmetrized(&self) -> Self {
        let s = self.size();
        let mut a = self.a.clone();
        for i in 0..s {
            for j in 0..s {
                a[i * s + j] = (self.at(i, j) + self.at(j, i)) * 0.5;
            }
        }
        Self { n: self.n, a }
    }

    /// Eigenvalues (diagonal) and eigenvectors (columns, row-major storage).
    fn jacobi(&self) -> (Vec<TwoFloat>, Vec<TwoFloat>) {
        let s = self.size();
        let mut a = self.symmetrized().a;
        let mut v = vec![dd(0.0); s * s];
        for i in 0..s {
            v[i * s + i] = dd(1.0);
        }
        let scale: f64 = a.iter().map(|x| x.hi() * x.hi()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
        for _ in 0..100 {
            let mut off = 0.0;
            for p in 0..s {
                for q in 0..s {
                    if p != q {
                        off += a[p * s + q].hi().powi(2);
                    }
                }
            }
            if off.sqrt() <= 1e-30 * scale {
                break;
            }
            for p in 0..s {
                for q in p + 1..s {
                    let apq = a[p * s + q];
                    if apq.hi().abs() <= 1e-34 * scale {
                        continue;
                    }
                    let theta = (a[q * s + q] - a[p * s + p]) / (apq * 2.0);
                    let root = (theta * theta + 1.0).sqrt();
                    let t = if theta.hi() >= 0.0 { dd(1.0) / (theta + root) } else { dd(-1.0) / (-theta + root) };
                    let c = dd(1.0) / (t * t + 1.0).sqrt();
                    let sn = t * c;
                    for k in 0..s {
                        let (kp, kq) = (a[k * s + p], a[k * s + q]);
                        a[k * s + p] = c * kp - sn * kq;
                        a[k * s + q] = sn * kp + c * kq;
                    }
                    for k in 0..s {
                        let (pk, qk) = (a[p * s + k], a[q * s + k]);
                        a[p * s + k] = c * pk - sn * qk;
                        a[q * s + k] = sn * pk + c * qk;
                    }
                    for k in 0..s {
                        let (kp, kq) = (v[k * s + p], v[k * s + q]);
                        v[k * s + p] = c * kp - sn * kq;
                        v[k * s + q] = sn * kp + c * kq;
                    }
                }
            }
        }
        ((0..s).map(|i| a[i * s + i]).collect(), v)
    }

    /// `phi` applied to the symmetric part through its eigendecomposition.
    pub fn map(&self, phi: impl Fn(TwoFloat) -> TwoFloat) -> Self {
        let s = self.size();
        let (lambda, v) = self.jacobi();
        let mapped: Vec<TwoFloat> = lambda.into_iter().map(phi).collect();
        let mut a = vec![dd(0.0); s * s];
        for i in 0..s {
            for j in 0..s {
                let mut acc = dd(0.0);
                for k in 0..s {
                    acc += v[i * s + k] * mapped[k] * v[j * s + k];
                }
                a[i * s + j] = acc;
            }
        }
        Self { n: self.n, a }
    }

    /// Eigenvalues of the embedded Hermitian matrix, ascending, one per pair.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let mut lambda: Vec<TwoFloat> = self.jacobi().0;
        lambda.sort_by(|x, y| x.partial_cmp(y).unwrap());
        lambda.into_iter().step_by(2).map(|x| x.hi()).collect()
    }

    /// `|M| = (M* M)^{1/2}`.
    pub fn abs(&self) -> Self {
        self.transpose().mul(self).map(nonnegative_sqrt)
    }
}

pub fn nonnegative_sqrt(x: TwoFloat) -> TwoFloat {
    if x.hi() <= 0.0 {
        dd(0.0)
    } else {
        x.sqrt()
    }
}

/// `x^p` for `x >= 0` (negative roundoff clamps to zero).
///
/// The leading part uses the correctly rounded `f64` power and the low word
/// enters to first order; twofloat's own `ln`/`exp` are far less accurate.
pub fn nonnegative_pow(x: TwoFloat, p: f64) -> TwoFloat {
    if x.hi() <= 0.0 {
        return if p == 0.0 { dd(1.0) } else { dd(0.0) };
    }
    let y = x.hi().powf(p);
    dd(y) + dd(y * p * (x.lo() / x.hi()))
}

pub fn hermitian_eigenvalues(h: &CMatrix) -> Vec<f64> {
    Embedded::new(h).hermitian_eigenvalues()
}

pub fn lambda_min(h: &CMatrix) -> f64 {
    hermitian_eigenvalues(h)[0]
}

/// Descending singular values.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let e = Embedded::new(m);
    let mut s: Vec<f64> = e.transpose().mul(&e).hermitian_eigenvalues().into_iter().map(|l| l.max(0.0).sqrt()).collect();
    s.reverse();
    s
}

pub fn psd_fn(a: &CMatrix, phi: impl Fn(TwoFloat) -> TwoFloat) -> CMatrix {
    Embedded::new(a).map(phi).to_complex()
}

/// `|T|` and `|T*|`.
pub fn polar(t: &CMatrix) -> (CMatrix, CMatrix) {
    let e = Embedded::new(t);
    (e.abs().to_complex(), e.transpose().abs().to_complex())
}

/// `phi(|T|)` and `phi(|T*|)` for a function of the singular values.
pub fn polar_fn(t: &CMatrix, phi: impl Fn(TwoFloat) -> TwoFloat + Copy) -> (CMatrix, CMatrix) {
    let e = Embedded::new(t);
    let gram = e.transpose().mul(&e);
    let cogram = e.mul(&e.transpose());
    let through = |s: TwoFloat| phi(nonnegative_sqrt(s));
    (gram.map(through).to_complex(), cogram.map(through).to_complex())
}

/// `A #_t B` by the defining formula, in double-double throughout.
pub fn weighted_mean(a: &CMatrix, b: &CMatrix, t: f64) -> CMatrix {
    let ea = Embedded::new(a);
    let half = ea.map(nonnegative_sqrt);
    let inv_half = ea.map(|x| dd(1.0) / x.sqrt());
    let middle = inv_half.mul(&Embedded::new(b)).mul(&inv_half);
    let pow = middle.map(|x| nonnegative_pow(x, t));
    half.mul(&pow).mul(&half).to_complex()
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Vec<Complex64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].norm().partial_cmp(&a[j][col].norm()).unwrap()).unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= factor * v;
            }
            let v = b[col];
            b[row] -= factor * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    x
}

pub fn inverse(a: &CMatrix) -> CMatrix {
    let n = a.rows();
    let rows: Vec<Vec<Complex64>> = (0..n).map(|i| (0..n).map(|j| a[(i, j)]).collect()).collect();
    let mut out = CMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        e[j] = Complex64::new(1.0, 0.0);
        let col = solve(rows.clone(), e);
        for i in 0..n {
            out[(i, j)] = col[i];
        }
    }
    out
}

/// The positive definite solution of `X A^{-1} X = B` by Newton's method
/// started at `(A + B)/2`. Each step solves the Sylvester equation
/// `X A^{-1} H + H A^{-1} X = B - X A^{-1} X` through its Kronecker form.
pub fn riccati_mean(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.rows();
    let a_inv = inverse(a);
    let mut x = (a + b).scale_real(0.5);
    for _ in 0..60 {
        let p = x.matmul(&a_inv);
        let q = a_inv.matmul(&x);
        let residual = b - &p.matmul(&x);
        let size = n * n;
        let mut k = vec![vec![Complex64::new(0.0, 0.0); size]; size];
        // vec is column-major: entry (i, j) sits at j * n + i.
        for j in 0..n {
            for i in 0..n {
                let row = j * n + i;
                for m in 0..n {
                    k[row][j * n + m] += p[(i, m)];
                    k[row][m * n + i] += q[(m, j)];
                }
            }
        }
        let rhs: Vec<Complex64> = (0..size).map(|idx| residual[(idx % n, idx / n)]).collect();
        let step = solve(k, rhs);
        let mut h = CMatrix::zeros(n, n);
        for idx in 0..size {
            h[(idx % n, idx / n)] = step[idx];
        }
        x = (&x + &h).hermitian_part();
        if h.frobenius_norm() <= 1e-15 * (1.0 + x.frobenius_norm()) {
            break;
        }
    }
    x
}

/// Ascending coefficients of `det(zI - M)` by Faddeev-LeVerrier.
pub fn char_poly(m: &CMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    c[n] = Complex64::new(1.0, 0.0);
    let mut acc = CMatrix::zeros(n, n);
    for k in 1..=n {
        acc = m.matmul(&acc);
        for i in 0..n {
            acc[(i, i)] += c[n - k + 1];
        }
        c[n - k] = -m.matmul(&acc).trace() / k as f64;
    }
    c
}

/// Roots of a monic polynomial given by ascending coefficients.
pub fn durand_kerner(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let radius = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..2000 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved <= 1e-16 * radius {
            break;
        }
    }
    z
}

pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    if m.rows() == 0 {
        return Vec::new();
    }
    durand_kerner(&char_poly(m))
}

fn permutations(n: usize, mut visit: impl FnMut(&[usize], f64)) {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], sign: f64, visit: &mut dyn FnMut(&[usize], f64)) {
        let n = used.len();
        if prefix.len() == n {
            visit(prefix, sign);
            return;
        }
        for j in 0..n {
            if !used[j] {
                let inversions = prefix.iter().filter(|&&p| p > j).count();
                let s = if inversions % 2 == 0 { sign } else { -sign };
                used[j] = true;
                prefix.push(j);
                go(prefix, used, s, visit);
                prefix.pop();
                used[j] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; n], 1.0, &mut visit);
}

pub fn det_expansion(m: &CMatrix) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    permutations(m.rows(), |p, sign| {
        total += p.iter().enumerate().map(|(i, &j)| m[(i, j)]).product::<Complex64>() * sign;
    });
    total
}

pub fn permanent_expansion(m: &CMatrix) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    permutations(m.rows(), |p, _| {
        total += p.iter().enumerate().map(|(i, &j)| m[(i, j)]).product::<Complex64>();
    });
    total
}

/// `e_k` as the sum over all `k`-subsets of products.
pub fn esym_subsets(values: &[Complex64], k: usize) -> Complex64 {
    fn go(values: &[Complex64], k: usize, start: usize, prod: Complex64, total: &mut Complex64) {
        if k == 0 {
            *total += prod;
            return;
        }
        for i in start..values.len() {
            go(values, k - 1, i + 1, prod * values[i], total);
        }
    }
    let mut total = Complex64::new(0.0, 0.0);
    go(values, k, 0, Complex64::new(1.0, 0.0), &mut total);
    total
}

pub fn norm_of_singular(kind: NormKind, s: &[f64]) -> f64 {
    match kind {
        NormKind::Operator => s.first().copied().unwrap_or(0.0),
        NormKind::Trace => s.iter().sum(),
        NormKind::Frobenius => s.iter().map(|x| x * x).sum::<f64>().sqrt(),
        NormKind::SchattenP(p) => s.iter().map(|x| x.powf(p)).sum::<f64>().powf(1.0 / p),
        NormKind::KyFan(k) => s.iter().take(k).sum(),
    }
}

fn is_hermitian(m: &CMatrix) -> bool {
    m.hermitian_defect() <= 1e-12 * (1.0 + m.frobenius_norm())
}

/// Independent evaluation of a Lieb functional.
pub fn functional(f: &LiebFunctional, m: &CMatrix) -> Complex64 {
    let spectrum = || -> Vec<Complex64> {
        if is_hermitian(m) {
            hermitian_eigenvalues(m).into_iter().map(|l| Complex64::new(l, 0.0)).collect()
        } else {
            eigenvalues(m)
        }
    };
    match *f {
        LiebFunctional::Determinant => det_expansion(m),
        LiebFunctional::Permanent => permanent_expansion(m),
        LiebFunctional::SpectralRadius => {
            Complex64::new(spectrum().iter().map(|z| z.norm()).fold(0.0, f64::max), 0.0)
        }
        LiebFunctional::ElemSym(k) => esym_subsets(&spectrum(), k),
        LiebFunctional::UINorm(kind) => Complex64::new(norm_of_singular(kind, &singular_values(m)), 0.0),
    }
}

/// `|f(X)|^2` against `re f(Y) re f(Z)`.
pub fn cs_sides(f: &LiebFunctional, x: &CMatrix, y: &CMatrix, z: &CMatrix) -> (f64, f64) {
    (functional(f, x).norm_sqr(), functional(f, y).re * functional(f, z).re)
}

/// `|f(X)|^2` against `(re f(Y))^2`.
pub fn square_sides(f: &LiebFunctional, x: &CMatrix, y: &CMatrix) -> (f64, f64) {
    (functional(f, x).norm_sqr(), functional(f, y).re.powi(2))
}

pub fn close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * (1.0 + want.abs())
}

pub fn assert_close(got: f64, want: f64, rel: f64, what: &str) {
    assert!(close(got, want, rel), "{what}: got {got:e}, oracle {want:e}, diff {:e}", (got - want).abs());
}

pub fn max_entry_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.max_abs_diff(b)
}
