use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::linalg::{orthonormalize_against, singular_values, CMatrix};
use crate::ToleranceConfig;

/// Lower bound on the spectrum of the positive definite ensemble.
pub const PD_FLOOR: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleKind {
    Ginibre,
    Hermitian,
    Psd,
    Pd,
    Unitary,
    Normal,
    Contraction,
    Vector,
}

/// A reproducible draw: equal values always yield the same matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub dim: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, dim: usize, seed: u64) -> Self {
        Self { kind, dim, seed }
    }

    /// Vectors come back as `dim x 1` columns.
    pub fn sample(&self) -> CMatrix {
        let mut s = Sampler::new(self.seed);
        let n = self.dim;
        match self.kind {
            EnsembleKind::Ginibre => s.ginibre(n),
            EnsembleKind::Hermitian => s.hermitian(n),
            EnsembleKind::Psd => s.psd(n),
            EnsembleKind::Pd => s.pd(n),
            EnsembleKind::Unitary => s.unitary(n),
            EnsembleKind::Normal => s.normal(n),
            EnsembleKind::Contraction => s.contraction(n),
            EnsembleKind::Vector => CMatrix::column(&s.vector(n)),
        }
    }
}

/// Random matrix sampler over a seeded ChaCha8 stream.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Standard complex Gaussian, `E|z|^2 = 1`.
    pub fn gaussian(&mut self) -> Complex64 {
        let re: f64 = self.rng.sample(StandardNormal);
        let im: f64 = self.rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }

    fn gaussian_matrix(&mut self, rows: usize, cols: usize, scale: f64) -> CMatrix {
        let data = (0..rows * cols).map(|_| self.gaussian() * scale).collect();
        CMatrix::new(rows, cols, data).expect("positive dimensions")
    }

    /// Complex Ginibre matrix scaled by `1/sqrt(n)`.
    pub fn ginibre(&mut self, n: usize) -> CMatrix {
        self.gaussian_matrix(n, n, 1.0 / (n as f64).sqrt())
    }

    pub fn hermitian(&mut self, n: usize) -> CMatrix {
        self.ginibre(n).hermitian_part()
    }

    /// `G G*` for an `n x r` Gaussian `G` with rank `r` uniform on `1..=n`.
    pub fn psd(&mut self, n: usize) -> CMatrix {
        let r = self.rng.random_range(1..=n);
        let g = self.gaussian_matrix(n, r, 1.0 / (n as f64).sqrt());
        g.mul_adjoint(&g).hermitian_part()
    }

    /// Wishart `G* G + 1e-3 I`.
    pub fn pd(&mut self, n: usize) -> CMatrix {
        let g = self.ginibre(n);
        g.adjoint_mul(&g).hermitian_part().shift(PD_FLOOR)
    }

    /// Haar unitary from Gram-Schmidt on a Ginibre matrix.
    pub fn unitary(&mut self, n: usize) -> CMatrix {
        loop {
            let g = self.ginibre(n);
            let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(n);
            for j in 0..n {
                match orthonormalize_against(&g.col(j), &basis) {
                    Some(q) => basis.push(q),
                    None => break,
                }
            }
            if basis.len() == n {
                let mut u = CMatrix::zeros(n, n);
                for (j, q) in basis.iter().enumerate() {
                    u.set_col(j, q);
                }
                return u;
            }
        }
    }

    /// `U diag(z) U*` with Haar `U` and complex Gaussian `z`.
    pub fn normal(&mut self, n: usize) -> CMatrix {
        let u = self.unitary(n);
        let z: Vec<Complex64> = (0..n).map(|_| self.gaussian()).collect();
        u.matmul(&CMatrix::from_diag(&z)).mul_adjoint(&u)
    }

    /// A Ginibre matrix rescaled to operator norm uniform on `[0, 1)`.
    pub fn contraction(&mut self, n: usize) -> CMatrix {
        let g = self.ginibre(n);
        let top = singular_values(&g, &ToleranceConfig::default()).map(|s| s[0]).unwrap_or(0.0);
        let target = self.uniform();
        if top > 0.0 {
            g.scale_real(target / top)
        } else {
            g
        }
    }

    /// Unit vector with independent complex Gaussian coordinates.
    pub fn vector(&mut self, n: usize) -> Vec<Complex64> {
        loop {
            let v: Vec<Complex64> = (0..n).map(|_| self.gaussian()).collect();
            let norm = crate::linalg::vec_norm(&v);
            if norm > 0.0 {
                return v.into_iter().map(|z| z / norm).collect();
            }
        }
    }
}
