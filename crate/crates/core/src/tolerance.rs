/// The tolerance policy shared by every module.
///
/// Comparisons use `abs + rel * max(1, scale)` where `scale` is a norm of the
/// quantities being compared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub abs: f64,
    pub rel: f64,
    /// Hermitian defect allowed, relative to `1 + ||H||_F`.
    pub herm: f64,
    /// Negative eigenvalues above `-psd * max(1, |lambda|_max)` count as zero.
    pub psd: f64,
    /// Jacobi stops once the off-diagonal Frobenius mass is below `offdiag * ||H||_F`.
    pub offdiag: f64,
    /// Singular values below `rank * sigma_max` are treated as zero.
    pub rank: f64,
    /// Positive definiteness requires `lambda_min > pd * lambda_max`.
    pub pd: f64,
    pub max_sweeps: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            abs: 1e-12,
            rel: 1e-9,
            herm: 1e-9,
            psd: 1e-9,
            offdiag: 1e-13,
            rank: 1e-12,
            pd: 1e-10,
            max_sweeps: 100,
        }
    }
}

impl ToleranceConfig {
    /// Allowed slack for a comparison at magnitude `scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs().max(1.0)
    }

    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.bound(a.abs().max(b.abs()))
    }
}
