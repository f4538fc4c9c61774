use std::fmt;
use std::sync::Arc;

use crate::linalg::{herm_eig, CMatrix};
use crate::{Error, Result, ToleranceConfig};

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A pair of nonnegative continuous functions with `g(t) h(t) = t` on `[0, inf)`.
#[derive(Clone)]
pub enum FactorPair {
    /// `g = h = sqrt`.
    Sqrt,
    /// `g(t) = t^v`, `h(t) = t^{1-v}` with `0^0 = 1`.
    Power(f64),
    Custom { g: ScalarFn, h: ScalarFn },
}

/// Validation grid `{0, 2^-8, 2^-7, ..., 2^8}`.
fn default_grid() -> Vec<f64> {
    std::iter::once(0.0).chain((-8..=8).map(|e| 2f64.powi(e))).collect()
}

impl FactorPair {
    pub fn power(v: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::InvalidPair(format!("power exponent {v} outside [0, 1]")));
        }
        Ok(FactorPair::Power(v))
    }

    /// Wraps caller-supplied `g`, `h` after checking the product identity on
    /// the default grid.
    pub fn custom(
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let pair = FactorPair::Custom { g: Arc::new(g), h: Arc::new(h) };
        pair.validate_on(&default_grid())?;
        Ok(pair)
    }

    /// The exponent `v` with `g(t) = t^v`, if the pair is a power pair.
    pub fn exponent(&self) -> Option<f64> {
        match self {
            FactorPair::Sqrt => Some(0.5),
            FactorPair::Power(v) => Some(*v),
            FactorPair::Custom { .. } => None,
        }
    }

    pub fn g(&self, t: f64) -> f64 {
        match self {
            FactorPair::Sqrt => t.sqrt(),
            FactorPair::Power(v) => t.powf(*v),
            FactorPair::Custom { g, .. } => g(t),
        }
    }

    pub fn h(&self, t: f64) -> f64 {
        match self {
            FactorPair::Sqrt => t.sqrt(),
            FactorPair::Power(v) => t.powf(1.0 - v),
            FactorPair::Custom { h, .. } => h(t),
        }
    }

    /// `g(t)^2`, in closed form for the built-in pairs.
    pub fn g_sq(&self, t: f64) -> f64 {
        match self {
            FactorPair::Sqrt => t,
            FactorPair::Power(v) => t.powf(2.0 * v),
            FactorPair::Custom { g, .. } => g(t).powi(2),
        }
    }

    pub fn h_sq(&self, t: f64) -> f64 {
        match self {
            FactorPair::Sqrt => t,
            FactorPair::Power(v) => t.powf(2.0 * (1.0 - v)),
            FactorPair::Custom { h, .. } => h(t).powi(2),
        }
    }

    /// Checks nonnegativity and `g(t) h(t) = t` on `grid` (identically true
    /// for the built-in pairs).
    pub fn validate_on(&self, grid: &[f64]) -> Result<()> {
        for &t in grid {
            let (g, h) = (self.g(t), self.h(t));
            if !(g >= 0.0 && h >= 0.0) {
                return Err(Error::InvalidPair(format!("negative value at t = {t}")));
            }
            if (g * h - t).abs() > 1e-12 + 1e-9 * t {
                return Err(Error::InvalidPair(format!("g(t) h(t) = {} at t = {t}", g * h)));
            }
        }
        Ok(())
    }

    /// Revalidates a custom pair on `[0, lambda_max]` when the spectrum leaves
    /// the default grid.
    pub(crate) fn validate_for_spectrum(&self, lambda_max: f64) -> Result<()> {
        if !matches!(self, FactorPair::Custom { .. }) || lambda_max <= 256.0 {
            return Ok(());
        }
        let grid: Vec<f64> = default_grid().iter().map(|t| t / 256.0 * lambda_max).collect();
        self.validate_on(&grid)
    }
}

impl fmt::Display for FactorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorPair::Sqrt => write!(f, "sqrt"),
            FactorPair::Power(v) => write!(f, "power({v})"),
            FactorPair::Custom { .. } => write!(f, "custom"),
        }
    }
}

impl fmt::Debug for FactorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for FactorPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "sqrt" {
            return Ok(FactorPair::Sqrt);
        }
        let v = super::norm::parameter(&s, "power")
            .or_else(|| super::norm::parameter(&s, "pow"))
            .ok_or_else(|| Error::InvalidPair(format!("unknown pair '{s}'")))?;
        FactorPair::power(v.parse().map_err(|_| Error::InvalidPair(format!("unknown pair '{s}'")))?)
    }
}

/// `(g^2(A), h^2(A))` for PSD `A`.
pub fn apply_pair(p: &FactorPair, a: &CMatrix, tol: &ToleranceConfig) -> Result<(CMatrix, CMatrix)> {
    let eig = herm_eig(a, tol)?;
    p.validate_for_spectrum(eig.lambda_max())?;
    Ok((eig.psd_map(|t| p.g_sq(t), tol)?, eig.psd_map(|t| p.h_sq(t), tol)?))
}
