use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::norm::{parameter, NormKind};
use super::permanent::permanent;
use super::poly::{char_poly, poly_roots};
use crate::linalg::{determinant, herm_eig, singular_values, CMatrix, EigDecomp};
use crate::{Error, Result, ToleranceConfig};

/// The canonical Lieb functionals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LiebFunctional {
    Determinant,
    Permanent,
    SpectralRadius,
    /// Elementary symmetric function `e_k` of the eigenvalues.
    ElemSym(usize),
    UINorm(NormKind),
}

impl LiebFunctional {
    /// Whether the functional is defined on `n x n` matrices inside the corpus.
    pub fn applies_to(&self, n: usize) -> bool {
        match *self {
            LiebFunctional::Permanent => n <= 6,
            LiebFunctional::ElemSym(k) => k >= 1 && k <= n,
            _ => true,
        }
    }

    pub fn is_norm(&self) -> bool {
        matches!(self, LiebFunctional::UINorm(_))
    }
}

impl fmt::Display for LiebFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiebFunctional::Determinant => write!(f, "det"),
            LiebFunctional::Permanent => write!(f, "per"),
            LiebFunctional::SpectralRadius => write!(f, "rho"),
            LiebFunctional::ElemSym(k) => write!(f, "esym({k})"),
            LiebFunctional::UINorm(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for LiebFunctional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "det" | "determinant" => Ok(LiebFunctional::Determinant),
            "per" | "permanent" => Ok(LiebFunctional::Permanent),
            "rho" | "spectral-radius" => Ok(LiebFunctional::SpectralRadius),
            _ => {
                let k = parameter(&s, "esym").or_else(|| parameter(&s, "e"));
                if let Some(k) = k {
                    let k: usize =
                        k.parse().map_err(|_| Error::InvalidArgument(format!("unknown functional '{s}'")))?;
                    if k == 0 {
                        return Err(Error::InvalidArgument("e_0 is constant; use k >= 1".into()));
                    }
                    return Ok(LiebFunctional::ElemSym(k));
                }
                s.parse::<NormKind>()
                    .map(LiebFunctional::UINorm)
                    .map_err(|_| Error::InvalidArgument(format!("unknown functional '{s}'")))
            }
        }
    }
}

/// Evaluates `f(M)`.
pub fn lieb_eval(f: &LiebFunctional, m: &CMatrix, tol: &ToleranceConfig) -> Result<Complex64> {
    MatrixProfile::new(m, tol)?.eval(f)
}

/// Lazily cached spectral data of one matrix, shared by several functionals.
///
/// Hermitian inputs use the Jacobi spectrum for singular values and the
/// spectral radius; general inputs use the SVD and characteristic-polynomial
/// roots respectively.
pub struct MatrixProfile<'a> {
    m: &'a CMatrix,
    tol: &'a ToleranceConfig,
    hermitian: bool,
    eig: OnceCell<Result<EigDecomp>>,
    sigma: OnceCell<Result<Vec<f64>>>,
    coeffs: OnceCell<Result<Vec<Complex64>>>,
    rho: OnceCell<Result<f64>>,
}

impl<'a> MatrixProfile<'a> {
    pub fn new(m: &'a CMatrix, tol: &'a ToleranceConfig) -> Result<Self> {
        m.require_square()?;
        let hermitian = m.hermitian_defect() <= tol.herm * (1.0 + m.frobenius_norm());
        Ok(Self {
            m,
            tol,
            hermitian,
            eig: OnceCell::new(),
            sigma: OnceCell::new(),
            coeffs: OnceCell::new(),
            rho: OnceCell::new(),
        })
    }

    fn eig(&self) -> Result<&EigDecomp> {
        self.eig.get_or_init(|| herm_eig(self.m, self.tol)).as_ref().map_err(Clone::clone)
    }

    pub fn singular_values(&self) -> Result<&[f64]> {
        self.sigma
            .get_or_init(|| {
                if self.hermitian {
                    let mut s: Vec<f64> = self.eig()?.eigenvalues.iter().map(|l| l.abs()).collect();
                    s.sort_by(|a, b| b.total_cmp(a));
                    Ok(s)
                } else {
                    singular_values(self.m, self.tol)
                }
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    fn coeffs(&self) -> Result<&[Complex64]> {
        self.coeffs.get_or_init(|| char_poly(self.m)).as_ref().map(Vec::as_slice).map_err(Clone::clone)
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        self.rho
            .get_or_init(|| {
                if self.hermitian {
                    Ok(self.eig()?.spectral_abs_max())
                } else {
                    let roots = poly_roots(self.coeffs()?)?;
                    Ok(roots.iter().map(|z| z.norm()).fold(0.0, f64::max))
                }
            })
            .clone()
    }

    pub fn eval(&self, f: &LiebFunctional) -> Result<Complex64> {
        let n = self.m.rows();
        match *f {
            LiebFunctional::Determinant => determinant(self.m),
            LiebFunctional::Permanent => permanent(self.m),
            LiebFunctional::SpectralRadius => Ok(Complex64::new(self.spectral_radius()?, 0.0)),
            LiebFunctional::ElemSym(k) => {
                if k == 0 || k > n {
                    return Err(Error::ElemSymOrder { k, n });
                }
                let c = self.coeffs()?[n - k];
                Ok(if k % 2 == 0 { c } else { -c })
            }
            LiebFunctional::UINorm(norm) => {
                norm.validate()?;
                Ok(Complex64::new(norm.eval_singular(self.singular_values()?), 0.0))
            }
        }
    }
}
