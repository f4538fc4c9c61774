//! 2x2 block matrices, block positivity and the pinching decomposition.

use crate::lieb::FactorPair;
use crate::linalg::{herm_eig, is_psd, svd, CMatrix, PolarSpectra};
use crate::means::geom_mean;
use crate::{Error, Result, ToleranceConfig};

/// `[[A, C*], [C, B]]` with `A` `n x n`, `C` `m x n` and `B` `m x m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Block2x2 {
    a: CMatrix,
    c: CMatrix,
    b: CMatrix,
    assembled: CMatrix,
}

pub fn make_block(a: CMatrix, c: CMatrix, b: CMatrix) -> Result<Block2x2> {
    let n = a.require_square()?;
    let m = b.require_square()?;
    if c.shape() != (m, n) {
        return Err(Error::ShapeMismatch(format!(
            "off-diagonal block is {}x{}, expected {m}x{n}",
            c.rows(),
            c.cols()
        )));
    }
    let assembled = CMatrix::from_blocks(&a, &c.adjoint(), &c, &b)?;
    Ok(Block2x2 { a, c, b, assembled })
}

impl Block2x2 {
    /// Splits a square matrix after its first `n` rows and columns. The
    /// upper-right block is taken as the adjoint of the lower-left one.
    pub fn from_assembled(m: &CMatrix, n: usize) -> Result<Self> {
        let size = m.require_square()?;
        if n == 0 || n >= size {
            return Err(Error::ShapeMismatch(format!("cannot split a {size}x{size} matrix after row {n}")));
        }
        let k = size - n;
        make_block(m.sub_block(0, 0, n, n), m.sub_block(n, 0, k, n), m.sub_block(n, n, k, k))
    }

    pub fn a(&self) -> &CMatrix {
        &self.a
    }

    pub fn c(&self) -> &CMatrix {
        &self.c
    }

    pub fn b(&self) -> &CMatrix {
        &self.b
    }

    pub fn assembled(&self) -> &CMatrix {
        &self.assembled
    }

    /// Size of the upper-left block.
    pub fn split(&self) -> usize {
        self.a.rows()
    }

    /// `[[B, C], [C*, A]]`.
    pub fn flip(&self) -> Block2x2 {
        make_block(self.b.clone(), self.c.adjoint(), self.a.clone()).expect("shapes are conformal")
    }

    /// `[[O, C*], [C, O]]`.
    pub fn off_diagonal(&self) -> CMatrix {
        let mut n = self.assembled.clone();
        n.set_block(0, 0, &CMatrix::zeros(self.a.rows(), self.a.rows()));
        n.set_block(self.a.rows(), self.a.rows(), &CMatrix::zeros(self.b.rows(), self.b.rows()));
        n
    }

    pub fn add(&self, other: &Block2x2) -> Result<Block2x2> {
        self.assembled.require_same_shape(&other.assembled)?;
        if self.split() != other.split() {
            return Err(Error::ShapeMismatch("blocks are split at different rows".into()));
        }
        make_block(&self.a + &other.a, &self.c + &other.c, &self.b + &other.b)
    }
}

/// `u diag(top, O) u* + v diag(O, bottom) v*`.
#[derive(Debug, Clone)]
pub struct PinchDecomp {
    pub u: CMatrix,
    pub v: CMatrix,
    pub top: CMatrix,
    pub bottom: CMatrix,
}

impl PinchDecomp {
    pub fn reconstruct(&self) -> CMatrix {
        let (n, m) = (self.top.rows(), self.bottom.rows());
        let upper = CMatrix::direct_sum(&self.top, &CMatrix::zeros(m, m));
        let lower = CMatrix::direct_sum(&CMatrix::zeros(n, n), &self.bottom);
        &self.u.matmul(&upper).mul_adjoint(&self.u) + &self.v.matmul(&lower).mul_adjoint(&self.v)
    }

    /// Largest entrywise deviation of the reconstruction from `source`.
    pub fn residual(&self, source: &CMatrix) -> f64 {
        self.reconstruct().max_abs_diff(source)
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.u.unitarity_defect().max(self.v.unitarity_defect())
    }
}

/// `[[g^2(|T|), T*], [T, h^2(|T*|)]]`, certified PSD.
pub fn factor_pair_block(t: &CMatrix, pair: &FactorPair, tol: &ToleranceConfig) -> Result<Block2x2> {
    let spectra = PolarSpectra::new(t, tol)?;
    factor_pair_block_from(t, &spectra, pair, tol)
}

/// As [`factor_pair_block`], reusing precomputed polar spectra of `t`.
pub fn factor_pair_block_from(
    t: &CMatrix,
    spectra: &PolarSpectra,
    pair: &FactorPair,
    tol: &ToleranceConfig,
) -> Result<Block2x2> {
    let top_singular = spectra.singular_values().first().copied().unwrap_or(0.0);
    pair.validate_for_spectrum(top_singular)?;
    let block = make_block(
        spectra.abs_fn(|s| pair.g_sq(s), tol)?,
        t.clone(),
        spectra.abs_star_fn(|s| pair.h_sq(s), tol)?,
    )?;
    certify(&block.assembled, tol)?;
    Ok(block)
}

fn certify(m: &CMatrix, tol: &ToleranceConfig) -> Result<()> {
    let w = is_psd(m, tol)?;
    if w.holds {
        Ok(())
    } else {
        Err(Error::NotPsd { lambda_min: w.lambda_min })
    }
}

/// Constructive decomposition of a PSD block as
/// `u diag(A, O) u* + v diag(O, B) v*`.
///
/// With `R = M^{1/2}` and `P_1`, `P_2` the coordinate projections,
/// `M = R P_1 R + R P_2 R`. For `X_1 = P_1 R` with full SVD `W S Z*` we have
/// `X_1 X_1* = diag(A, O)` and `R P_1 R = X_1* X_1`, so `u = Z W*` conjugates
/// one into the other; `v` comes from `X_2 = P_2 R` the same way.
pub fn pinch_decompose(m: &Block2x2, tol: &ToleranceConfig) -> Result<PinchDecomp> {
    let eig = herm_eig(&m.assembled, tol)?;
    let root = eig.psd_map(f64::sqrt, tol)?;
    let n = m.split();
    let size = m.assembled.rows();

    let conjugator = |rows: std::ops::Range<usize>| -> Result<CMatrix> {
        let mut x = CMatrix::zeros(size, size);
        for i in rows {
            for j in 0..size {
                x[(i, j)] = root[(i, j)];
            }
        }
        let d = svd(&x, tol)?;
        Ok(d.right.mul_adjoint(&d.left))
    };

    Ok(PinchDecomp {
        u: conjugator(0..n)?,
        v: conjugator(n..size)?,
        top: m.a.clone(),
        bottom: m.b.clone(),
    })
}

/// [`pinch_decompose`] of a raw matrix split after row `n`.
pub fn pinch_decompose_matrix(m: &CMatrix, n: usize, tol: &ToleranceConfig) -> Result<PinchDecomp> {
    pinch_decompose(&Block2x2::from_assembled(m, n)?, tol)
}

/// `K = [[I, I], [I, -I]] / sqrt(2)`, unitary and self-inverse.
fn half_turn(n: usize) -> CMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let i = CMatrix::identity(n).scale_real(s);
    CMatrix::from_blocks(&i, &i, &i, &(-&i)).expect("square identity blocks")
}

/// Decomposes the factor-pair block of `T` as
/// `u diag(S + Re T, O) u* + v diag(O, S - Re T) v*` with
/// `S = (g^2(|T|) + h^2(|T*|))/2`.
///
/// The block is first rotated by `K`, whose diagonal blocks are exactly
/// `S +- Re T`, then pinched; the unitaries are rotated back. The returned
/// blocks are checked to be similar to `S +- Re T` computed independently.
pub fn cartesian_pinch_decompose(t: &CMatrix, pair: &FactorPair, tol: &ToleranceConfig) -> Result<PinchDecomp> {
    let n = t.require_square()?;
    let block = factor_pair_block(t, pair, tol)?;
    let k = half_turn(n);
    let rotated = k.matmul(&block.assembled).matmul(&k).hermitian_part();
    let inner = pinch_decompose_matrix(&rotated, n, tol)?;
    let decomp = PinchDecomp {
        u: k.matmul(&inner.u),
        v: k.matmul(&inner.v),
        top: inner.top,
        bottom: inner.bottom,
    };

    let s = (&block.a + &block.b).scale_real(0.5);
    let re = t.real_part();
    for (got, want) in [(&decomp.top, &s + &re), (&decomp.bottom, &s - &re)] {
        let lhs = herm_eig(got, tol)?.eigenvalues;
        let rhs = herm_eig(&want, tol)?.eigenvalues;
        let scale = rhs.iter().fold(0.0f64, |acc, l| acc.max(l.abs()));
        let defect = lhs.iter().zip(&rhs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if defect > tol.bound(scale) {
            return Err(Error::SimilarityMismatch { defect });
        }
    }
    Ok(decomp)
}

/// `[[A_1 # A_2, C*], [C, B_1 # B_2]]` for blocks sharing `C`, certified PSD.
pub fn gm_block_merge(b1: &Block2x2, b2: &Block2x2, tol: &ToleranceConfig) -> Result<Block2x2> {
    b1.assembled.require_same_shape(&b2.assembled)?;
    if b1.split() != b2.split() {
        return Err(Error::ShapeMismatch("blocks are split at different rows".into()));
    }
    let defect = b1.c.max_abs_diff(&b2.c);
    if defect > tol.bound(b1.c.max_abs()) {
        return Err(Error::OffDiagonalMismatch { defect });
    }
    let merged = make_block(geom_mean(&b1.a, &b2.a, tol)?, b1.c.clone(), geom_mean(&b1.b, &b2.b, tol)?)?;
    certify(&merged.assembled, tol)?;
    Ok(merged)
}
