//! The inequalities, as evaluators over explicit inputs.
//!
//! Evaluators that take a list of functionals return one measure per
//! functional, in order. `Err` at the outer level means a step shared by every
//! functional failed.

use num_complex::Complex64;

use crate::blocks::{factor_pair_block_from, make_block, pinch_decompose, Block2x2};
use crate::lieb::{FactorPair, LiebFunctional, MatrixProfile, NormKind};
use crate::linalg::{
    determinant, herm_eig, inner, quadratic_form, require_positive_definite, CMatrix, PolarSpectra,
};
use crate::means::{geom_mean, weighted_geom_mean, WeightedMeanQuery};
use crate::{Result, ToleranceConfig};

use super::outcome::Measure;

pub type Evals = Result<Vec<Result<Measure>>>;

/// Diagonal shift applied to singular geometric-mean operands.
pub const MEAN_REGULARIZATION: f64 = 1e-6;

fn profiles<'a>(mats: &[&'a CMatrix], tol: &'a ToleranceConfig) -> Result<Vec<MatrixProfile<'a>>> {
    mats.iter().map(|m| MatrixProfile::new(m, tol)).collect()
}

fn each(
    fs: &[LiebFunctional],
    mats: &[&CMatrix],
    tol: &ToleranceConfig,
    form: impl Fn(&LiebFunctional, &[MatrixProfile]) -> Result<Measure>,
) -> Evals {
    let p = profiles(mats, tol)?;
    Ok(fs.iter().map(|f| form(f, &p)).collect())
}

/// `|f(X)|^2 <= f(Y) f(Z)` with `p = [X, Y, Z]`.
fn cs_form(f: &LiebFunctional, p: &[MatrixProfile]) -> Result<Measure> {
    Ok(Measure::new(p[0].eval(f)?.norm_sqr(), p[1].eval(f)?.re * p[2].eval(f)?.re))
}

/// `|f(X)|^2 <= f(Y)^2` with `p = [X, Y]`.
fn square_form(f: &LiebFunctional, p: &[MatrixProfile]) -> Result<Measure> {
    Ok(Measure::new(p[0].eval(f)?.norm_sqr(), p[1].eval(f)?.re.powi(2)))
}

/// `|f(X)| <= f(Y)` with `p = [X, Y]`.
fn modulus_form(f: &LiebFunctional, p: &[MatrixProfile]) -> Result<Measure> {
    Ok(Measure::new(p[0].eval(f)?.norm(), p[1].eval(f)?.re))
}

fn norms_as_functionals(norms: &[NormKind]) -> Vec<LiebFunctional> {
    norms.iter().map(|&n| LiebFunctional::UINorm(n)).collect()
}

/// `phi(|H|)` for Hermitian `H`.
fn abs_map(h: &CMatrix, phi: impl Fn(f64) -> f64, tol: &ToleranceConfig) -> Result<CMatrix> {
    Ok(herm_eig(h, tol)?.map(|l| phi(l.abs())))
}

/// `Re <x, y>` for `<x, x>`-type quantities that are real by construction.
fn form(m: &CMatrix, x: &[Complex64]) -> f64 {
    quadratic_form(m, x).re
}

fn stack(top: &[Complex64], bottom: &[Complex64]) -> Vec<Complex64> {
    top.iter().chain(bottom).copied().collect()
}

fn zeros(n: usize) -> Vec<Complex64> {
    vec![Complex64::new(0.0, 0.0); n]
}

/// `|||A* X B|||^2 <= |||A A* X||| |||X B B*|||`.
pub fn cs_norm(a: &CMatrix, b: &CMatrix, x: &CMatrix, norms: &[NormKind], tol: &ToleranceConfig) -> Evals {
    let lhs = a.adjoint().matmul(x).matmul(b);
    let left = a.mul_adjoint(a).matmul(x);
    let right = x.matmul(&b.mul_adjoint(b));
    each(&norms_as_functionals(norms), &[&lhs, &left, &right], tol, cs_form)
}

/// `|det(I + A + B)| <= det(I + |A|) det(I + |B|)`.
pub fn det_seiler(a: &CMatrix, b: &CMatrix, tol: &ToleranceConfig) -> Result<Measure> {
    let lhs = determinant(&(a + b).shift(1.0))?.norm();
    let abs_a = PolarSpectra::new(a, tol)?.abs_fn(|s| s, tol)?;
    let abs_b = PolarSpectra::new(b, tol)?.abs_fn(|s| s, tol)?;
    let rhs = determinant(&abs_a.shift(1.0))?.re * determinant(&abs_b.shift(1.0))?.re;
    Ok(Measure::new(lhs, rhs))
}

/// `|f(T)|^2 <= f(g^2(|T|)) f(h^2(|T*|))`.
pub fn lieb_cs(
    t: &CMatrix,
    spectra: &PolarSpectra,
    pair: &FactorPair,
    fs: &[LiebFunctional],
    tol: &ToleranceConfig,
) -> Evals {
    let g2 = spectra.abs_fn(|s| pair.g_sq(s), tol)?;
    let h2 = spectra.abs_star_fn(|s| pair.h_sq(s), tol)?;
    each(fs, &[t, &g2, &h2], tol, cs_form)
}

/// `|f(T)|^2 <= f(|T*|^{2(1-w)}) f(|T|^{2w})`.
pub fn lieb_weighted(
    t: &CMatrix,
    spectra: &PolarSpectra,
    w: f64,
    fs: &[LiebFunctional],
    tol: &ToleranceConfig,
) -> Evals {
    let star = spectra.abs_star_fn(|s| s.powf(2.0 * (1.0 - w)), tol)?;
    let plain = spectra.abs_fn(|s| s.powf(2.0 * w), tol)?;
    each(fs, &[t, &star, &plain], tol, cs_form)
}

/// `|f(T)|^2 <= f(|T|^2) f(I)`.
pub fn lieb_unit_weight(t: &CMatrix, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let gram = t.adjoint_mul(t).hermitian_part();
    let id = CMatrix::identity(t.rows());
    each(fs, &[t, &gram, &id], tol, cs_form)
}

/// `|f(T)| <= f(|T|)` for normal `T`.
pub fn lieb_normal(t: &CMatrix, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let abs = PolarSpectra::new(t, tol)?.abs_fn(|s| s, tol)?;
    each(fs, &[t, &abs], tol, modulus_form)
}

/// `(g^2(|A|) + g^2(|B|), h^2(|A*|) + h^2(|B*|))` scaled by `(1-v, v)`.
fn convex_factor_sums(
    a: &CMatrix,
    b: &CMatrix,
    v: f64,
    pair: &FactorPair,
    tol: &ToleranceConfig,
) -> Result<(CMatrix, CMatrix)> {
    let (sa, sb) = (PolarSpectra::new(a, tol)?, PolarSpectra::new(b, tol)?);
    let g = &sa.abs_fn(|s| pair.g_sq(s), tol)?.scale_real(1.0 - v) + &sb.abs_fn(|s| pair.g_sq(s), tol)?.scale_real(v);
    let h = &sa.abs_star_fn(|s| pair.h_sq(s), tol)?.scale_real(1.0 - v)
        + &sb.abs_star_fn(|s| pair.h_sq(s), tol)?.scale_real(v);
    Ok((g, h))
}

/// `|f(A+B)|^2 <= f(g^2(|A|) + g^2(|B|)) f(h^2(|A*|) + h^2(|B*|))`.
pub fn sum_cs(a: &CMatrix, b: &CMatrix, pair: &FactorPair, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let (g, h) = convex_factor_sums(a, b, 0.5, pair, tol)?;
    let (g, h) = (g.scale_real(2.0), h.scale_real(2.0));
    each(fs, &[&(a + b), &g, &h], tol, cs_form)
}

/// The convex-combination form of [`sum_cs`] with weight `v` on `B`.
pub fn convex_cs(
    a: &CMatrix,
    b: &CMatrix,
    v: f64,
    pair: &FactorPair,
    fs: &[LiebFunctional],
    tol: &ToleranceConfig,
) -> Evals {
    let (g, h) = convex_factor_sums(a, b, v, pair, tol)?;
    let mix = &a.scale_real(1.0 - v) + &b.scale_real(v);
    each(fs, &[&mix, &g, &h], tol, cs_form)
}

/// `|||A+B|||^2 <= |||g^2(|A|) + g^2(|B|)||| |||h^2(|A*|) + h^2(|B*|)|||`.
pub fn norm_sum(a: &CMatrix, b: &CMatrix, pair: &FactorPair, norms: &[NormKind], tol: &ToleranceConfig) -> Evals {
    sum_cs(a, b, pair, &norms_as_functionals(norms), tol)
}

/// `|f(T)|^2 <= f(g^2|Re T| + g^2|Im T|) f(h^2|Re T| + h^2|Im T|)`.
pub fn cartesian_split(t: &CMatrix, pair: &FactorPair, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let (re, im) = (herm_eig(&t.real_part(), tol)?, herm_eig(&t.imag_part(), tol)?);
    let g = &re.map(|l| pair.g_sq(l.abs())) + &im.map(|l| pair.g_sq(l.abs()));
    let h = &re.map(|l| pair.h_sq(l.abs())) + &im.map(|l| pair.h_sq(l.abs()));
    each(fs, &[t, &g, &h], tol, cs_form)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Real,
    Imaginary,
}

impl Part {
    pub fn of(&self, t: &CMatrix) -> CMatrix {
        match self {
            Part::Real => t.real_part(),
            Part::Imaginary => t.imag_part(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Part::Real => "re",
            Part::Imaginary => "im",
        }
    }
}

/// `|f(Re T)|^2 <= f((g^2|T| + g^2|T*|)/2) f((h^2|T| + h^2|T*|)/2)`, and the
/// same for `Im T`.
pub fn re_im_bounds(
    t: &CMatrix,
    spectra: &PolarSpectra,
    part: Part,
    pair: &FactorPair,
    fs: &[LiebFunctional],
    tol: &ToleranceConfig,
) -> Evals {
    let g = (&spectra.abs_fn(|s| pair.g_sq(s), tol)? + &spectra.abs_star_fn(|s| pair.g_sq(s), tol)?).scale_real(0.5);
    let h = (&spectra.abs_fn(|s| pair.h_sq(s), tol)? + &spectra.abs_star_fn(|s| pair.h_sq(s), tol)?).scale_real(0.5);
    each(fs, &[&part.of(t), &g, &h], tol, cs_form)
}

/// `f(A # B)^2 <= f(A) f(B)`.
pub fn ando_gm(a: &CMatrix, b: &CMatrix, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let gm = geom_mean(a, b, tol)?;
    each(fs, &[&gm, a, b], tol, cs_form)
}

/// `f(A # B) <= sqrt(f(A) f(B))`.
pub fn ando_gm_mean(a: &CMatrix, b: &CMatrix, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let gm = geom_mean(a, b, tol)?;
    each(fs, &[&gm, a, b], tol, |f, p| {
        Ok(Measure::new(p[0].eval(f)?.norm(), (p[1].eval(f)?.re * p[2].eval(f)?.re).max(0.0).sqrt()))
    })
}

/// `g((s+t)/2)^2 <= g(s) g(t)` for `g(u) = f(A #_u B)`.
pub fn log_convex(a: &CMatrix, b: &CMatrix, s: f64, t: f64, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let path = |w: f64| weighted_geom_mean(&WeightedMeanQuery::new(a.clone(), b.clone(), w, tol)?, tol);
    let (mid, left, right) = (path(0.5 * (s + t))?, path(s)?, path(t)?);
    each(fs, &[&mid, &left, &right], tol, cs_form)
}

/// `|f(t B*A + (1-t) A*B)|^2 <= f(t A*A + (1-t) B*B) f(t B*B + (1-t) A*A)`.
pub fn convex_cs_condition(a: &CMatrix, b: &CMatrix, t: f64, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let (ba, ab) = (b.adjoint_mul(a), a.adjoint_mul(b));
    let (aa, bb) = (a.adjoint_mul(a).hermitian_part(), b.adjoint_mul(b).hermitian_part());
    let c = &ba.scale_real(t) + &ab.scale_real(1.0 - t);
    let x = &aa.scale_real(t) + &bb.scale_real(1.0 - t);
    let y = &bb.scale_real(t) + &aa.scale_real(1.0 - t);
    each(fs, &[&c, &x, &y], tol, cs_form)
}

/// `|f(Re(B*A))| <= f((A*A + B*B)/2)`.
pub fn gather(a: &CMatrix, b: &CMatrix, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let c = b.adjoint_mul(a).hermitian_part();
    let x = (&a.adjoint_mul(a) + &b.adjoint_mul(b)).scale_real(0.5).hermitian_part();
    each(fs, &[&c, &x], tol, modulus_form)
}

/// `(A_1 # A_2, B_1 # B_2)` of two blocks.
fn block_means(b1: &Block2x2, b2: &Block2x2, tol: &ToleranceConfig) -> Result<(CMatrix, CMatrix)> {
    Ok((geom_mean(b1.a(), b2.a(), tol)?, geom_mean(b1.b(), b2.b(), tol)?))
}

/// `|f(C)|^2 <= f(A_1 # A_2) f(B_1 # B_2)` for PSD blocks sharing `C`.
pub fn gm_blocks(b1: &Block2x2, b2: &Block2x2, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let (a, b) = block_means(b1, b2, tol)?;
    each(fs, &[b1.c(), &a, &b], tol, cs_form)
}

/// `[[A_1 # A_2, C*], [C, B_1 # B_2]] >= O`.
pub fn gm_blocks_psd(b1: &Block2x2, b2: &Block2x2, tol: &ToleranceConfig) -> Result<Measure> {
    let (a, b) = block_means(b1, b2, tol)?;
    Measure::psd(make_block(a, b1.c().clone(), b)?.assembled(), tol)
}

/// `|f(C + C*)|^2 <= f(A + B)^2` for a PSD block `[[A, C*], [C, B]]`.
pub fn offblock(m: &Block2x2, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let c = m.c() + &m.c().adjoint();
    let ab = (m.a() + m.b()).hermitian_part();
    each(fs, &[&c, &ab], tol, square_form)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealPartBound {
    /// `|f(T + T*)|^2 <= f(|T|^2 + I)^2`.
    UnitShift,
    /// `|f(T + T*)|^2 <= f(|T| + |T*|)^2`.
    PolarSum,
    /// `|f(T + T*)|^2 <= f(2|T|)^2` for normal `T`.
    Normal,
}

impl RealPartBound {
    pub fn name(&self) -> &'static str {
        match self {
            RealPartBound::UnitShift => "unit",
            RealPartBound::PolarSum => "abs",
            RealPartBound::Normal => "normal",
        }
    }
}

pub fn real_part_block(t: &CMatrix, bound: RealPartBound, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let sum = t + &t.adjoint();
    let spectra = PolarSpectra::new(t, tol)?;
    let upper = match bound {
        RealPartBound::UnitShift => spectra.abs_fn(|s| s * s, tol)?.shift(1.0),
        RealPartBound::PolarSum => &spectra.abs_fn(|s| s, tol)? + &spectra.abs_star_fn(|s| s, tol)?,
        RealPartBound::Normal => spectra.abs_fn(|s| 2.0 * s, tol)?,
    };
    each(fs, &[&sum, &upper], tol, square_form)
}

/// `|f(2H)|^2 <= f(2|H|)^2` for Hermitian `H`.
pub fn self_adjoint_block(h: &CMatrix, fs: &[LiebFunctional], tol: &ToleranceConfig) -> Evals {
    let twice = h.scale_real(2.0).hermitian_part();
    let upper = abs_map(h, |l| 2.0 * l, tol)?;
    each(fs, &[&twice, &upper], tol, square_form)
}

/// `|<Tx, y>|^2 <= <Tx, x> <Ty, y>` for PSD `T`.
pub fn vector_cs(t: &CMatrix, x: &[Complex64], y: &[Complex64]) -> Measure {
    Measure::new(inner(&t.apply(x), y).norm_sqr(), form(t, x) * form(t, y))
}

/// `|<Cx, y>|^2 <= <W(x,0), (x,0)> <W(0,y), (0,y)>` where `W` is rebuilt
/// from the pinching decomposition of the PSD block `[[A, C*], [C, B]]`.
pub fn pinched_block_cs(m: &Block2x2, x: &[Complex64], y: &[Complex64], tol: &ToleranceConfig) -> Result<Measure> {
    let w = pinch_decompose(m, tol)?.reconstruct();
    let (n, k) = (m.a().rows(), m.b().rows());
    let lhs = inner(&m.c().apply(x), y).norm_sqr();
    Ok(Measure::new(lhs, form(&w, &stack(x, &zeros(k))) * form(&w, &stack(&zeros(n), y))))
}

/// [`pinched_block_cs`] on the factor-pair block of `T`.
pub fn pinched_factor_cs(
    t: &CMatrix,
    spectra: &PolarSpectra,
    pair: &FactorPair,
    x: &[Complex64],
    y: &[Complex64],
    tol: &ToleranceConfig,
) -> Result<Measure> {
    pinched_block_cs(&factor_pair_block_from(t, spectra, pair, tol)?, x, y, tol)
}

/// `||T|| <= (||S + Re T|| + ||S - Re T||)/2` with `S = (g^2(|T|) + h^2(|T*|))/2`.
pub fn norm_real_part(t: &CMatrix, spectra: &PolarSpectra, pair: &FactorPair, tol: &ToleranceConfig) -> Result<Measure> {
    let s = (&spectra.abs_fn(|s| pair.g_sq(s), tol)? + &spectra.abs_star_fn(|s| pair.h_sq(s), tol)?).scale_real(0.5);
    let re = t.real_part();
    let plus = herm_eig(&(&s + &re), tol)?.spectral_abs_max();
    let minus = herm_eig(&(&s - &re), tol)?.spectral_abs_max();
    let lhs = spectra.singular_values().first().copied().unwrap_or(0.0);
    Ok(Measure::new(lhs, 0.5 * (plus + minus)))
}

/// `||T|| <= (|| |T| + |T*| + 2 Re T || + || |T| + |T*| - 2 Re T ||)/4`.
pub fn norm_real_part_quarter(t: &CMatrix, spectra: &PolarSpectra, tol: &ToleranceConfig) -> Result<Measure> {
    let polar = &spectra.abs_fn(|s| s, tol)? + &spectra.abs_star_fn(|s| s, tol)?;
    let re2 = t.real_part().scale_real(2.0);
    let plus = herm_eig(&(&polar + &re2), tol)?.spectral_abs_max();
    let minus = herm_eig(&(&polar - &re2), tol)?.spectral_abs_max();
    let lhs = spectra.singular_values().first().copied().unwrap_or(0.0);
    Ok(Measure::new(lhs, 0.25 * (plus + minus)))
}

/// `(g^2(|T|) + g^2(|T*|), h^2(|T|) + h^2(|T*|))`.
fn cartesian_factors(spectra: &PolarSpectra, pair: &FactorPair, tol: &ToleranceConfig) -> Result<(CMatrix, CMatrix)> {
    Ok((
        &spectra.abs_fn(|s| pair.g_sq(s), tol)? + &spectra.abs_star_fn(|s| pair.g_sq(s), tol)?,
        &spectra.abs_fn(|s| pair.h_sq(s), tol)? + &spectra.abs_star_fn(|s| pair.h_sq(s), tol)?,
    ))
}

/// `|<Re T x, y>| <= sqrt(<F x, x> <G y, y>)/2` with `F`, `G` the
/// cartesian factor sums; likewise for `Im T`.
pub fn cartesian_vector_cs(
    t: &CMatrix,
    spectra: &PolarSpectra,
    part: Part,
    pair: &FactorPair,
    x: &[Complex64],
    y: &[Complex64],
    tol: &ToleranceConfig,
) -> Result<Measure> {
    let (f, g) = cartesian_factors(spectra, pair, tol)?;
    let lhs = inner(&part.of(t).apply(x), y).norm();
    Ok(Measure::new(lhs, 0.5 * (form(&f, x) * form(&g, y)).max(0.0).sqrt()))
}

/// `|<(A+B)x, y>|^2 <= <(g^2|A| + g^2|B|)x, x> <(h^2|A*| + h^2|B*|)y, y>`.
pub fn sum_vector_cs(
    a: &CMatrix,
    b: &CMatrix,
    pair: &FactorPair,
    x: &[Complex64],
    y: &[Complex64],
    tol: &ToleranceConfig,
) -> Result<Measure> {
    let (g, h) = convex_factor_sums(a, b, 0.5, pair, tol)?;
    let lhs = inner(&(a + b).apply(x), y).norm_sqr();
    Ok(Measure::new(lhs, 4.0 * form(&g, x) * form(&h, y)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartesianBlock {
    /// `[[F/2, Re T], [Re T, G/2]]`.
    RealHalf,
    /// `[[F/2, Im T], [Im T, G/2]]`.
    ImagHalf,
    /// `[[F, Re T + Im T], [Re T + Im T, G]]`.
    Sum,
}

impl CartesianBlock {
    pub fn name(&self) -> &'static str {
        match self {
            CartesianBlock::RealHalf => "re",
            CartesianBlock::ImagHalf => "im",
            CartesianBlock::Sum => "sum",
        }
    }
}

pub fn cartesian_block(
    t: &CMatrix,
    spectra: &PolarSpectra,
    which: CartesianBlock,
    pair: &FactorPair,
    tol: &ToleranceConfig,
) -> Result<Measure> {
    let (f, g) = cartesian_factors(spectra, pair, tol)?;
    let (f, g, c) = match which {
        CartesianBlock::RealHalf => (f.scale_real(0.5), g.scale_real(0.5), t.real_part()),
        CartesianBlock::ImagHalf => (f.scale_real(0.5), g.scale_real(0.5), t.imag_part()),
        CartesianBlock::Sum => (f, g, &t.real_part() + &t.imag_part()),
    };
    Measure::psd(make_block(f, c, g)?.assembled(), tol)
}

/// `X # Y`, shifting both by [`MEAN_REGULARIZATION`] when either is not
/// positive definite. Returns the shift used.
pub fn regularized_mean(x: &CMatrix, y: &CMatrix, tol: &ToleranceConfig) -> Result<(CMatrix, Option<f64>)> {
    let definite = require_positive_definite(&herm_eig(x, tol)?, tol).is_ok()
        && require_positive_definite(&herm_eig(y, tol)?, tol).is_ok();
    if definite {
        Ok((geom_mean(x, y, tol)?, None))
    } else {
        let e = MEAN_REGULARIZATION;
        Ok((geom_mean(&x.shift(e), &y.shift(e), tol)?, Some(e)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartesianOrder {
    /// `+-(Re T + Im T) <= F # G`.
    SumMean,
    /// `+-Re T <= (F/2) # (G/2)`.
    RealMean,
    /// `+-Im T <= (F/2) # (G/2)`.
    ImagMean,
}

impl CartesianOrder {
    pub fn name(&self) -> &'static str {
        match self {
            CartesianOrder::SumMean => "sum",
            CartesianOrder::RealMean => "re",
            CartesianOrder::ImagMean => "im",
        }
    }
}

pub fn cartesian_order(
    t: &CMatrix,
    spectra: &PolarSpectra,
    which: CartesianOrder,
    pair: &FactorPair,
    tol: &ToleranceConfig,
) -> Result<Measure> {
    let (f, g) = cartesian_factors(spectra, pair, tol)?;
    let (f, g, c) = match which {
        CartesianOrder::SumMean => (f, g, &t.real_part() + &t.imag_part()),
        CartesianOrder::RealMean => (f.scale_real(0.5), g.scale_real(0.5), t.real_part()),
        CartesianOrder::ImagMean => (f.scale_real(0.5), g.scale_real(0.5), t.imag_part()),
    };
    let (mean, shift) = regularized_mean(&f, &g, tol)?;
    Ok(Measure::plus_minus(&c, &mean, tol)?.with_shift(shift))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolarOrder {
    /// `+-(Re T + Im T) <= |T| + |T*|`.
    Sum,
    /// `+-Re T <= (|T| + |T*|)/2`.
    RealHalf,
    /// `+-Im T <= (|T| + |T*|)/2`.
    ImagHalf,
}

impl PolarOrder {
    pub fn name(&self) -> &'static str {
        match self {
            PolarOrder::Sum => "abs",
            PolarOrder::RealHalf => "re-half",
            PolarOrder::ImagHalf => "im-half",
        }
    }
}

pub fn polar_order(t: &CMatrix, spectra: &PolarSpectra, which: PolarOrder, tol: &ToleranceConfig) -> Result<Measure> {
    let polar = &spectra.abs_fn(|s| s, tol)? + &spectra.abs_star_fn(|s| s, tol)?;
    let (upper, c) = match which {
        PolarOrder::Sum => (polar, &t.real_part() + &t.imag_part()),
        PolarOrder::RealHalf => (polar.scale_real(0.5), t.real_part()),
        PolarOrder::ImagHalf => (polar.scale_real(0.5), t.imag_part()),
    };
    Measure::plus_minus(&c, &upper, tol)
}
