use std::fmt;
use std::str::FromStr;

use crate::blocks::{factor_pair_block_from, make_block, Block2x2};
use crate::lieb::{lieb_axiom_trial, FactorPair, LiebFunctional, NormKind};
use crate::linalg::{CMatrix, PolarSpectra};
use crate::{Error, Result, ToleranceConfig};

use super::checks::{self as ck, CartesianBlock, CartesianOrder, Evals, Part, PolarOrder, RealPartBound};
use super::ensemble::Sampler;
use super::outcome::Measure;

/// Every registered inequality check. Names double as the stable ids used in
/// reports and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    CsNorm,
    DetSeiler,
    LiebCs,
    LiebWeighted,
    SumCs,
    ConvexCs,
    NormSum,
    CartesianSplit,
    ReImBounds,
    AndoGm,
    LogConvex,
    ConvexCsCondition,
    Gather,
    GmBlocks,
    Offblock,
    RealPartBlock,
    VectorCs,
    PinchedBlockCs,
    PinchedFactorCs,
    NormRealPart,
    CartesianVectorCs,
    CartesianBlocks,
    CartesianOrder,
    LiebAxioms,
}

impl CheckId {
    pub const ALL: [CheckId; 24] = [
        CheckId::CsNorm,
        CheckId::DetSeiler,
        CheckId::LiebCs,
        CheckId::LiebWeighted,
        CheckId::SumCs,
        CheckId::ConvexCs,
        CheckId::NormSum,
        CheckId::CartesianSplit,
        CheckId::ReImBounds,
        CheckId::AndoGm,
        CheckId::LogConvex,
        CheckId::ConvexCsCondition,
        CheckId::Gather,
        CheckId::GmBlocks,
        CheckId::Offblock,
        CheckId::RealPartBlock,
        CheckId::VectorCs,
        CheckId::PinchedBlockCs,
        CheckId::PinchedFactorCs,
        CheckId::NormRealPart,
        CheckId::CartesianVectorCs,
        CheckId::CartesianBlocks,
        CheckId::CartesianOrder,
        CheckId::LiebAxioms,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::CsNorm => "check_cs_norm",
            CheckId::DetSeiler => "check_det_seiler",
            CheckId::LiebCs => "check_lieb_cs",
            CheckId::LiebWeighted => "check_lieb_weighted",
            CheckId::SumCs => "check_sum_cs",
            CheckId::ConvexCs => "check_convex_cs",
            CheckId::NormSum => "check_norm_sum",
            CheckId::CartesianSplit => "check_cartesian_split",
            CheckId::ReImBounds => "check_re_im_bounds",
            CheckId::AndoGm => "check_ando_gm",
            CheckId::LogConvex => "check_log_convex",
            CheckId::ConvexCsCondition => "check_gencondii",
            CheckId::Gather => "check_gather",
            CheckId::GmBlocks => "check_gm_blocks",
            CheckId::Offblock => "check_offblock",
            CheckId::RealPartBlock => "check_offblockT",
            CheckId::VectorCs => "check_lemma04",
            CheckId::PinchedBlockCs => "check_thm02",
            CheckId::PinchedFactorCs => "check_thm12",
            CheckId::NormRealPart => "check_nee1",
            CheckId::CartesianVectorCs => "check_thm14",
            CheckId::CartesianBlocks => "check_eq16_15",
            CheckId::CartesianOrder => "check_rem_imre",
            CheckId::LiebAxioms => "check_lieb_axioms",
        }
    }

    /// Runs one trial, appending its variants to `cx`.
    pub fn run(&self, cx: &mut TrialContext) {
        match self {
            CheckId::CsNorm => run_cs_norm(cx),
            CheckId::DetSeiler => run_det_seiler(cx),
            CheckId::LiebCs => run_lieb_cs(cx),
            CheckId::LiebWeighted => run_lieb_weighted(cx),
            CheckId::SumCs => run_sum_cs(cx),
            CheckId::ConvexCs => run_convex_cs(cx),
            CheckId::NormSum => run_norm_sum(cx),
            CheckId::CartesianSplit => run_cartesian_split(cx),
            CheckId::ReImBounds => run_re_im_bounds(cx),
            CheckId::AndoGm => run_ando_gm(cx),
            CheckId::LogConvex => run_log_convex(cx),
            CheckId::ConvexCsCondition => run_convex_cs_condition(cx),
            CheckId::Gather => run_gather(cx),
            CheckId::GmBlocks => run_gm_blocks(cx),
            CheckId::Offblock => run_offblock(cx),
            CheckId::RealPartBlock => run_real_part_block(cx),
            CheckId::VectorCs => run_vector_cs(cx),
            CheckId::PinchedBlockCs => run_pinched_block_cs(cx),
            CheckId::PinchedFactorCs => run_pinched_factor_cs(cx),
            CheckId::NormRealPart => run_norm_real_part(cx),
            CheckId::CartesianVectorCs => run_cartesian_vector_cs(cx),
            CheckId::CartesianBlocks => run_cartesian_blocks(cx),
            CheckId::CartesianOrder => run_cartesian_order(cx),
            CheckId::LiebAxioms => lieb_axiom_trial(cx),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let wanted = if s.starts_with("check_") { s.to_string() } else { format!("check_{s}") };
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

/// Inputs and accumulated variants of one `(check, dim, trial)` cell.
///
/// Every variant of a trial (functionals, pairs, sub-statements) is computed
/// from the same random draws.
pub struct TrialContext<'a> {
    pub dim: usize,
    pub sampler: Sampler,
    pub tol: &'a ToleranceConfig,
    functionals: Vec<LiebFunctional>,
    pairs: &'a [FactorPair],
    base: &'static str,
    variants: Vec<(String, Result<Measure>)>,
}

impl<'a> TrialContext<'a> {
    pub fn new(
        check: CheckId,
        dim: usize,
        seed: u64,
        functionals: &[LiebFunctional],
        pairs: &'a [FactorPair],
        tol: &'a ToleranceConfig,
    ) -> Self {
        Self {
            dim,
            sampler: Sampler::new(seed),
            tol,
            functionals: functionals.iter().copied().filter(|f| f.applies_to(dim)).collect(),
            pairs,
            base: check.name(),
            variants: Vec::new(),
        }
    }

    /// Functionals defined at this dimension.
    pub fn functionals(&self) -> Vec<LiebFunctional> {
        self.functionals.clone()
    }

    pub fn norms(&self) -> Vec<NormKind> {
        self.functionals
            .iter()
            .filter_map(|f| match f {
                LiebFunctional::UINorm(n) => Some(*n),
                _ => None,
            })
            .collect()
    }

    pub fn pairs(&self) -> &'a [FactorPair] {
        self.pairs
    }

    fn id(&self, f: Option<&LiebFunctional>, pair: Option<&FactorPair>, sub: Option<&str>) -> String {
        let mut id = self.base.to_string();
        if let Some(f) = f {
            id.push(':');
            id.push_str(&f.to_string());
        }
        if let Some(p) = pair {
            id.push(':');
            id.push_str(&p.to_string());
        }
        if let Some(s) = sub {
            id.push(':');
            id.push_str(s);
        }
        id
    }

    /// Records a variant that does not depend on a functional.
    pub fn record(&mut self, pair: Option<&FactorPair>, sub: Option<&str>, m: Result<Measure>) {
        let id = self.id(None, pair, sub);
        self.variants.push((id, m));
    }

    /// Records one variant per functional in `fs`.
    pub fn record_each(&mut self, fs: &[LiebFunctional], pair: Option<&FactorPair>, sub: Option<&str>, evals: Evals) {
        match evals {
            Ok(ms) => {
                for (f, m) in fs.iter().zip(ms) {
                    let id = self.id(Some(f), pair, sub);
                    self.variants.push((id, m));
                }
            }
            Err(e) => {
                for f in fs {
                    let id = self.id(Some(f), pair, sub);
                    self.variants.push((id, Err(e.clone())));
                }
            }
        }
    }

    pub fn into_variants(self) -> Vec<(String, Result<Measure>)> {
        self.variants
    }
}

fn shared<T>(r: &Result<T>) -> Result<&T> {
    r.as_ref().map_err(Clone::clone)
}

fn norm_functionals(norms: &[NormKind]) -> Vec<LiebFunctional> {
    norms.iter().map(|&n| LiebFunctional::UINorm(n)).collect()
}

fn run_cs_norm(cx: &mut TrialContext) {
    let n = cx.dim;
    let tol = cx.tol;
    let norms = cx.norms();
    let fs = norm_functionals(&norms);
    let (a, b, x) = (cx.sampler.ginibre(n), cx.sampler.ginibre(n), cx.sampler.ginibre(n));
    cx.record_each(&fs, None, None, ck::cs_norm(&a, &b, &x, &norms, tol));

    let xs: Vec<_> = (0..n).map(|_| cx.sampler.gaussian()).collect();
    let ys: Vec<_> = (0..n).map(|_| cx.sampler.gaussian()).collect();
    let (da, db) = (CMatrix::from_diag(&xs), CMatrix::from_diag(&ys));
    cx.record_each(&fs, None, Some("scalar"), ck::cs_norm(&da, &db, &CMatrix::identity(n), &norms, tol));
}

fn run_det_seiler(cx: &mut TrialContext) {
    let (a, b) = (cx.sampler.ginibre(cx.dim), cx.sampler.ginibre(cx.dim));
    let m = ck::det_seiler(&a, &b, cx.tol);
    cx.record(None, None, m);
}

fn run_lieb_cs(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let t = cx.sampler.ginibre(cx.dim);
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        let evals = shared(&spectra).and_then(|s| ck::lieb_cs(&t, s, pair, &fs, tol));
        cx.record_each(&fs, Some(pair), None, evals);
    }
}

fn run_lieb_weighted(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let t = cx.sampler.ginibre(cx.dim);
    let normal = cx.sampler.normal(cx.dim);
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        let Some(w) = pair.exponent() else { continue };
        let evals = shared(&spectra).and_then(|s| ck::lieb_weighted(&t, s, w, &fs, tol));
        cx.record_each(&fs, Some(pair), None, evals);
    }
    cx.record_each(&fs, None, Some("unit"), ck::lieb_unit_weight(&t, &fs, tol));
    cx.record_each(&fs, None, Some("normal"), ck::lieb_normal(&normal, &fs, tol));
}

fn run_sum_cs(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let (a, b) = (cx.sampler.ginibre(cx.dim), cx.sampler.ginibre(cx.dim));
    for pair in cx.pairs() {
        cx.record_each(&fs, Some(pair), None, ck::sum_cs(&a, &b, pair, &fs, tol));
    }
}

fn run_convex_cs(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let (a, b) = (cx.sampler.ginibre(cx.dim), cx.sampler.ginibre(cx.dim));
    let v = cx.sampler.uniform();
    for pair in cx.pairs() {
        cx.record_each(&fs, Some(pair), None, ck::convex_cs(&a, &b, v, pair, &fs, tol));
    }
}

fn run_norm_sum(cx: &mut TrialContext) {
    let tol = cx.tol;
    let norms = cx.norms();
    let fs = norm_functionals(&norms);
    let (a, b) = (cx.sampler.ginibre(cx.dim), cx.sampler.ginibre(cx.dim));
    for pair in cx.pairs() {
        cx.record_each(&fs, Some(pair), None, ck::norm_sum(&a, &b, pair, &norms, tol));
    }
}

fn run_cartesian_split(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let t = cx.sampler.ginibre(cx.dim);
    for pair in cx.pairs() {
        cx.record_each(&fs, Some(pair), None, ck::cartesian_split(&t, pair, &fs, tol));
    }
}

fn run_re_im_bounds(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let t = cx.sampler.ginibre(cx.dim);
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        for part in [Part::Real, Part::Imaginary] {
            let evals = shared(&spectra).and_then(|s| ck::re_im_bounds(&t, s, part, pair, &fs, tol));
            cx.record_each(&fs, Some(pair), Some(part.name()), evals);
        }
    }
}

fn run_ando_gm(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let (a, b) = (cx.sampler.pd(cx.dim), cx.sampler.pd(cx.dim));
    cx.record_each(&fs, None, Some("square"), ck::ando_gm(&a, &b, &fs, tol));
    cx.record_each(&fs, None, Some("mean"), ck::ando_gm_mean(&a, &b, &fs, tol));
}

fn run_log_convex(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let (a, b) = (cx.sampler.pd(cx.dim), cx.sampler.pd(cx.dim));
    let (s, t) = (cx.sampler.uniform(), cx.sampler.uniform());
    cx.record_each(&fs, None, None, ck::log_convex(&a, &b, s, t, &fs, tol));
}

fn run_convex_cs_condition(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let (a, b) = (cx.sampler.ginibre(cx.dim), cx.sampler.ginibre(cx.dim));
    let t = cx.sampler.uniform();
    cx.record_each(&fs, None, None, ck::convex_cs_condition(&a, &b, t, &fs, tol));
}

fn run_gather(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let (a, b) = (cx.sampler.ginibre(cx.dim), cx.sampler.ginibre(cx.dim));
    cx.record_each(&fs, None, None, ck::gather(&a, &b, &fs, tol));
}

/// Diagonal padding `diag(P, Q)` with `P`, `Q` drawn positive definite.
fn pd_padding(s: &mut Sampler, n: usize) -> Block2x2 {
    make_block(s.pd(n), CMatrix::zeros(n, n), s.pd(n)).expect("square conformal blocks")
}

fn run_gm_blocks(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let n = cx.dim;
    let t = cx.sampler.ginibre(n);
    let (pad1, pad2) = (pd_padding(&mut cx.sampler, n), pd_padding(&mut cx.sampler, n));
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        let blocks = shared(&spectra).and_then(|s| {
            let base = factor_pair_block_from(&t, s, pair, tol)?;
            Ok((base.add(&pad1)?, base.add(&pad2)?))
        });
        let evals = shared(&blocks).and_then(|(b1, b2)| ck::gm_blocks(b1, b2, &fs, tol));
        cx.record_each(&fs, Some(pair), None, evals);
        let psd = shared(&blocks).and_then(|(b1, b2)| ck::gm_blocks_psd(b1, b2, tol));
        cx.record(Some(pair), Some("block"), psd);
    }
}

fn run_offblock(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let n = cx.dim;
    let m = cx.sampler.psd(2 * n);
    let evals = Block2x2::from_assembled(&m, n).and_then(|b| ck::offblock(&b, &fs, tol));
    cx.record_each(&fs, None, None, evals);
}

fn run_real_part_block(cx: &mut TrialContext) {
    let (tol, fs) = (cx.tol, cx.functionals());
    let t = cx.sampler.ginibre(cx.dim);
    let normal = cx.sampler.normal(cx.dim);
    let h = cx.sampler.hermitian(cx.dim);
    for bound in [RealPartBound::UnitShift, RealPartBound::PolarSum] {
        cx.record_each(&fs, None, Some(bound.name()), ck::real_part_block(&t, bound, &fs, tol));
    }
    let bound = RealPartBound::Normal;
    cx.record_each(&fs, None, Some(bound.name()), ck::real_part_block(&normal, bound, &fs, tol));
    cx.record_each(&fs, None, Some("selfadjoint"), ck::self_adjoint_block(&h, &fs, tol));
}

fn run_vector_cs(cx: &mut TrialContext) {
    let n = cx.dim;
    let t = cx.sampler.psd(n);
    let (x, y) = (cx.sampler.vector(n), cx.sampler.vector(n));
    cx.record(None, None, Ok(ck::vector_cs(&t, &x, &y)));
}

fn run_pinched_block_cs(cx: &mut TrialContext) {
    let n = cx.dim;
    let m = cx.sampler.psd(2 * n);
    let (x, y) = (cx.sampler.vector(n), cx.sampler.vector(n));
    let r = Block2x2::from_assembled(&m, n).and_then(|b| ck::pinched_block_cs(&b, &x, &y, cx.tol));
    cx.record(None, None, r);
}

fn run_pinched_factor_cs(cx: &mut TrialContext) {
    let (n, tol) = (cx.dim, cx.tol);
    let t = cx.sampler.ginibre(n);
    let (x, y) = (cx.sampler.vector(n), cx.sampler.vector(n));
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        let r = shared(&spectra).and_then(|s| ck::pinched_factor_cs(&t, s, pair, &x, &y, tol));
        cx.record(Some(pair), None, r);
        let r = shared(&spectra).and_then(|s| ck::pinched_factor_cs(&t, s, pair, &x, &x, tol));
        cx.record(Some(pair), Some("diag"), r);
    }
}

fn run_norm_real_part(cx: &mut TrialContext) {
    let (n, tol) = (cx.dim, cx.tol);
    let t = cx.sampler.ginibre(n);
    let p = cx.sampler.psd(n);
    let spectra = PolarSpectra::new(&t, tol);
    let psd_spectra = PolarSpectra::new(&p, tol);
    for pair in cx.pairs() {
        let r = shared(&spectra).and_then(|s| ck::norm_real_part(&t, s, pair, tol));
        cx.record(Some(pair), None, r);
        let r = shared(&psd_spectra).and_then(|s| ck::norm_real_part(&p, s, pair, tol));
        cx.record(Some(pair), Some("psd"), r);
    }
    let r = shared(&spectra).and_then(|s| ck::norm_real_part_quarter(&t, s, tol));
    cx.record(None, Some("quarter"), r);
}

fn run_cartesian_vector_cs(cx: &mut TrialContext) {
    let (n, tol) = (cx.dim, cx.tol);
    let t = cx.sampler.ginibre(n);
    let (a, b) = (cx.sampler.ginibre(n), cx.sampler.ginibre(n));
    let (x, y) = (cx.sampler.vector(n), cx.sampler.vector(n));
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        for part in [Part::Real, Part::Imaginary] {
            let r = shared(&spectra).and_then(|s| ck::cartesian_vector_cs(&t, s, part, pair, &x, &y, tol));
            cx.record(Some(pair), Some(part.name()), r);
        }
        cx.record(Some(pair), Some("sum"), ck::sum_vector_cs(&a, &b, pair, &x, &y, tol));
    }
}

fn run_cartesian_blocks(cx: &mut TrialContext) {
    let tol = cx.tol;
    let t = cx.sampler.ginibre(cx.dim);
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        for which in [CartesianBlock::RealHalf, CartesianBlock::ImagHalf, CartesianBlock::Sum] {
            let r = shared(&spectra).and_then(|s| ck::cartesian_block(&t, s, which, pair, tol));
            cx.record(Some(pair), Some(which.name()), r);
        }
    }
}

fn run_cartesian_order(cx: &mut TrialContext) {
    let tol = cx.tol;
    let t = cx.sampler.ginibre(cx.dim);
    let spectra = PolarSpectra::new(&t, tol);
    for pair in cx.pairs() {
        for which in [CartesianOrder::SumMean, CartesianOrder::RealMean, CartesianOrder::ImagMean] {
            let r = shared(&spectra).and_then(|s| ck::cartesian_order(&t, s, which, pair, tol));
            cx.record(Some(pair), Some(which.name()), r);
        }
    }
    for which in [PolarOrder::Sum, PolarOrder::RealHalf, PolarOrder::ImagHalf] {
        let r = shared(&spectra).and_then(|s| ck::polar_order(&t, s, which, tol));
        cx.record(None, Some(which.name()), r);
    }
}
