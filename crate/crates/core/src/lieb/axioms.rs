//! Sampled checks of the two defining properties of the Lieb class and of the
//! equivalent block condition.

use crate::corpus::{run, CheckId, CheckOutcome, Measure, RunConfig, TrialContext};
use crate::linalg::CMatrix;
use crate::{Result, ToleranceConfig};

use super::{LiebFunctional, MatrixProfile};

fn eval_re(p: &MatrixProfile, f: &LiebFunctional) -> Result<f64> {
    Ok(p.eval(f)?.re)
}

/// One trial of every axiom for the functionals in `cx`:
///
/// - `positivity`: `f(A) >= 0` for PSD `A`;
/// - `monotone`: `f(A) <= f(B)` for PSD `A <= B`;
/// - `cs`: `|f(A*B)|^2 <= f(A*A) f(B*B)`;
/// - `block`: `|f(C)|^2 <= f(A) f(B)` for PSD `[[A, C*], [C, B]]`.
pub fn lieb_axiom_trial(cx: &mut TrialContext) {
    let (n, tol, fs) = (cx.dim, cx.tol, cx.functionals());
    let a = cx.sampler.psd(n);
    let b = &a + &cx.sampler.psd(n);
    let (x, y) = (cx.sampler.ginibre(n), cx.sampler.ginibre(n));
    let m = cx.sampler.psd(2 * n);
    let (ba, bb, bc) = (m.sub_block(0, 0, n, n), m.sub_block(n, n, n, n), m.sub_block(n, 0, n, n));
    let xy = x.adjoint_mul(&y);
    let (xx, yy) = (x.adjoint_mul(&x).hermitian_part(), y.adjoint_mul(&y).hermitian_part());

    let mats: [&CMatrix; 8] = [&a, &b, &xy, &xx, &yy, &ba, &bb, &bc];
    let profiles: Result<Vec<MatrixProfile>> = mats.iter().map(|m| MatrixProfile::new(m, tol)).collect();
    let p = match profiles {
        Ok(p) => p,
        Err(e) => {
            for sub in ["positivity", "monotone", "cs", "block"] {
                cx.record_each(&fs, None, Some(sub), Err(e.clone()));
            }
            return;
        }
    };
    let per = |form: &dyn Fn(&LiebFunctional) -> Result<Measure>| Ok(fs.iter().map(form).collect());
    cx.record_each(&fs, None, Some("positivity"), per(&|f| Ok(Measure::new(0.0, eval_re(&p[0], f)?))));
    cx.record_each(&fs, None, Some("monotone"), per(&|f| Ok(Measure::new(eval_re(&p[0], f)?, eval_re(&p[1], f)?))));
    cx.record_each(
        &fs,
        None,
        Some("cs"),
        per(&|f| Ok(Measure::new(p[2].eval(f)?.norm_sqr(), eval_re(&p[3], f)? * eval_re(&p[4], f)?))),
    );
    cx.record_each(
        &fs,
        None,
        Some("block"),
        per(&|f| Ok(Measure::new(p[7].eval(f)?.norm_sqr(), eval_re(&p[5], f)? * eval_re(&p[6], f)?))),
    );
}

/// Samples the axioms for `f` over `trials` draws at each dimension.
pub fn check_lieb_axioms(
    f: LiebFunctional,
    trials: u64,
    dims: &[usize],
    seed: u64,
    tol: &ToleranceConfig,
) -> Vec<CheckOutcome> {
    let mut config = RunConfig::new(seed, trials, dims.to_vec());
    config.checks = vec![CheckId::LiebAxioms];
    config.functionals = vec![f];
    config.pairs = Vec::new();
    config.tol = *tol;
    run(&config).outcomes
}
