mod oracle;

use matrixcs::corpus::Sampler;
use matrixcs::linalg::{
    apply_fn, herm_eig, is_psd, loewner_leq, polar_parts, singular_values, sqrtm, svd, CMatrix,
};
use matrixcs::{Complex64, Error, ToleranceConfig};
use proptest::prelude::*;

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn real(rows: usize, cols: usize, v: &[f64]) -> CMatrix {
    CMatrix::from_real(rows, cols, v).unwrap()
}

fn nilpotent() -> CMatrix {
    real(3, 3, &[0., 1., 0., 0., 0., 1., 0., 0., 0.])
}

fn assert_values(got: &[f64], want: &[f64], eps: f64) {
    assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= eps, "{got:?} vs {want:?}");
    }
}

fn recon_tol(m: &CMatrix) -> f64 {
    1e-10 * (1.0 + m.frobenius_norm())
}

#[test]
fn eig_identity() {
    let e = herm_eig(&CMatrix::identity(3), &tol()).unwrap();
    assert_values(&e.eigenvalues, &[1.0, 1.0, 1.0], 1e-15);
}

#[test]
fn eig_swap() {
    let e = herm_eig(&real(2, 2, &[0., 1., 1., 0.]), &tol()).unwrap();
    assert_values(&e.eigenvalues, &[1.0, -1.0], 1e-15);
}

#[test]
fn eig_nilpotent_real_sum() {
    let t = nilpotent();
    let e = herm_eig(&(&t + &t.adjoint()), &tol()).unwrap();
    let mut mags: Vec<f64> = e.eigenvalues.iter().map(|l| l.abs()).collect();
    mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let r2 = std::f64::consts::SQRT_2;
    assert_values(&mags, &[r2, r2, 0.0], 1e-12);
}

#[test]
fn eig_rejects_bad_input() {
    assert!(matches!(herm_eig(&CMatrix::zeros(2, 3), &tol()), Err(Error::NotSquare { .. })));
    assert!(matches!(herm_eig(&nilpotent(), &tol()), Err(Error::NotHermitian { .. })));
}

#[test]
fn svd_zero() {
    let d = svd(&CMatrix::zeros(3, 3), &tol()).unwrap();
    assert_values(&d.singular_values, &[0.0; 3], 0.0);
    assert!(d.left.unitarity_defect() <= 1e-12 && d.right.unitarity_defect() <= 1e-12);
}

#[test]
fn svd_polar_sum_of_nilpotent() {
    let p = polar_parts(&nilpotent(), &tol()).unwrap();
    let s = singular_values(&(&p.abs_t + &p.abs_tstar), &tol()).unwrap();
    assert_values(&s, &[2.0, 1.0, 1.0], 1e-12);
}

#[test]
fn svd_matches_char_poly_roots() {
    let mut rng = Sampler::new(11);
    for _ in 0..20 {
        let g = rng.ginibre(4);
        let mut want: Vec<f64> =
            oracle::eigenvalues(&g.adjoint_mul(&g)).iter().map(|z| z.re.max(0.0).sqrt()).collect();
        want.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let got = svd(&g, &tol()).unwrap().singular_values;
        assert_values(&got, &want, 1e-10);
    }
}

#[test]
fn svd_rectangular_reconstructs() {
    let mut rng = Sampler::new(3);
    let g = rng.ginibre(5).sub_block(0, 0, 5, 3);
    let d = svd(&g, &tol()).unwrap();
    assert_eq!(d.singular_values.len(), 3);
    assert!(d.reconstruct().max_abs_diff(&g) <= recon_tol(&g));
    let wide = g.adjoint();
    let d = svd(&wide, &tol()).unwrap();
    assert!(d.reconstruct().max_abs_diff(&wide) <= recon_tol(&wide));
}

#[test]
fn svd_rank_deficient_completes_basis() {
    let mut rng = Sampler::new(5);
    let v = CMatrix::column(&rng.vector(4));
    let rank_one = v.mul_adjoint(&v);
    let d = svd(&rank_one, &tol()).unwrap();
    assert!(d.left.unitarity_defect() <= 1e-10);
    assert!(d.right.unitarity_defect() <= 1e-10);
    assert!(d.reconstruct().max_abs_diff(&rank_one) <= recon_tol(&rank_one));
    assert_eq!(d.rank(), 1);
}

#[test]
fn apply_identity_function() {
    let a = Sampler::new(1).psd(4);
    assert!(apply_fn(&a, |t| t, &tol()).unwrap().max_abs_diff(&a) <= recon_tol(&a));
}

#[test]
fn apply_sqrt_diagonal() {
    let a = CMatrix::from_real_diag(&[0.0, 1.0, 4.0]);
    let r = sqrtm(&a, &tol()).unwrap();
    assert!(r.max_abs_diff(&CMatrix::from_real_diag(&[0.0, 1.0, 2.0])) <= 1e-15);
}

#[test]
fn apply_fractional_power_matches_double_double() {
    let mut rng = Sampler::new(2024);
    for _ in 0..25 {
        let g = rng.ginibre(3);
        let wishart = g.adjoint_mul(&g).hermitian_part();
        let got = apply_fn(&wishart, |t| t.powf(0.3), &tol()).unwrap();
        let want = oracle::psd_fn(&wishart, |x| oracle::nonnegative_pow(x, 0.3));
        let diff = got.max_abs_diff(&want);
        assert!(diff <= 1e-11, "entrywise difference {diff:e}");
    }
}

#[test]
fn apply_rejects_indefinite() {
    let h = real(2, 2, &[1., 2., 2., 1.]);
    assert!(matches!(apply_fn(&h, f64::sqrt, &tol()), Err(Error::NotPsd { .. })));
}

#[test]
fn apply_clamps_roundoff_negatives() {
    let v = CMatrix::column(&[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)]);
    let mut m = v.mul_adjoint(&v);
    m[(0, 0)] -= Complex64::new(1e-14, 0.0);
    let r = sqrtm(&m, &tol()).unwrap();
    assert!(r.data().iter().all(|z| z.re.is_finite()));
}

#[test]
fn polar_of_nilpotent() {
    let p = polar_parts(&nilpotent(), &tol()).unwrap();
    assert!((&p.abs_t + &p.abs_tstar).max_abs_diff(&CMatrix::from_real_diag(&[1.0, 2.0, 1.0])) <= 1e-12);
    let t = nilpotent();
    assert_eq!(&t + &t.adjoint(), real(3, 3, &[0., 1., 0., 1., 0., 1., 0., 1., 0.]));
}

#[test]
fn polar_of_psd() {
    let a = Sampler::new(8).pd(3);
    let p = polar_parts(&a, &tol()).unwrap();
    assert!(p.re_t.max_abs_diff(&a) <= 1e-14);
    assert!(p.im_t.max_abs() <= 1e-14);
    assert!(p.abs_t.max_abs_diff(&a) <= 1e-10);
    assert!(p.abs_tstar.max_abs_diff(&a) <= 1e-10);
}

#[test]
fn polar_of_imaginary_unit() {
    let t = CMatrix::identity(3).scale(Complex64::new(0.0, 1.0));
    let p = polar_parts(&t, &tol()).unwrap();
    assert!(p.re_t.max_abs() <= 1e-15);
    assert!(p.im_t.max_abs_diff(&CMatrix::identity(3)) <= 1e-15);
    assert!(p.abs_t.max_abs_diff(&CMatrix::identity(3)) <= 1e-14);
}

#[test]
fn polar_matches_oracle_and_reconstructs() {
    let mut rng = Sampler::new(99);
    for _ in 0..10 {
        let t = rng.ginibre(4);
        let p = polar_parts(&t, &tol()).unwrap();
        let (abs, abs_star) = oracle::polar(&t);
        assert!(p.abs_t.max_abs_diff(&abs) <= 1e-10);
        assert!(p.abs_tstar.max_abs_diff(&abs_star) <= 1e-10);
        let back = &p.re_t + &p.im_t.scale(Complex64::new(0.0, 1.0));
        assert!(back.max_abs_diff(&t) <= recon_tol(&t));
        assert!(is_psd(&p.abs_t, &tol()).unwrap().holds);
        assert!(is_psd(&p.abs_tstar, &tol()).unwrap().holds);
        let (u, v) = (herm_eig(&p.abs_t, &tol()).unwrap(), herm_eig(&p.abs_tstar, &tol()).unwrap());
        assert_values(&u.eigenvalues, &v.eigenvalues, 1e-10);
    }
}

#[test]
fn psd_identity_and_indefinite() {
    assert!(is_psd(&CMatrix::identity(3), &tol()).unwrap().holds);
    let w = is_psd(&real(2, 2, &[1., 2., 2., 1.]), &tol()).unwrap();
    assert!(!w.holds);
    assert!((w.lambda_min + 1.0).abs() <= 1e-14);
    let h = real(2, 2, &[1., 2., 2., 1.]);
    let x = h.apply(&w.eigenvector);
    for (a, b) in x.iter().zip(&w.eigenvector) {
        assert!((a + b).norm() <= 1e-13);
    }
}

#[test]
fn psd_polar_block() {
    let mut rng = Sampler::new(4);
    for _ in 0..10 {
        let t = rng.ginibre(4);
        let p = polar_parts(&t, &tol()).unwrap();
        let m = CMatrix::from_blocks(&p.abs_t, &t.adjoint(), &t, &p.abs_tstar).unwrap();
        let w = is_psd(&m, &tol()).unwrap();
        assert!(w.holds, "lambda_min {}", w.lambda_min);
        assert!(oracle::lambda_min(&m) >= -1e-12);
    }
}

#[test]
fn psd_rejects_non_hermitian() {
    assert!(matches!(is_psd(&nilpotent(), &tol()), Err(Error::NotHermitian { .. })));
}

#[test]
fn loewner_basic() {
    let z = CMatrix::zeros(3, 3);
    assert!(loewner_leq(&z, &CMatrix::identity(3), &tol()).unwrap().holds);
    assert!(!loewner_leq(&CMatrix::identity(3), &z, &tol()).unwrap().holds);
    assert!(matches!(loewner_leq(&z, &CMatrix::identity(2), &tol()), Err(Error::ShapeMismatch(_))));
}

#[test]
fn loewner_real_part_against_polar_mean() {
    let mut rng = Sampler::new(17);
    for _ in 0..50 {
        let t = rng.ginibre(4);
        let p = polar_parts(&t, &tol()).unwrap();
        let half = (&p.abs_t + &p.abs_tstar).scale_real(0.5);
        assert!(loewner_leq(&p.re_t, &half, &tol()).unwrap().holds);
        assert!(loewner_leq(&(-&p.re_t), &half, &tol()).unwrap().holds);
    }
}

#[test]
fn loewner_fails_for_modulus_of_real_part() {
    let t = nilpotent();
    let p = polar_parts(&t, &tol()).unwrap();
    let half = (&p.abs_t + &p.abs_tstar).scale_real(0.5);
    let abs_re = apply_fn(&p.re_t.adjoint_mul(&p.re_t), f64::sqrt, &tol()).unwrap();
    let w = loewner_leq(&abs_re, &half, &tol()).unwrap();
    assert!(!w.holds);
    // Eigenvalues of (|T| + |T*| - |T + T*|)/2 from a direct solve.
    let want = oracle::lambda_min(&(&half - &abs_re));
    assert!((w.lambda_min - want).abs() <= 1e-12);
    assert!((w.lambda_min - (1.0 - std::f64::consts::SQRT_2) / 2.0).abs() <= 1e-12);
}

#[test]
fn reconstructs_up_to_32() {
    let mut rng = Sampler::new(32);
    for n in [2, 4, 8, 16, 32] {
        let h = rng.hermitian(n);
        let e = herm_eig(&h, &tol()).unwrap();
        assert!(e.reconstruct().max_abs_diff(&h) <= recon_tol(&h), "herm_eig n = {n}");
        assert!(e.basis.unitarity_defect() <= 1e-10);
        let g = rng.ginibre(n);
        let d = svd(&g, &tol()).unwrap();
        assert!(d.reconstruct().max_abs_diff(&g) <= recon_tol(&g), "svd n = {n}");
    }
}

#[test]
fn eigenvalues_match_double_double() {
    let mut rng = Sampler::new(6);
    for n in 2..=6 {
        let h = rng.hermitian(n);
        let mut got = herm_eig(&h, &tol()).unwrap().eigenvalues;
        got.reverse();
        assert_values(&got, &oracle::hermitian_eigenvalues(&h), 1e-12);
    }
}

#[test]
fn matrix_json_round_trip() {
    let m = Sampler::new(7).ginibre(3);
    let back = CMatrix::from_json(&m.to_json()).unwrap();
    assert_eq!(back, m);
    assert!(matches!(CMatrix::from_json("{\"rows\": 2}"), Err(Error::Parse(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn abs_spectrum_is_singular_spectrum(seed in any::<u64>(), n in 2usize..6) {
        let t = Sampler::new(seed).ginibre(n);
        let p = polar_parts(&t, &tol()).unwrap();
        let e = herm_eig(&p.abs_t, &tol()).unwrap();
        let s = singular_values(&t, &tol()).unwrap();
        for (a, b) in e.eigenvalues.iter().zip(&s) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn function_composition(seed in any::<u64>(), n in 2usize..6, p in 0.1f64..2.0, q in 0.1f64..2.0) {
        let a = Sampler::new(seed).pd(n);
        let inner = apply_fn(&a, |t| t.powf(q), &tol()).unwrap();
        let nested = apply_fn(&inner, |t| t.powf(p), &tol()).unwrap();
        let direct = apply_fn(&a, |t| t.powf(p * q), &tol()).unwrap();
        prop_assert!(nested.max_abs_diff(&direct) <= recon_tol(&direct) * 10.0);
    }

    #[test]
    fn psd_conjugation_invariance(seed in any::<u64>(), n in 2usize..6, indefinite in any::<bool>()) {
        let mut rng = Sampler::new(seed);
        let mut d: Vec<f64> = (0..n).map(|_| 0.1 + rng.uniform()).collect();
        if indefinite {
            d[0] = -0.5;
        }
        let basis = rng.unitary(n);
        let m = basis.matmul(&CMatrix::from_real_diag(&d)).mul_adjoint(&basis).hermitian_part();
        let u = rng.unitary(n);
        let conj = u.matmul(&m).mul_adjoint(&u).hermitian_part();
        let holds = is_psd(&m, &tol()).unwrap().holds;
        prop_assert_eq!(holds, !indefinite);
        prop_assert_eq!(holds, is_psd(&conj, &tol()).unwrap().holds);
    }
}

#[test]
fn polar_parts_stay_accurate_on_rank_deficient_input() {
    // |P| = |P*| = P for PSD P. Square roots of Gram eigenvalues would give
    // errors near sqrt(eps) here.
    let tol = ToleranceConfig::default();
    let mut s = Sampler::new(13);
    for n in 2..=6 {
        for _ in 0..20 {
            let p = s.psd(n);
            let spectra = matrixcs::linalg::PolarSpectra::new(&p, &tol).unwrap();
            let scale = 1.0 + p.frobenius_norm();
            let d1 = spectra.abs_fn(|x| x, &tol).unwrap().max_abs_diff(&p);
            let d2 = spectra.abs_star_fn(|x| x, &tol).unwrap().max_abs_diff(&p);
            assert!(d1 <= 1e-11 * scale && d2 <= 1e-11 * scale, "n {n}: {d1:e} {d2:e}");
        }
    }
}
