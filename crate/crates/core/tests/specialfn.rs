use approx::assert_relative_eq;
use num_complex::Complex64;
use proptest::prelude::*;

use rpt::specialfn::{gamma_ratio, jacobi_poly, terminating_2f1, HypergeometricParams};
use rpt::Error;

/// Independent closed form
/// `P_n^{(p,q)}(w) = (p+1)_n / n! · Σ_m C(n,m) (n+p+q+1)_m / (p+1)_m · ((w-1)/2)^m`.
fn jacobi_series(n: usize, p: f64, q: f64, w: Complex64) -> Complex64 {
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= (p + k as f64) / k as f64;
    }
    let t = (w - 1.0) / 2.0;
    let mut term = 1.0;
    let mut power = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 0..=n {
        if m > 0 {
            let mf = m as f64;
            term *= (n as f64 - mf + 1.0) / mf * (n as f64 + p + q + mf) / (p + mf);
            power *= t;
        }
        sum += power * term;
    }
    sum * lead
}

fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

#[test]
fn degree_zero_and_legendre() {
    let w = Complex64::new(-0.4, 2.2);
    assert_eq!(jacobi_poly(0, 3.7, -0.2, w), Complex64::new(1.0, 0.0));
    assert_relative_eq!((jacobi_poly(1, 0.0, 0.0, w) - w).norm(), 0.0, epsilon = 1e-15);
    // Legendre P_2 = (3w² - 1)/2
    let p2 = (w * w * 3.0 - 1.0) / 2.0;
    assert!(rel_err(jacobi_poly(2, 0.0, 0.0, w), p2) < 1e-14);
}

#[test]
fn jacobi_matches_series_with_mixed_signs() {
    let w = Complex64::new(0.7, -0.4);
    let got = jacobi_poly(3, 1.1, -2.3, w);
    assert!(rel_err(got, jacobi_series(3, 1.1, -2.3, w)) < 1e-12);
    // same value through the Gauss form
    let z = (w - 1.0) / 2.0;
    let via_2f1 = terminating_2f1(3, 3.0 + 1.0 + 1.1 - 2.3, 2.1, -z).unwrap() / gamma_ratio(3, 1.1).unwrap();
    assert!(rel_err(got, via_2f1) < 1e-12);
}

#[test]
fn terminating_sums_match_expanded_polynomials() {
    let w = Complex64::new(0.5, 0.5);
    assert_eq!(terminating_2f1(0, 9.0, -4.5, w).unwrap(), Complex64::new(1.0, 0.0));
    assert!(rel_err(terminating_2f1(1, 2.5, 1.5, w).unwrap(), 1.0 - w * (2.5 / 1.5)) < 1e-15);
    // ₂F₁(-2, 3; 2; w) = 1 - 3w + 2w²
    let expected = 1.0 - w * 3.0 + w * w * 2.0;
    assert!(rel_err(terminating_2f1(2, 3.0, 2.0, w).unwrap(), expected) < 1e-15);
}

#[test]
fn terminating_sum_rejects_lower_parameter_poles() {
    let w = Complex64::new(0.1, 0.0);
    assert!(matches!(terminating_2f1(3, 1.0, -1.0, w), Err(Error::PoleInLowerParameter { .. })));
    assert!(matches!(terminating_2f1(1, 1.0, 0.0, w), Err(Error::PoleInLowerParameter { .. })));
    // c = -2 is only hit from the third term on
    assert!(terminating_2f1(2, 1.0, -2.0, w).is_ok());
}

#[test]
fn gamma_ratio_exact_products() {
    assert_eq!(gamma_ratio(0, -3.3).unwrap(), 1.0);
    assert_relative_eq!(gamma_ratio(2, 1.0).unwrap(), 1.0 / 3.0, max_relative = 1e-15);
    // 24 / (0.3 · 1.3 · 2.3 · 3.3) = 240000 / 29601 exactly in rationals
    assert_relative_eq!(gamma_ratio(4, -0.7).unwrap(), 240000.0 / 29601.0, max_relative = 2e-15);
    assert!(matches!(gamma_ratio(3, -2.0), Err(Error::PoleInGammaRatio { .. })));
    assert!(gamma_ratio(1, -2.0).is_ok());
}

#[test]
fn hypergeometric_params_follow_state_labels() {
    let h = HypergeometricParams::new(1, -3.3, -1.1);
    assert_eq!(h.degree(), 1);
    assert_relative_eq!(h.c, 2.0 * h.mu + 0.5, epsilon = 1e-15);
    assert_relative_eq!(h.energy(), -1.96, max_relative = 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn jacobi_gauss_identity(
        n in 0usize..=8,
        p in -0.9f64..5.0,
        q in -0.9f64..5.0,
        r in 0.0f64..3.0,
        theta in 0.0f64..std::f64::consts::TAU,
    ) {
        let z = Complex64::from_polar(r, theta);
        let lhs = jacobi_poly(n, p, q, 1.0 + z * 2.0) * gamma_ratio(n, p).unwrap();
        let rhs = terminating_2f1(n, n as f64 + 1.0 + p + q, p + 1.0, -z).unwrap();
        prop_assert!(rel_err(lhs, rhs) < 1e-10, "n={n} p={p} q={q} z={z}: {lhs} vs {rhs}");
    }

    #[test]
    fn jacobi_matches_independent_series(
        n in 0usize..=10,
        p in -0.9f64..5.0,
        q in -0.9f64..5.0,
        re in -3.0f64..3.0,
        im in -3.0f64..3.0,
    ) {
        let w = Complex64::new(re, im);
        let got = jacobi_poly(n, p, q, w);
        let want = jacobi_series(n, p, q, w);
        let scale = jacobi_series(n, p, q, Complex64::new(1.0 + w.norm(), 0.0)).norm().max(1.0);
        prop_assert!((got - want).norm() <= 1e-11 * scale, "{got} vs {want}");
    }

    #[test]
    fn jacobi_has_exact_degree(n in 0usize..=6, p in -0.9f64..5.0, q in -0.9f64..5.0, x0 in -1.5f64..1.5) {
        // (n+1)-th forward difference of a degree-n polynomial vanishes
        let step = 0.25;
        let vals: Vec<f64> = (0..=n + 1)
            .map(|k| jacobi_poly(n, p, q, Complex64::new(x0 + k as f64 * step, 0.0)).re)
            .collect();
        let mut diff = vals.clone();
        for order in 1..=n + 1 {
            for k in 0..=n + 1 - order {
                diff[k] = diff[k + 1] - diff[k];
            }
        }
        let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs())) * 2f64.powi(n as i32 + 1);
        prop_assert!(diff[0].abs() <= 1e-12 * scale, "residual {} scale {scale}", diff[0]);
    }

    #[test]
    fn jacobi_conjugation(n in 0usize..=8, p in -0.9f64..5.0, q in -0.9f64..5.0, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let w = Complex64::new(re, im);
        let a = jacobi_poly(n, p, q, w.conj());
        let b = jacobi_poly(n, p, q, w).conj();
        prop_assert!((a - b).norm() <= 1e-14 * b.norm().max(1.0));
    }
}
