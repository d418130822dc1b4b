mod oracle;

use std::f64::consts::{FRAC_1_PI, PI};

use airy_spectra::airy::{ai, airy_zero, airy_zero_seed, airy_zeros, derivative_polynomials, u};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn origin_values_match_gamma_formulas() {
    let a = ai(c(0.0, 0.0)).unwrap();
    let v = u(c(0.0, 0.0)).unwrap();
    let ai0 = 1.0 / (3f64.powf(2.0 / 3.0) * oracle::gamma(2.0 / 3.0));
    let aip0 = -1.0 / (3f64.cbrt() * oracle::gamma(1.0 / 3.0));
    let up0 = 2.0 * 3f64.powf(1.0 / 6.0) / oracle::gamma(1.0 / 3.0);
    for (got, lanczos, digits) in [
        (a.value.re, ai0, oracle::AI_0_DIGITS),
        (a.derivative.re, aip0, oracle::AI_PRIME_0_DIGITS),
        (v.derivative.re, up0, oracle::U_PRIME_0_DIGITS),
    ] {
        let want = oracle::parse(digits);
        assert!((lanczos / want - 1.0).abs() < 1e-13);
        assert!((got / want - 1.0).abs() < 1e-15, "{got} vs {want}");
    }
    assert_eq!(v.value, c(0.0, 0.0));
}

#[test]
fn first_zero_agrees_with_bisection() {
    let t1 = airy_zero(1).unwrap();
    let b = oracle::bisect_zero(2.0, 2.5);
    assert!((t1 - b).abs() < 1e-12, "{t1} vs {b}");
    assert!((airy_zero_seed(1) - 2.320251).abs() < 1e-6);
    assert!(ai(c(-2.338107410459767, 0.0)).unwrap().value.norm() < 1e-15);
}

#[test]
fn zeros_increase_and_vanish() {
    let t = airy_zeros(60).unwrap();
    for w in t.windows(2) {
        assert!(w[1] > w[0]);
    }
    for (k, &tk) in t.iter().enumerate() {
        let v = ai(c(-tk, 0.0)).unwrap();
        assert!(v.value.norm() <= 1e-12 * v.derivative.norm(), "k = {}", k + 1);
        let d = (tk - airy_zero_seed(k + 1)).abs();
        assert!(d <= 0.5 * ((k + 1) as f64).powf(-4.0 / 3.0));
    }
    assert!(airy_zero(0).is_err());
}

#[test]
fn wronskian_absolute_on_disk_of_radius_10() {
    let mut worst: f64 = 0.0;
    for z in oracle::disk_points(200, 10.0, 11) {
        let a = ai(z).unwrap();
        let v = u(z).unwrap();
        let w = a.value * v.derivative - a.derivative * v.value;
        worst = worst.max((w - FRAC_1_PI).norm());
    }
    assert!(worst <= 1e-10, "worst |W - 1/pi| = {worst:e}");
}

#[test]
fn wronskian_relative_to_product_size() {
    for z in oracle::disk_points(200, 10.0, 11) {
        let a = ai(z).unwrap();
        let v = u(z).unwrap();
        let p = a.value * v.derivative;
        let q = a.derivative * v.value;
        let err = (p - q - FRAC_1_PI).norm();
        assert!(err <= 1e-13 * (p.norm() + q.norm()).max(1.0), "z = {z}: {err:e}");
        if z.arg().abs() < PI / 3.0 {
            assert!(err <= 1e-10, "z = {z}: {err:e}");
        }
    }
}

#[test]
fn oscillatory_regime() {
    for i in 0..=2500 {
        let x = 5.0 + 25.0 * i as f64 / 2500.0;
        let v = ai(c(-x, 0.0)).unwrap().value.re;
        let approx = x.powf(-0.25) / PI.sqrt() * ((2.0 / 3.0) * x.powf(1.5) + PI / 4.0).sin();
        assert!(
            (v - approx).abs() <= 0.05 * x.powf(-1.75),
            "x = {x}: |diff| x^(7/4) = {}",
            (v - approx).abs() * x.powf(1.75)
        );
    }
}

#[test]
fn real_axis_matches_power_series() {
    for i in 0..=80 {
        let x = -5.0 + 0.1 * i as f64;
        let v = ai(c(x, 0.0)).unwrap();
        let (s, sp) = oracle::ai_series(x);
        assert_eq!(v.value.im, 0.0);
        assert!((v.value.re - s).abs() < 1e-13 && (v.derivative.re - sp).abs() < 1e-13, "x = {x}");
    }
}

#[test]
fn derivative_polynomial_examples() {
    let p = derivative_polynomials(4).unwrap();
    assert_eq!((p.p_coeffs.clone(), p.q_coeffs.clone()), (vec![0, 0, 1], vec![2]));
    let p = derivative_polynomials(0).unwrap();
    assert_eq!((p.p_coeffs.clone(), p.q_coeffs.clone()), (vec![1], vec![0]));
    let p = derivative_polynomials(6).unwrap();
    assert_eq!((p.p_coeffs.clone(), p.q_coeffs.clone()), (vec![4, 0, 0, 1], vec![0, 6]));
}

#[test]
fn derivative_polynomials_reproduce_higher_derivatives() {
    for n in 0..=12 {
        let pair = derivative_polynomials(n).unwrap();
        for j in 0..20 {
            let t = -3.0 + 6.0 * j as f64 / 19.0;
            let (a, ap) = oracle::ai_series(t);
            let want = oracle::ai_derivatives(t, a, ap, n)[n];
            let got = pair.eval_p(t) * a + pair.eval_q(t) * ap;
            assert!((got - want).abs() <= 1e-6, "n = {n}, t = {t}");
        }
    }
}

#[test]
fn derivative_polynomial_degrees() {
    for m in 2..=30 {
        let even = derivative_polynomials(2 * m).unwrap();
        let odd = derivative_polynomials(2 * m + 1).unwrap();
        assert_eq!(even.p_degree(), Some(m));
        assert_eq!(even.q_degree(), Some(m - 2));
        assert_eq!(odd.p_degree(), Some(m - 1));
        assert_eq!(odd.q_degree(), Some(m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ode_residual(r in 0.0f64..5.0, theta in -PI..PI) {
        let z = Complex64::from_polar(r, theta);
        let h = 1e-4;
        let f = |w: Complex64| ai(w).unwrap().value;
        let d2 = (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
        prop_assert!((d2 - z * f(z)).norm() <= 1e-5, "z = {}: {:e}", z, (d2 - z * f(z)).norm());
    }

    #[test]
    fn conjugation_symmetry(re in -30.0f64..30.0, im in -30.0f64..30.0) {
        let z = c(re, im);
        let a = ai(z).unwrap();
        let b = ai(z.conj()).unwrap();
        prop_assert!((a.value.conj() - b.value).norm() <= 1e-14 * a.value.norm().max(1e-300));
        let v = u(z).unwrap();
        let w = u(z.conj()).unwrap();
        prop_assert!((v.value.conj() - w.value).norm() <= 1e-14 * v.value.norm().max(1e-300));
    }

    #[test]
    fn three_fold_identity(r in 0.0f64..12.0, theta in -PI..PI) {
        let z = Complex64::from_polar(r, theta);
        let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let terms = [ai(z).unwrap().value, w * ai(w * z).unwrap().value, w * w * ai(w * w * z).unwrap().value];
        let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
        prop_assert!((terms[0] + terms[1] + terms[2]).norm() <= 1e-13 * scale.max(1.0));
    }
}
