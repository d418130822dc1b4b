//! Acceptance suite. Each test prints one `PASS`/`FAIL` line and then asserts.

mod oracle;

use std::f64::consts::{FRAC_1_PI, PI};
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use airy_spectra::airy::{ai, airy_zero, airy_zero_seed, u};
use airy_spectra::completeness::{
    abel_beta_mid, abel_exponents, abel_sum, alpha0, completeness_verdict, eta, eval_f0, expand,
    orthogonalize_against_adjoint, zero_growth_ratio,
};
use airy_spectra::grid::{Grid, GridFunction};
use airy_spectra::operator::AiryOperator;
use airy_spectra::resolvent::{green_apply, resolvent_norm, sector_distance};
use airy_spectra::sources::RandomBumps;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn polar_op(gamma: f64) -> AiryOperator {
    AiryOperator::new(Complex64::from_polar(1.0, gamma)).unwrap()
}

/// Prints the verdict line and fails the test when a check or the time budget
/// was missed.
fn report(id: u32, name: &str, start: Instant, budget: Duration, failures: Vec<String>) {
    let elapsed = start.elapsed();
    let mut failures = failures;
    if elapsed > budget {
        failures.push(format!("took {elapsed:.2?}, budget {budget:.0?}"));
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    let detail = if failures.is_empty() { String::new() } else { format!(" :: {}", failures.join("; ")) };
    let line = format!("[criterion {id:>2}] {verdict} {name} ({elapsed:.2?}){detail}\n");
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(failures.is_empty(), "{}", line.trim_end());
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

#[test]
fn criterion_01_golden_origin_values() {
    let start = Instant::now();
    let mut f = Vec::new();
    let a = ai(c(0.0, 0.0)).unwrap();
    let v = u(c(0.0, 0.0)).unwrap();
    let lanczos = [
        1.0 / (3f64.powf(2.0 / 3.0) * oracle::gamma(2.0 / 3.0)),
        -1.0 / (3f64.cbrt() * oracle::gamma(1.0 / 3.0)),
        2.0 * 3f64.powf(1.0 / 6.0) / oracle::gamma(1.0 / 3.0),
    ];
    let digits = [oracle::AI_0_DIGITS, oracle::AI_PRIME_0_DIGITS, oracle::U_PRIME_0_DIGITS];
    let got = [a.value, a.derivative, v.derivative];
    for ((name, g), (d, l)) in ["Ai(0)", "Ai'(0)", "U'(0)"].iter().zip(got).zip(digits.iter().zip(lanczos)) {
        let want = oracle::parse(d);
        check(&mut f, (l / want - 1.0).abs() <= 1e-13, || format!("{name}: oracles disagree"));
        let rel = (g - want).norm() / want.abs();
        check(&mut f, rel <= 1e-12, || format!("{name}: relative error {rel:e}"));
    }
    report(1, "Airy golden values at the origin", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_02_wronskian() {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut worst: f64 = 0.0;
    let mut misses = 0;
    for z in oracle::disk_points(200, 10.0, 2) {
        let a = ai(z).unwrap();
        let v = u(z).unwrap();
        let err = (a.value * v.derivative - a.derivative * v.value - FRAC_1_PI).norm();
        worst = worst.max(err);
        if err > 1e-10 {
            misses += 1;
        }
    }
    check(&mut f, misses == 0, || format!("{misses}/200 points exceed 1e-10, worst {worst:e}"));
    report(2, "Wronskian Ai U' - Ai' U = 1/pi on |z| <= 10", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_03_zero_asymptotics() {
    let start = Instant::now();
    let mut f = Vec::new();
    for k in 1..=50 {
        let t = airy_zero(k).unwrap();
        let d = (t - airy_zero_seed(k)).abs();
        let bound = 0.5 * (k as f64).powf(-4.0 / 3.0);
        check(&mut f, d <= bound, || format!("k = {k}: |delta| = {d:e} > {bound:e}"));
    }
    let t1 = airy_zero(1).unwrap();
    let b = oracle::bisect_zero(2.0, 2.5);
    check(&mut f, (t1 - b).abs() <= 1e-8, || format!("t1 = {t1} vs bisection {b}"));
    check(&mut f, (t1 - 2.338107410).abs() <= 1e-8, || format!("t1 = {t1}"));
    report(3, "Airy zero asymptotics and t1", start, Duration::from_secs(5), f);
}

#[test]
fn criterion_04_green_identity() {
    let start = Instant::now();
    let mut f = Vec::new();
    for op in [polar_op(0.0), polar_op(PI / 2.0), polar_op(2.0 * PI / 5.0)] {
        let x_max = op.truncation_for_shift(c(0.0, 0.0)).max(14.0);
        let grid = Arc::new(Grid::with_node_count(x_max, 2000, 16).unwrap());
        for seed in 100..110 {
            let bumps = RandomBumps::new(seed, 8.0);
            let src = GridFunction::sample(grid.clone(), |x| bumps.eval(x));
            let sol = green_apply(&op, &src).unwrap();
            let d2 = sol.dy.derivative();
            let back: Vec<Complex64> = grid
                .nodes()
                .iter()
                .zip(sol.y.values().iter().zip(d2.values()))
                .map(|(&x, (y, d))| -d + op.c() * x * y)
                .collect();
            let back = GridFunction::new(grid.clone(), back).unwrap();
            let err = back.axpy(c(-1.0, 0.0), &src).norm() / src.norm();
            check(&mut f, err <= 1e-4, || format!("c = {}, seed {seed}: {err:e}", op.c()));
            let y0 = sol.y.interpolate(0.0).norm();
            check(&mut f, y0 <= 1e-10 * sol.y.sup_norm(), || format!("c = {}: y(0) = {y0:e}", op.c()));
            let tail = (x_max.sqrt() * sol.y.interpolate(x_max).norm()).max(sol.dy.interpolate(x_max).norm());
            check(&mut f, tail <= 1e-6 * src.norm(), || format!("c = {}: tail {tail:e}", op.c()));
        }
    }
    report(4, "Green identity L_c(L_c^-1 f) = f", start, Duration::from_secs(60), f);
}

#[test]
fn criterion_05_eigen_residuals_and_biorthogonality() {
    let start = Instant::now();
    let mut f = Vec::new();
    let op = polar_op(PI / 2.0);
    let grid = op.grid_for_modes(8).unwrap();
    for n in 1..=8 {
        let mode = op.eigenmode(n).unwrap();
        let lambda = op.eigenvalue(n).unwrap();
        let r: Vec<Complex64> = grid
            .nodes()
            .iter()
            .map(|&x| -oracle::second_difference(|s| mode.eval(s), x, 1e-3) + (op.c() * x - lambda) * mode.eval(x))
            .collect();
        let res = grid.norm(&r) / mode.sample(&grid).norm();
        check(&mut f, res <= 1e-5, || format!("n = {n}: residual {res:e}"));
    }
    let cn: Vec<f64> = (1..=8).map(|n| op.biorth_constant(n, &grid).unwrap().norm()).collect();
    for n in 1..=8 {
        for k in 1..=8 {
            if n != k {
                let p = op.biorth_pairing(n, k, &grid).unwrap().norm();
                let scale = cn[n - 1].max(cn[k - 1]);
                check(&mut f, p <= 1e-8 * scale, || format!("({n}, {k}): {p:e}"));
            }
        }
    }
    let t1 = oracle::bisect_zero(2.0, 2.5);
    let d = oracle::ai_series(-t1).1;
    let want = d * d / Complex64::from_polar(1.0, PI / 6.0);
    let got = op.biorth_constant(1, &grid).unwrap();
    let rel = (got - want).norm() / want.norm();
    check(&mut f, rel <= 1e-6, || format!("c1 = {got} vs {want}"));
    report(5, "eigen-residuals and biorthogonality at c = i", start, Duration::from_secs(30), f);
}

#[test]
fn criterion_06_resolvent_bound() {
    let start = Instant::now();
    let mut f = Vec::new();
    let op = polar_op(PI / 2.0);
    let mut count = 0;
    for theta in [0.7, 0.9, 1.1, 1.4, 1.8] {
        for r in [1.0, 2.0, 4.0, 8.0, 16.0] {
            let lambda = Complex64::from_polar(r, theta * PI);
            let d = sector_distance(&op, lambda);
            let d_oracle = oracle::sector_distance(lambda, 0.0, PI / 2.0);
            check(&mut f, (d - d_oracle).abs() <= 1e-12 && d >= 0.5, || format!("{lambda}: dist {d}"));
            let v = resolvent_norm(&op, lambda, 512).unwrap();
            check(&mut f, v * d <= 1.05, || format!("{lambda}: norm * dist = {}", v * d));
            count += 1;
        }
    }
    check(&mut f, count == 25, || format!("{count} points"));
    let t1 = oracle::bisect_zero(2.0, 2.5);
    let v = resolvent_norm(&polar_op(0.0), c(-1.0, 0.0), 512).unwrap();
    let rel = (v * (t1 + 1.0) - 1.0).abs();
    check(&mut f, rel <= 0.01, || format!("c = 1: norm {v} vs {}", 1.0 / (t1 + 1.0)));
    report(6, "resolvent bound and self-adjoint norm", start, Duration::from_secs(120), f);
}

#[test]
fn criterion_07_sector_geometry() {
    let start = Instant::now();
    let mut f = Vec::new();
    for i in 0..50 {
        let g = 2.0 * PI / 3.0 + (PI / 3.0) * i as f64 / 50.0;
        let ends = (eta(g, 0.0).unwrap(), eta(g, g / 3.0).unwrap());
        check(&mut f, ends.0 > 0.0 && ends.1 < 0.0, || format!("gamma = {g}: endpoints {ends:?}"));
        let vals: Vec<f64> = (0..100).map(|j| eta(g, (j as f64 / 99.0) * (g / 3.0)).unwrap()).collect();
        check(&mut f, vals.windows(2).all(|w| w[1] < w[0]), || format!("gamma = {g}: not decreasing"));
    }
    let a = alpha0(5.0 * PI / 6.0).unwrap();
    check(&mut f, (a - PI / 9.0).abs() <= 1e-8, || format!("alpha0(5pi/6) = {a}"));
    for i in 0..200 {
        let g = 0.01 + (PI - 0.02) * i as f64 / 199.0;
        let v = completeness_verdict(g).unwrap();
        check(&mut f, v.threshold_ok == (g < 5.0 * PI / 6.0), || format!("gamma = {g}"));
        if let Some(a) = v.alpha0 {
            let chain = a + 2.0 * g / 3.0 < 2.0 * PI / 3.0;
            check(&mut f, chain == v.threshold_ok, || format!("gamma = {g}: chain {chain}"));
        }
    }
    report(7, "sector geometry and the 5pi/6 threshold", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_08_growth_law() {
    let start = Instant::now();
    let mut f = Vec::new();
    let r = zero_growth_ratio(50).unwrap();
    check(&mut f, (r - 1.0).abs() <= 0.01, || format!("ratio {r}"));
    report(8, "eigenvalue growth t_n ~ (3 pi n / 2)^(2/3)", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_09_abel_and_expansion() {
    let start = Instant::now();
    let mut f = Vec::new();
    let a_true = [c(1.0, 0.0), c(0.0, -1.0), c(0.5, 0.25), c(-0.3, 0.0), c(0.2, 0.4)];
    for gamma in [PI / 3.0, PI / 2.0] {
        let op = polar_op(gamma);
        let grid = op.grid_for_modes(8).unwrap();
        let modes: Vec<GridFunction> = (1..=5).map(|k| op.eigenmode(k).unwrap().sample(&grid)).collect();
        let mut span = GridFunction::zeros(grid.clone());
        for (a, y) in a_true.iter().zip(&modes) {
            span = span.axpy(*a / y.norm(), y);
        }
        let scale = span.norm();
        span = span.scaled(c(1.0 / scale, 0.0));
        let expected: Vec<_> = a_true.iter().zip(&modes).map(|(a, y)| a / (y.norm() * scale)).collect();
        let coeffs = expand(&op, &span, 5).unwrap().coeffs;
        let err = coeffs.iter().zip(&expected).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        check(&mut f, err <= 1e-6, || format!("gamma = {gamma}: coefficient error {err:e}"));

        let beta = abel_beta_mid(gamma).unwrap();
        let ex = abel_exponents(&op, beta, 50).unwrap();
        check(&mut f, ex.iter().all(|e| e.re < 0.0), || format!("gamma = {gamma}: exponent with Re >= 0"));
        let s = abel_sum(&op, &span, 1e-6, beta, 5).unwrap();
        let d = s.axpy(c(-1.0, 0.0), &span).norm();
        check(&mut f, d <= 1e-4, || format!("gamma = {gamma}: ||S - f|| = {d:e}"));
    }
    report(9, "expansion recovery and Abel summation", start, Duration::from_secs(60), f);
}

#[test]
fn criterion_10_certificate() {
    let start = Instant::now();
    let mut f = Vec::new();
    for gamma in [0.0, PI / 2.0, -PI / 4.0] {
        let op = polar_op(gamma);
        let grid = op.grid_for_modes(8).unwrap();
        for seed in [5, 6] {
            let bumps = RandomBumps::new(seed, 8.0);
            let src = GridFunction::sample(grid.clone(), |x| bumps.eval(x));
            let h = orthogonalize_against_adjoint(&op, &src, 6).unwrap();
            for k in 1..=6 {
                let w = c(-airy_zero(k).unwrap(), 0.0);
                let v = eval_f0(&op, &h, w).unwrap().norm();
                check(&mut f, v <= 1e-6 * h.norm(), || format!("gamma = {gamma}, k = {k}: {v:e}"));
            }
        }
    }
    report(10, "certificate F0(-t_k) = 0 on the orthogonal complement", start, Duration::from_secs(30), f);
}
