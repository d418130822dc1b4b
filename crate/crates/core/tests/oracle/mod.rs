//! Reference computations that share no code with the library.

#![allow(dead_code)]

use num_complex::Complex64;

/// `Ai(0) = 1 / (3^{2/3} Gamma(2/3))` to 40 digits.
pub const AI_0_DIGITS: &str = "0.3550280538878172392600631860041831763980";
/// `Ai'(0) = -1 / (3^{1/3} Gamma(1/3))` to 40 digits.
pub const AI_PRIME_0_DIGITS: &str = "-0.2588194037928067984051835601892039634791";
/// `U'(0) = 2 3^{1/6} / Gamma(1/3)` to 40 digits.
pub const U_PRIME_0_DIGITS: &str = "0.8965767147076528123346049063052052419600";

pub fn parse(digits: &str) -> f64 {
    digits.parse().unwrap()
}

/// Lanczos approximation (g = 7, n = 9), about 15 digits for `x > 0`.
pub fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const P: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = P[0];
    let t = x + G + 0.5;
    for (i, p) in P.iter().enumerate().skip(1) {
        a += p / (x + i as f64);
    }
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// `(Ai(x), Ai'(x))` for real `x` from the plain power series; reliable for
/// `x` in `[-5, 3]`.
pub fn ai_series(x: f64) -> (f64, f64) {
    let c1 = parse(AI_0_DIGITS);
    let c2 = -parse(AI_PRIME_0_DIGITS);
    // f = sum x^{3k} / ((2.3)(5.6)...), g = sum x^{3k+1} / ((3.4)(6.7)...)
    let (mut f, mut g, mut fp, mut gp) = (1.0, x, 0.0, 1.0);
    let (mut tf, mut tg) = (1.0, x);
    let x3 = x * x * x;
    for k in 1..200 {
        let k3 = 3.0 * k as f64;
        tf *= x3 / ((k3 - 1.0) * k3);
        tg *= x3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        fp += k3 * tf / x;
        gp += (k3 + 1.0) * tg / x;
        if tf.abs() + tg.abs() < 1e-20 * (f.abs() + g.abs()) {
            break;
        }
    }
    if x == 0.0 {
        fp = 0.0;
        gp = 1.0;
    }
    (c1 * f - c2 * g, c1 * fp - c2 * gp)
}

/// Root of `Ai(-t)` in `[a, b]` by bisection on the power series.
pub fn bisect_zero(mut a: f64, mut b: f64) -> f64 {
    let f = |t: f64| ai_series(-t).0;
    let fa = f(a);
    assert!(fa * f(b) < 0.0, "no sign change in [{a}, {b}]");
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        if f(m) * fa > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// `[Ai(t), Ai'(t), ..., Ai^{(n)}(t)]` from `Ai'' = t Ai` differentiated
/// repeatedly: `Ai^{(k+2)} = t Ai^{(k)} + k Ai^{(k-1)}`.
pub fn ai_derivatives(t: f64, ai: f64, aip: f64, n: usize) -> Vec<f64> {
    let mut d = vec![ai, aip];
    for k in 0..n.saturating_sub(1) {
        let prev = if k == 0 { 0.0 } else { d[k - 1] };
        d.push(t * d[k] + k as f64 * prev);
    }
    d.truncate(n + 1);
    d
}

/// Fourth-order central second difference.
pub fn second_difference(f: impl Fn(f64) -> Complex64, x: f64, h: f64) -> Complex64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h)
}

/// `y0 = x e^{-x^2}` and `L_c y0 = -(4x^3 - 6x) e^{-x^2} + c x^2 e^{-x^2}`.
pub fn gauss_pair(c: Complex64) -> (impl Fn(f64) -> Complex64, impl Fn(f64) -> Complex64) {
    let y0 = |x: f64| Complex64::new(x * (-x * x).exp(), 0.0);
    let f = move |x: f64| {
        let e = (-x * x).exp();
        Complex64::new(-(4.0 * x * x * x - 6.0 * x) * e, 0.0) + c * (x * x * e)
    };
    (y0, f)
}

/// Distance from `lambda` to the closed sector between the rays `arg = lo`
/// and `arg = hi` (`hi - lo < pi`).
pub fn sector_distance(lambda: Complex64, lo: f64, hi: f64) -> f64 {
    let arg = lambda.arg();
    if arg >= lo && arg <= hi {
        return 0.0;
    }
    let ray = |phi: f64| {
        let d = Complex64::from_polar(1.0, phi);
        let proj = (lambda.re * d.re + lambda.im * d.im).max(0.0);
        (lambda - d * proj).norm()
    };
    ray(lo).min(ray(hi))
}

/// Deterministic uniform points in the disk `|z| <= r`.
pub fn disk_points(n: usize, r: f64, seed: u64) -> Vec<Complex64> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 11) as f64) / ((1u64 << 53) as f64)
    };
    (0..n)
        .map(|_| Complex64::from_polar(r * next().sqrt(), std::f64::consts::TAU * next() - std::f64::consts::PI))
        .collect()
}
