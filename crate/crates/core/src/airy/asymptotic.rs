//! Large-`|z|` branch: the Poincaré expansion of `Ai` in `|arg z| <= 2pi/3`,
//! and the three-fold connection `Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0`
//! (`w = e^{2pi i/3}`) for the remaining sector.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::ScaledPair;

/// Cap on correction terms in the expansion.
pub const MAX_TERMS: usize = 15;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// `e^{2 pi i / 3}`.
pub const OMEGA: Complex64 = Complex64::new(-0.5, 0.866_025_403_784_438_6);
/// `e^{-2 pi i / 3}`.
pub const OMEGA_BAR: Complex64 = Complex64::new(-0.5, -0.866_025_403_784_438_6);

/// `u_k` and `v_k` of the Airy expansion, `k = 0..=MAX_TERMS`.
fn coefficients() -> ([f64; MAX_TERMS + 1], [f64; MAX_TERMS + 1]) {
    let mut u = [0.0; MAX_TERMS + 1];
    let mut v = [0.0; MAX_TERMS + 1];
    u[0] = 1.0;
    v[0] = 1.0;
    for k in 1..=MAX_TERMS {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        v[k] = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u[k];
    }
    (u, v)
}

/// Sums `sum_k sign^k c_k zeta^{-k}` stopping at the first negligible or
/// growing term.
fn asymptotic_sum(coeffs: &[f64], inv_zeta: Complex64, alternate: bool) -> Complex64 {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for (k, &c) in coeffs.iter().enumerate().skip(1) {
        power *= inv_zeta;
        let mut term = power * c;
        if alternate && k % 2 == 1 {
            term = -term;
        }
        let mag = term.norm();
        if mag > last {
            break;
        }
        sum += term;
        last = mag;
        if mag < 1e-17 * sum.norm() {
            break;
        }
    }
    sum
}

/// Expansion of `(Ai, Ai')` valid for `|arg z| <= 2pi/3`, large `|z|`.
pub fn ai_expansion(z: Complex64) -> ScaledPair {
    let (u, v) = coefficients();
    let sqrt_z = z.sqrt();
    let quarter = sqrt_z.sqrt();
    let zeta = z * sqrt_z * (2.0 / 3.0);
    let inv_zeta = zeta.inv();
    let s = asymptotic_sum(&u, inv_zeta, true);
    let t = asymptotic_sum(&v, inv_zeta, true);
    let phase = Complex64::from_polar(1.0, -zeta.im);
    let value = phase * s / (quarter * 2.0 * SQRT_PI);
    let derivative = -phase * quarter * t / (2.0 * SQRT_PI);
    ScaledPair::new(value, derivative, -zeta.re)
}

/// Leading-order-plus-corrections expansion of `(U, U')` for `|arg z| < pi/3`.
///
/// Only exponentially accurate away from `arg z = ±pi/3`; [`super::u_scaled`]
/// goes through the connection identity instead.
pub fn u_expansion(z: Complex64) -> ScaledPair {
    let (u, v) = coefficients();
    let sqrt_z = z.sqrt();
    let quarter = sqrt_z.sqrt();
    let zeta = z * sqrt_z * (2.0 / 3.0);
    let inv_zeta = zeta.inv();
    let s = asymptotic_sum(&u, inv_zeta, false);
    let t = asymptotic_sum(&v, inv_zeta, false);
    let phase = Complex64::from_polar(1.0, zeta.im);
    let value = phase * s / (quarter * SQRT_PI);
    let derivative = phase * quarter * t / SQRT_PI;
    ScaledPair::new(value, derivative, zeta.re)
}

/// `Ai` and `Ai'` at `z`, `w z`, `w^2 z`. Two of the three points always lie in
/// `|arg| <= 2pi/3`; the third follows from the connection identity and its
/// derivative `Ai'(z) + w^2 Ai'(wz) + w Ai'(w^2 z) = 0`.
pub fn ai_triple(z: Complex64) -> [ScaledPair; 3] {
    let points = [z, OMEGA * z, OMEGA_BAR * z];
    let bad = (0..3)
        .max_by(|&a, &b| {
            points[a]
                .arg()
                .abs()
                .partial_cmp(&points[b].arg().abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    let mut out = [ScaledPair::ZERO; 3];
    for i in 0..3 {
        if i != bad {
            out[i] = ai_expansion(points[i]);
        }
    }
    let good: Vec<usize> = (0..3).filter(|&i| i != bad).collect();
    let e = out[good[0]].exponent.max(out[good[1]].exponent);
    let p = |i: usize| out[i].value_at(e);
    let d = |i: usize| out[i].derivative_at(e);
    let (value, derivative) = match bad {
        0 => (
            -OMEGA * p(1) - OMEGA_BAR * p(2),
            -OMEGA_BAR * d(1) - OMEGA * d(2),
        ),
        1 => (
            -OMEGA_BAR * p(0) - OMEGA * p(2),
            -OMEGA * d(0) - OMEGA_BAR * d(2),
        ),
        _ => (
            -OMEGA * p(0) - OMEGA_BAR * p(1),
            -OMEGA_BAR * d(0) - OMEGA * d(1),
        ),
    };
    out[bad] = ScaledPair::new(value, derivative, e);
    out
}

/// True when `z` is inside the sector where [`ai_expansion`] applies directly.
pub fn in_direct_sector(z: Complex64) -> bool {
    z.arg().abs() <= 2.0 * PI / 3.0
}
