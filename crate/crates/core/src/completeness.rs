//! Eigenfunction expansions, Abel-Lidskii summation, the certificate function
//! `F_0(w) = int_0^inf Ai(w + x c^{1/3}) f(x) dx` and the sector geometry that
//! decides completeness of `{y_n}`.
//!
//! The sector criterion studies
//!
//! ```text
//! eta(gamma, alpha) = sin^{3/2}(gamma/3 - alpha) / sin^{1/2}(gamma) - sin(3 alpha / 2)
//! ```
//!
//! which decreases in `alpha` on `[0, gamma/3]` from a positive to a negative
//! value. Its root `alpha0` satisfies `alpha0 + 2 gamma/3 < 2 pi/3` exactly
//! when `gamma < 5 pi/6`.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::airy::{ai, ai_scaled, airy_zero};
use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction};
use crate::operator::AiryOperator;

/// Absolute tolerance of the `alpha0` bisection.
pub const ALPHA0_TOLERANCE: f64 = 1e-12;
/// Lower end of the Abel exponent window.
pub const BETA_MIN: f64 = 1.5;
/// Relative size of an integrand on the last panel tolerated by quadratures.
pub const QUADRATURE_TAIL: f64 = 1e-10;

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("gamma = {gamma} outside (0, pi)")))
    }
}

pub fn eta(gamma: f64, alpha: f64) -> Result<f64> {
    check_gamma(gamma)?;
    if !(0.0..=gamma / 3.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha = {alpha} outside [0, gamma/3] for gamma = {gamma}"
        )));
    }
    let lead = (gamma / 3.0 - alpha).sin().max(0.0).powf(1.5) / gamma.sin().sqrt();
    Ok(lead - (1.5 * alpha).sin())
}

/// Root of `eta(gamma, .)` in `(0, gamma/3)` for `gamma` in `[2 pi/3, pi)`.
pub fn alpha0(gamma: f64) -> Result<f64> {
    if !(2.0 * PI / 3.0..PI).contains(&gamma) {
        return Err(Error::Domain(format!("alpha0 needs gamma in [2pi/3, pi), got {gamma}")));
    }
    let (mut lo, mut hi) = (0.0, gamma / 3.0);
    while hi - lo > ALPHA0_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if eta(gamma, mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Completeness report for `|arg c| = gamma`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorGeometry {
    pub gamma: f64,
    pub alpha0: Option<f64>,
    pub threshold_ok: bool,
    /// `[eta(0), eta(gamma/3)]`; absent for `gamma = 0`.
    pub eta_at_endpoints: Option<[f64; 2]>,
}

impl SectorGeometry {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Sector geometry for `arg c = gamma`; negative angles are reflected.
pub fn completeness_verdict(gamma: f64) -> Result<SectorGeometry> {
    let g = gamma.abs();
    if !(g < PI) {
        return Err(Error::Domain(format!("|gamma| = {g} must be below pi")));
    }
    let eta_at_endpoints = if g > 0.0 {
        Some([eta(g, 0.0)?, eta(g, g / 3.0)?])
    } else {
        None
    };
    let alpha0 = if g >= 2.0 * PI / 3.0 { Some(alpha0(g)?) } else { None };
    Ok(SectorGeometry {
        gamma: g,
        alpha0,
        threshold_ok: g < 5.0 * PI / 6.0,
        eta_at_endpoints,
    })
}

/// `t_k k^{-2/3} / (3 pi/2)^{2/3}`, tending to 1.
pub fn zero_growth_ratio(k: usize) -> Result<f64> {
    let t = airy_zero(k)?;
    Ok(t * (k as f64).powf(-2.0 / 3.0) / (1.5 * PI).powf(2.0 / 3.0))
}

/// `a_k = (f, z_k) / c_k`, `k = 1..=n_terms`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionCoefficients {
    pub coeffs: Vec<Complex64>,
}

impl ExpansionCoefficients {
    pub fn n_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// `sum a_k y_k` on `grid`.
    pub fn synthesize(&self, op: &AiryOperator, grid: &Arc<Grid>) -> Result<GridFunction> {
        weighted_sum(op, grid, &self.coeffs)
    }
}

fn weighted_sum(op: &AiryOperator, grid: &Arc<Grid>, coeffs: &[Complex64]) -> Result<GridFunction> {
    let mut acc = vec![Complex64::new(0.0, 0.0); grid.len()];
    for (k, a) in coeffs.iter().enumerate() {
        let y = op.eigenmode(k + 1)?.sample_checked(grid)?;
        for (s, v) in acc.iter_mut().zip(y.values()) {
            *s += a * v;
        }
    }
    GridFunction::new(grid.clone(), acc)
}

/// `c_k = c^{-1/3} Ai'(-t_k)^2`.
pub fn biorth_constant_exact(op: &AiryOperator, k: usize) -> Result<Complex64> {
    let t = airy_zero(k)?;
    let d = ai(Complex64::new(-t, 0.0))?.derivative;
    Ok(d * d / op.c_cbrt())
}

pub fn expand(op: &AiryOperator, f: &GridFunction, n_terms: usize) -> Result<ExpansionCoefficients> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be at least 1".into()));
    }
    let coeffs = (1..=n_terms)
        .into_par_iter()
        .map(|k| {
            let y = op.eigenmode(k)?.sample_checked(f.grid())?;
            let pairing = f.grid().bilinear(f.values(), y.values());
            Ok(pairing / biorth_constant_exact(op, k)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExpansionCoefficients { coeffs })
}

/// `||f - sum_{k<=n} a_k y_k|| / ||f||`.
pub fn partial_sum_error(op: &AiryOperator, f: &GridFunction, n_terms: usize) -> Result<f64> {
    let norm = f.norm();
    if norm == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let s = expand(op, f, n_terms)?.synthesize(op, f.grid())?;
    Ok(f.axpy(Complex64::new(-1.0, 0.0), &s).norm() / norm)
}

/// Open window `(3/2, pi/|gamma|)` of admissible Abel exponents.
pub fn abel_window(gamma: f64) -> Result<(f64, f64)> {
    let hi = PI / gamma.abs();
    if hi <= BETA_MIN {
        return Err(Error::WindowEmpty { gamma });
    }
    Ok((BETA_MIN, hi))
}

/// Midpoint of the Abel window, or `BETA_MIN + 1/2` when it is unbounded.
pub fn abel_beta_mid(gamma: f64) -> Result<f64> {
    let (lo, hi) = abel_window(gamma)?;
    Ok(if hi.is_finite() { 0.5 * (lo + hi) } else { lo + 0.5 })
}

fn check_beta(gamma: f64, beta: f64) -> Result<()> {
    let (lo, hi) = abel_window(gamma)?;
    if beta > lo && beta < hi {
        Ok(())
    } else {
        Err(Error::BetaOutsideWindow { beta, lo, hi })
    }
}

/// Exponents `-(e^{-i gamma/2} lambda_k)^beta`, `k = 1..=n_terms`; the
/// damping factors are `exp(t * exponent)`.
pub fn abel_exponents(op: &AiryOperator, beta: f64, n_terms: usize) -> Result<Vec<Complex64>> {
    check_beta(op.gamma(), beta)?;
    let rot = Complex64::from_polar(1.0, -0.5 * op.gamma());
    (1..=n_terms)
        .map(|k| Ok(-(rot * op.eigenvalue(k)?).powf(beta)))
        .collect()
}

/// `S(t, f) = sum_k exp(-(e^{-i gamma/2} lambda_k)^beta t) a_k y_k`.
pub fn abel_sum(
    op: &AiryOperator,
    f: &GridFunction,
    t: f64,
    beta: f64,
    n_terms: usize,
) -> Result<GridFunction> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("t = {t} must be positive")));
    }
    let exponents = abel_exponents(op, beta, n_terms)?;
    let a = expand(op, f, n_terms)?;
    let damped: Vec<Complex64> = a
        .coeffs
        .iter()
        .zip(&exponents)
        .map(|(a, e)| a * (e * t).exp())
        .collect();
    weighted_sum(op, f.grid(), &damped)
}

/// `F_0(w) = int Ai(w + x c^{1/3}) f(x) dx`.
pub fn eval_f0(op: &AiryOperator, f: &GridFunction, w: Complex64) -> Result<Complex64> {
    let grid = f.grid();
    let s = op.c_cbrt();
    let integrand: Vec<Complex64> = grid
        .nodes()
        .iter()
        .zip(f.values())
        .map(|(&x, v)| ai_scaled(w + s * x).value_scaled().to_complex_lossy() * v)
        .collect();
    check_tail(grid, &integrand, "Ai(w + x c^(1/3)) f(x)")?;
    Ok(grid.integrate(&integrand))
}

fn check_tail(grid: &Grid, values: &[Complex64], what: &str) -> Result<()> {
    let sup = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let tail = values[values.len() - grid.order()..]
        .iter()
        .map(|v| v.norm())
        .fold(0.0, f64::max);
    if tail > QUADRATURE_TAIL * sup {
        return Err(Error::TruncationInsufficient(format!(
            "{what} is {tail:e} on the last panel (peak {sup:e})"
        )));
    }
    Ok(())
}

/// Removes from `f` its component in `span{z_1..z_k_max}` by two passes of
/// Gram-Schmidt against an orthonormalized copy of the adjoint modes.
pub fn orthogonalize_against_adjoint(
    op: &AiryOperator,
    f: &GridFunction,
    k_max: usize,
) -> Result<GridFunction> {
    let grid = f.grid();
    let mut basis: Vec<GridFunction> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut z = op.adjoint_eigenmode(k)?.sample_checked(grid)?;
        for _ in 0..2 {
            for q in &basis {
                z = z.axpy(-z.inner(q), q);
            }
        }
        let n = z.norm();
        if n == 0.0 {
            return Err(Error::ZeroNorm);
        }
        basis.push(z.scaled(Complex64::new(1.0 / n, 0.0)));
    }
    let mut g = f.clone();
    for _ in 0..2 {
        for q in &basis {
            g = g.axpy(-g.inner(q), q);
        }
    }
    Ok(g)
}
