//! The resolvent `(L_c - lambda)^{-1}` through its Green kernel
//!
//! ```text
//! G(x, t) = Ai(a(max)) phi(a(min)) / (c^{1/3} W(Ai, B)),
//! phi = B - r Ai,   r = B(a(0)) / Ai(a(0)),
//! a(x) = c^{1/3} x - lambda c^{-2/3},
//! ```
//!
//! where `B` is a second solution of `w'' = a w`. With `B = U` and
//! `lambda = 0` this is `pi c^{-1/3} Ai(a(max)) U(a(min))`, the inverse
//! `L_c^{-1}`. When `Ai` is dominant at `a(0)`, so is `U`, and `phi` would be
//! formed by cancellation; `B` is then `Ai(w a)` or `Ai(conj(w) a)`,
//! `w = e^{2 pi i/3}`, whichever is recessive there. All products are formed
//! from scaled Airy values.

use std::f64::consts::PI;
use std::io::Write;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::airy::asymptotic::{OMEGA, OMEGA_BAR};
use crate::airy::{ai_scaled, ai_u_scaled, ScaledPair};
use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction};
use crate::operator::{AiryOperator, Sector};
use crate::scaled::Scaled;

/// Shifts closer than this to an eigenvalue are flagged ill-conditioned.
pub const NEAR_EIGENVALUE: f64 = 1e-6;
/// Pseudospectrum points closer than this to an eigenvalue report 0.
pub const EIGENVALUE_CUTOFF: f64 = 1e-8;
/// Relative tail weight of `f` on the last panel tolerated by `green_apply`.
pub const SOURCE_TAIL_TOLERANCE: f64 = 1e-10;
const POWER_TOLERANCE: f64 = 1e-6;
const POWER_MAX_ITERATIONS: usize = 10_000;
/// Panel order used for kernel matrices.
pub const KERNEL_ORDER: usize = 8;

/// Second solution paired with `Ai` in the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Companion {
    /// `U = Bi - sqrt(3) Ai`.
    U,
    /// `Ai(w a)`.
    AiOmega,
    /// `Ai(conj(w) a)`.
    AiOmegaBar,
}

impl Companion {
    /// Choice for the left end point `a0`.
    pub fn for_origin(a0: Complex64) -> Self {
        let arg = a0.arg();
        if a0.norm() <= 1.0 || arg.abs() <= PI / 3.0 {
            Companion::U
        } else if arg > 0.0 {
            Companion::AiOmegaBar
        } else {
            Companion::AiOmega
        }
    }

    /// `W(Ai, B)`.
    pub fn wronskian(self) -> Complex64 {
        match self {
            Companion::U => Complex64::new(1.0 / PI, 0.0),
            Companion::AiOmega => Complex64::from_polar(0.5 / PI, -PI / 6.0),
            Companion::AiOmegaBar => Complex64::from_polar(0.5 / PI, PI / 6.0),
        }
    }

    /// `(Ai(a), B(a))` with derivatives in `a`.
    fn eval(self, a: Complex64) -> (ScaledPair, ScaledPair) {
        match self {
            Companion::U => ai_u_scaled(a),
            Companion::AiOmega | Companion::AiOmegaBar => {
                let w = if self == Companion::AiOmega { OMEGA } else { OMEGA_BAR };
                let b = ai_scaled(w * a);
                (ai_scaled(a), ScaledPair::new(b.value, b.derivative * w, b.exponent))
            }
        }
    }
}

/// Green kernel of `L_c - lambda` with Airy factors tabulated on a grid.
#[derive(Debug, Clone)]
pub struct GreenKernel {
    op: AiryOperator,
    lambda: Complex64,
    grid: Arc<Grid>,
    companion: Companion,
    ai: Vec<ScaledPair>,
    b: Vec<ScaledPair>,
    /// `B(a(0)) / Ai(a(0))`.
    ratio: Scaled,
    /// `Ai(a(0))`, `B(a(0))`.
    origin: (ScaledPair, ScaledPair),
}

impl GreenKernel {
    pub fn new(op: &AiryOperator, lambda: Complex64, grid: Arc<Grid>) -> Result<Self> {
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite shift {lambda}")));
        }
        let s = op.c_cbrt();
        let mu = lambda / op.c_23();
        let companion = Companion::for_origin(-mu);
        let (ai, b): (Vec<_>, Vec<_>) = grid
            .nodes()
            .iter()
            .map(|&x| companion.eval(s * x - mu))
            .unzip();
        let origin = companion.eval(-mu);
        let ratio = if lambda == Complex64::new(0.0, 0.0) {
            Scaled::ZERO
        } else {
            let a0 = origin.0.value_scaled();
            let b0 = origin.1.value_scaled();
            if a0.mantissa == Complex64::new(0.0, 0.0) {
                return Err(Error::Domain(format!("shift {lambda} is an eigenvalue")));
            }
            Scaled::new(b0.mantissa / a0.mantissa, b0.exponent - a0.exponent)
        };
        let kernel = GreenKernel {
            op: *op,
            lambda,
            grid,
            companion,
            ai,
            b,
            ratio,
            origin,
        };
        kernel.check_decay()?;
        Ok(kernel)
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn companion(&self) -> Companion {
        self.companion
    }

    /// The decaying factor `Ai(a(x))` must be negligible at `x_max`.
    fn check_decay(&self) -> Result<()> {
        let peak = self
            .ai
            .iter()
            .map(|p| p.value_scaled().log_abs())
            .chain(std::iter::once(self.origin.0.value_scaled().log_abs()))
            .fold(f64::NEG_INFINITY, f64::max);
        let last = self.ai.last().map(|p| p.value_scaled().log_abs()).unwrap_or(0.0);
        if last - peak > (1e-10f64).ln() {
            return Err(Error::TruncationInsufficient(format!(
                "Ai(c^(1/3) x - lambda c^(-2/3)) has decayed only by e^{:.1} at x_max = {}",
                last - peak,
                self.grid.x_max()
            )));
        }
        Ok(())
    }

    /// `1 / (c^{1/3} W(Ai, B))`.
    fn prefactor(&self) -> Complex64 {
        1.0 / (self.op.c_cbrt() * self.companion.wronskian())
    }

    /// `G(x_i, x_j)`.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        let a_hi = self.ai[hi].value_scaled();
        let a_lo = self.ai[lo].value_scaled();
        let b_lo = self.b[lo].value_scaled();
        let val = a_hi * b_lo - self.ratio * a_hi * a_lo;
        val.to_complex_lossy() * self.prefactor()
    }

    /// Applies the kernel to `f` by cumulative quadrature of the Volterra form.
    /// Returns `(y, y')`.
    pub fn apply(&self, f: &[Complex64]) -> (Vec<Complex64>, Vec<Complex64>) {
        let g = &self.grid;
        let ai_m: Vec<Complex64> = self.ai.iter().zip(f).map(|(p, f)| p.value * f).collect();
        let ai_e: Vec<f64> = self.ai.iter().map(|p| p.exponent).collect();
        let b_m: Vec<Complex64> = self.b.iter().zip(f).map(|(p, f)| p.value * f).collect();
        let b_e: Vec<f64> = self.b.iter().map(|p| p.exponent).collect();

        let int_b_left = g.cumulative_left_scaled(&b_m, &b_e);
        let int_ai_right = g.cumulative_right_scaled(&ai_m, &ai_e);
        let int_ai_left = g.cumulative_left_scaled(&ai_m, &ai_e);
        let int_ai_total = int_ai_left[0] + int_ai_right[0];
        let tail = self.ratio * int_ai_total;

        let pre = self.prefactor();
        let pre_d = pre * self.op.c_cbrt();
        let mut y = Vec::with_capacity(f.len());
        let mut dy = Vec::with_capacity(f.len());
        for i in 0..f.len() {
            let a = self.ai[i].value_scaled();
            let ad = self.ai[i].derivative_scaled();
            let b = self.b[i].value_scaled();
            let bd = self.b[i].derivative_scaled();
            let v = a * int_b_left[i] + b * int_ai_right[i] - a * tail;
            let d = ad * int_b_left[i] + bd * int_ai_right[i] - ad * tail;
            y.push(v.to_complex_lossy() * pre);
            dy.push(d.to_complex_lossy() * pre_d);
        }
        (y, dy)
    }

    /// `y(0)` from the closed formula (zero up to rounding).
    pub fn value_at_origin(&self, f: &[Complex64]) -> Complex64 {
        let ai_m: Vec<Complex64> = self.ai.iter().zip(f).map(|(p, f)| p.value * f).collect();
        let ai_e: Vec<f64> = self.ai.iter().map(|p| p.exponent).collect();
        let total = self.grid.cumulative_right_scaled(&ai_m, &ai_e)[0]
            + self.grid.cumulative_left_scaled(&ai_m, &ai_e)[0];
        let a0 = self.origin.0.value_scaled();
        let b0 = self.origin.1.value_scaled();
        let v = b0 * total - self.ratio * a0 * total;
        v.to_complex_lossy() * self.prefactor()
    }

    /// Weighted kernel matrix `K_ij = sqrt(w_i) G(x_i, x_j) sqrt(w_j)`.
    pub fn matrix(&self) -> KernelMatrix {
        let n = self.grid.len();
        let sw: Vec<f64> = self.grid.weights().iter().map(|w| w.sqrt()).collect();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = self.entry(i, j) * (sw[i] * sw[j]);
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        KernelMatrix {
            n,
            entries,
            nodes: self.grid.nodes().to_vec(),
        }
    }
}

/// Dense square matrix of kernel samples with the node coordinates.
#[derive(Debug, Clone)]
pub struct KernelMatrix {
    n: usize,
    entries: Vec<Complex64>,
    nodes: Vec<f64>,
}

impl KernelMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn apply(&self, v: &[Complex64], out: &mut [Complex64]) {
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.entries[i * self.n..(i + 1) * self.n];
            *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
    }

    pub fn apply_adjoint(&self, v: &[Complex64], out: &mut [Complex64]) {
        out.iter_mut().for_each(|o| *o = Complex64::new(0.0, 0.0));
        for (i, vi) in v.iter().enumerate() {
            let row = &self.entries[i * self.n..(i + 1) * self.n];
            for (o, a) in out.iter_mut().zip(row) {
                *o += a.conj() * vi;
            }
        }
    }

    /// Largest singular value by power iteration on `K* K`.
    pub fn largest_singular_value(&self) -> Result<f64> {
        let n = self.n;
        let mut v: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new(1.0 + 0.25 * (i as f64 * 0.37).sin(), 0.1 * (i as f64 * 0.11).cos()))
            .collect();
        normalize(&mut v);
        let mut kv = vec![Complex64::new(0.0, 0.0); n];
        let mut w = vec![Complex64::new(0.0, 0.0); n];
        let mut prev = 0.0;
        for _ in 0..POWER_MAX_ITERATIONS {
            self.apply(&v, &mut kv);
            self.apply_adjoint(&kv, &mut w);
            let sigma_sq = norm2(&w);
            if sigma_sq == 0.0 {
                return Ok(0.0);
            }
            let sigma = sigma_sq.sqrt();
            w.iter_mut().for_each(|x| *x /= sigma_sq);
            std::mem::swap(&mut v, &mut w);
            if (sigma - prev).abs() <= POWER_TOLERANCE * sigma {
                return Ok(sigma);
            }
            prev = sigma;
        }
        Err(Error::NonConvergence {
            what: "power iteration for the largest singular value".into(),
            iterations: POWER_MAX_ITERATIONS,
        })
    }
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(v: &mut [Complex64]) {
    let n = norm2(v);
    v.iter_mut().for_each(|x| *x /= n);
}

/// Solution of `(L_c - lambda) y = f` on the grid of `f`.
#[derive(Debug, Clone)]
pub struct GreenSolution {
    pub y: GridFunction,
    pub dy: GridFunction,
    /// `lambda` lies within [`NEAR_EIGENVALUE`] of an eigenvalue.
    pub ill_conditioned: bool,
}

fn check_source_tail(f: &GridFunction) -> Result<()> {
    let g = f.grid();
    let m = g.order();
    let n = g.len();
    let total = f.norm();
    let tail: f64 = f.values()[n - m..]
        .iter()
        .zip(&g.weights()[n - m..])
        .map(|(v, w)| v.norm_sqr() * w)
        .sum::<f64>()
        .sqrt();
    if tail > SOURCE_TAIL_TOLERANCE * total {
        return Err(Error::TruncationInsufficient(format!(
            "source weight {tail:e} on the last panel exceeds {SOURCE_TAIL_TOLERANCE:e} of its norm {total:e}"
        )));
    }
    Ok(())
}

/// `L_c^{-1} f` with its derivative.
pub fn green_apply(op: &AiryOperator, f: &GridFunction) -> Result<GreenSolution> {
    green_apply_shifted(op, f, Complex64::new(0.0, 0.0))
}

/// `(L_c - lambda)^{-1} f` with its derivative.
pub fn green_apply_shifted(op: &AiryOperator, f: &GridFunction, lambda: Complex64) -> Result<GreenSolution> {
    check_source_tail(f)?;
    let ill_conditioned = distance_to_spectrum(op, lambda)? < NEAR_EIGENVALUE;
    let kernel = GreenKernel::new(op, lambda, f.grid().clone())?;
    let (y, dy) = kernel.apply(f.values());
    Ok(GreenSolution {
        y: GridFunction::new(f.grid().clone(), y)?,
        dy: GridFunction::new(f.grid().clone(), dy)?,
        ill_conditioned,
    })
}

/// `min_n |lambda - lambda_n|`.
pub fn distance_to_spectrum(op: &AiryOperator, lambda: Complex64) -> Result<f64> {
    let scale = op.c_23().norm();
    let mut best = f64::INFINITY;
    for n in 1.. {
        let t = crate::airy::airy_zero(n)?;
        best = best.min((lambda - op.c_23() * t).norm());
        if t * scale > lambda.norm() + best {
            break;
        }
    }
    Ok(best)
}

/// Truncation point used for resolvent grids at shift `lambda`.
pub fn resolvent_truncation(op: &AiryOperator, lambda: Complex64) -> f64 {
    op.truncation_for_shift(lambda / op.c_23())
}

/// Estimate of `||(L_c - lambda)^{-1}||` on `n_nodes` quadrature nodes.
pub fn resolvent_norm(op: &AiryOperator, lambda: Complex64, n_nodes: usize) -> Result<f64> {
    if n_nodes < 64 {
        return Err(Error::InvalidParameter(format!("n_nodes = {n_nodes} < 64")));
    }
    let grid = Arc::new(Grid::with_node_count(resolvent_truncation(op, lambda), n_nodes, KERNEL_ORDER)?);
    resolvent_norm_on(op, lambda, &grid)
}

/// As [`resolvent_norm`] on a caller-supplied grid.
pub fn resolvent_norm_on(op: &AiryOperator, lambda: Complex64, grid: &Arc<Grid>) -> Result<f64> {
    GreenKernel::new(op, lambda, grid.clone())?
        .matrix()
        .largest_singular_value()
}

/// Rectangle `[re0, re1] x [im0, im1]` of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub re0: f64,
    pub re1: f64,
    pub im0: f64,
    pub im1: f64,
}

impl Region {
    pub fn new(re0: f64, re1: f64, im0: f64, im1: f64) -> Result<Self> {
        let r = Region { re0, re1, im0, im1 };
        if ![re0, re1, im0, im1].iter().all(|v| v.is_finite()) || re1 < re0 || im1 < im0 {
            return Err(Error::InvalidParameter(format!("bad region {r:?}")));
        }
        Ok(r)
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re0, self.im0),
            Complex64::new(self.re0, self.im1),
            Complex64::new(self.re1, self.im0),
            Complex64::new(self.re1, self.im1),
        ]
    }
}

/// `1 / ||R(lambda)||` sampled on a rectangle; `None` marks failed points.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudospectrumGrid {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
    /// Row-major: `values[j * re.len() + i]` belongs to `(re[i], im[j])`.
    pub values: Vec<Option<f64>>,
}

impl PseudospectrumGrid {
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.values[j * self.re.len() + i]
    }

    /// CSV `re,im,inv_resolvent_norm`; failed points leave the last field empty.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "re,im,inv_resolvent_norm")?;
        for (j, &im) in self.im.iter().enumerate() {
            for (i, &re) in self.re.iter().enumerate() {
                let v = self.get(i, j).map(fmt_f64).unwrap_or_default();
                writeln!(out, "{},{},{}", fmt_f64(re), fmt_f64(im), v)?;
            }
        }
        Ok(())
    }
}

/// Shortest round-trip decimal text of `x`, exponent form outside `[1e-5, 1e15)`.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    let a = x.abs();
    if a == 0.0 || (1e-5..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
        .collect()
}

/// `1/||R_c(lambda)||` on an `nx x ny` lattice over `region`. Points are
/// independent and evaluated in parallel on the current rayon pool.
pub fn pseudospectrum_grid(
    op: &AiryOperator,
    region: Region,
    resolution: (usize, usize),
    n_nodes: usize,
) -> Result<PseudospectrumGrid> {
    let (nx, ny) = resolution;
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidParameter(format!("resolution {nx}x{ny} below 2x2")));
    }
    if n_nodes < 64 {
        return Err(Error::InvalidParameter(format!("n_nodes = {n_nodes} < 64")));
    }
    let x_max = region
        .corners()
        .iter()
        .map(|&l| resolvent_truncation(op, l))
        .fold(0.0, f64::max);
    let grid = Arc::new(Grid::with_node_count(x_max, n_nodes, KERNEL_ORDER)?);
    let re = linspace(region.re0, region.re1, nx);
    let im = linspace(region.im0, region.im1, ny);
    let points: Vec<Complex64> = im
        .iter()
        .flat_map(|&y| re.iter().map(move |&x| Complex64::new(x, y)))
        .collect();
    let values = points
        .par_iter()
        .map(|&lambda| {
            let d = distance_to_spectrum(op, lambda).ok()?;
            if d < EIGENVALUE_CUTOFF {
                return Some(0.0);
            }
            resolvent_norm_on(op, lambda, &grid).ok().map(|n| 1.0 / n)
        })
        .collect();
    Ok(PseudospectrumGrid { re, im, values })
}

/// `dist(lambda, S_gamma)` for the numerical-range sector of `op`.
pub fn sector_distance(op: &AiryOperator, lambda: Complex64) -> f64 {
    Sector::from_gamma(op.gamma()).distance(lambda)
}
