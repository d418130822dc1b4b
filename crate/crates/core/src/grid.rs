//! Composite Gauss–Legendre grids on a truncated half-line `[0, x_max]` and
//! functions sampled on them.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::PanelRule;
use crate::scaled::Scaled;

/// Default number of Gauss nodes per panel.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone)]
pub struct Grid {
    x_max: f64,
    breaks: Vec<f64>,
    rule: Arc<PanelRule>,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Grid {
    /// Panels delimited by `breaks` (strictly increasing, starting at 0).
    pub fn from_breaks(breaks: Vec<f64>, order: usize) -> Result<Self> {
        if breaks.len() < 2 || breaks[0] != 0.0 {
            return Err(Error::InvalidParameter(
                "grid breaks must start at 0 and contain at least one panel".into(),
            ));
        }
        if breaks.windows(2).any(|w| !(w[1] > w[0])) || !breaks.iter().all(|b| b.is_finite()) {
            return Err(Error::InvalidParameter(
                "grid breaks must be finite and strictly increasing".into(),
            ));
        }
        if order < 2 {
            return Err(Error::InvalidParameter("panel order must be >= 2".into()));
        }
        let rule = Arc::new(PanelRule::new(order));
        let mut nodes = Vec::with_capacity((breaks.len() - 1) * order);
        let mut weights = Vec::with_capacity(nodes.capacity());
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            let half = 0.5 * (b - a);
            for (xi, wi) in rule.nodes.iter().zip(&rule.weights) {
                nodes.push(a + half * (xi + 1.0));
                weights.push(half * wi);
            }
        }
        Ok(Grid {
            x_max: *breaks.last().unwrap(),
            breaks,
            rule,
            nodes,
            weights,
        })
    }

    /// `n_panels` equal panels on `[0, x_max]`.
    pub fn composite(x_max: f64, n_panels: usize, order: usize) -> Result<Self> {
        if !(x_max > 0.0) || !x_max.is_finite() || n_panels == 0 {
            return Err(Error::InvalidParameter(format!(
                "bad composite grid: x_max={x_max}, panels={n_panels}"
            )));
        }
        let h = x_max / n_panels as f64;
        let mut breaks: Vec<f64> = (0..=n_panels).map(|i| i as f64 * h).collect();
        breaks[n_panels] = x_max;
        Self::from_breaks(breaks, order)
    }

    /// Equal panels of the given order holding at least `n_nodes` nodes.
    pub fn with_node_count(x_max: f64, n_nodes: usize, order: usize) -> Result<Self> {
        if n_nodes < order {
            return Err(Error::InvalidParameter(format!(
                "need at least {order} nodes, got {n_nodes}"
            )));
        }
        Self::composite(x_max, n_nodes.div_ceil(order), order)
    }

    /// Panels no longer than `max_panel` covering `[0, x_max]`.
    pub fn with_panel_length(x_max: f64, max_panel: f64, order: usize) -> Result<Self> {
        if !(max_panel > 0.0) {
            return Err(Error::InvalidParameter("panel length must be positive".into()));
        }
        Self::composite(x_max, (x_max / max_panel).ceil().max(1.0) as usize, order)
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn order(&self) -> usize {
        self.rule.order()
    }

    pub fn n_panels(&self) -> usize {
        self.breaks.len() - 1
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    /// Value at `x` of the panel-wise interpolant of `f`.
    pub fn interpolate(&self, f: &[Complex64], x: f64) -> Complex64 {
        self.check_len(f.len());
        let x = x.clamp(0.0, self.x_max);
        let p = match self.breaks.binary_search_by(|b| b.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.n_panels() - 1),
            Err(i) => i - 1,
        };
        let (a, b) = (self.breaks[p], self.breaks[p + 1]);
        let m = self.order();
        let local = &f[p * m..(p + 1) * m];
        self.rule.interpolate(local, 2.0 * (x - a) / (b - a) - 1.0)
    }

    fn check_len(&self, n: usize) {
        assert_eq!(n, self.len(), "sample count does not match grid");
    }

    pub fn integrate(&self, f: &[Complex64]) -> Complex64 {
        self.check_len(f.len());
        f.iter().zip(&self.weights).map(|(f, w)| f * w).sum()
    }

    /// `(f, g) = int f conj(g)`.
    pub fn inner(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        self.check_len(f.len());
        self.check_len(g.len());
        f.iter()
            .zip(g)
            .zip(&self.weights)
            .map(|((f, g), w)| f * g.conj() * w)
            .sum()
    }

    /// `int f g` without conjugation.
    pub fn bilinear(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        self.check_len(f.len());
        self.check_len(g.len());
        f.iter()
            .zip(g)
            .zip(&self.weights)
            .map(|((f, g), w)| f * g * w)
            .sum()
    }

    pub fn norm(&self, f: &[Complex64]) -> f64 {
        self.check_len(f.len());
        f.iter()
            .zip(&self.weights)
            .map(|(f, w)| f.norm_sqr() * w)
            .sum::<f64>()
            .sqrt()
    }

    /// Derivative of the panel-wise interpolant at the nodes.
    pub fn differentiate(&self, f: &[Complex64]) -> Vec<Complex64> {
        self.check_len(f.len());
        let m = self.order();
        let d = &self.rule.differentiation;
        let mut out = Vec::with_capacity(f.len());
        for (p, w) in self.breaks.windows(2).enumerate() {
            let scale = 2.0 / (w[1] - w[0]);
            let local = &f[p * m..(p + 1) * m];
            for row in d.iter() {
                let s: Complex64 = row.iter().zip(local).map(|(a, v)| v * a).sum();
                out.push(s * scale);
            }
        }
        out
    }

    /// `int_0^{x_i} f` at every node.
    pub fn cumulative_left(&self, f: &[Complex64]) -> Vec<Complex64> {
        let exps = vec![0.0; f.len()];
        self.cumulative_left_scaled(f, &exps)
            .into_iter()
            .map(Scaled::to_complex_lossy)
            .collect()
    }

    /// `int_{x_i}^{x_max} f` at every node.
    pub fn cumulative_right(&self, f: &[Complex64]) -> Vec<Complex64> {
        let exps = vec![0.0; f.len()];
        self.cumulative_right_scaled(f, &exps)
            .into_iter()
            .map(Scaled::to_complex_lossy)
            .collect()
    }

    /// `int_0^{x_i} f` for `f_j = mantissa_j e^{exponent_j}`.
    pub fn cumulative_left_scaled(&self, mantissa: &[Complex64], exponent: &[f64]) -> Vec<Scaled> {
        self.check_len(mantissa.len());
        self.check_len(exponent.len());
        let m = self.order();
        let mut out = Vec::with_capacity(mantissa.len());
        let mut running = Scaled::ZERO;
        for (p, w) in self.breaks.windows(2).enumerate() {
            let half = 0.5 * (w[1] - w[0]);
            let range = p * m..(p + 1) * m;
            let (local, e_ref) = local_mantissas(&mantissa[range.clone()], &exponent[range]);
            for row in &self.rule.left_integration {
                let s: Complex64 = row.iter().zip(&local).map(|(a, v)| v * a).sum();
                out.push(running + Scaled::new(s * half, e_ref));
            }
            let total: Complex64 = self.rule.weights.iter().zip(&local).map(|(a, v)| v * a).sum();
            running = (running + Scaled::new(total * half, e_ref)).normalized();
        }
        out
    }

    /// `int_{x_i}^{x_max} f` for `f_j = mantissa_j e^{exponent_j}`.
    pub fn cumulative_right_scaled(&self, mantissa: &[Complex64], exponent: &[f64]) -> Vec<Scaled> {
        self.check_len(mantissa.len());
        self.check_len(exponent.len());
        let m = self.order();
        let n_panels = self.n_panels();
        let mut out = vec![Scaled::ZERO; mantissa.len()];
        let mut running = Scaled::ZERO;
        for p in (0..n_panels).rev() {
            let half = 0.5 * (self.breaks[p + 1] - self.breaks[p]);
            let range = p * m..(p + 1) * m;
            let (local, e_ref) = local_mantissas(&mantissa[range.clone()], &exponent[range]);
            for (i, row) in self.rule.right_integration.iter().enumerate() {
                let s: Complex64 = row.iter().zip(&local).map(|(a, v)| v * a).sum();
                out[p * m + i] = running + Scaled::new(s * half, e_ref);
            }
            let total: Complex64 = self.rule.weights.iter().zip(&local).map(|(a, v)| v * a).sum();
            running = (running + Scaled::new(total * half, e_ref)).normalized();
        }
        out
    }
}

fn local_mantissas(mantissa: &[Complex64], exponent: &[f64]) -> (Vec<Complex64>, f64) {
    let e_ref = exponent.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let local = mantissa
        .iter()
        .zip(exponent)
        .map(|(m, e)| m * (e - e_ref).exp())
        .collect();
    (local, e_ref)
}

/// Complex samples of a function on a [`Grid`].
#[derive(Debug, Clone)]
pub struct GridFunction {
    grid: Arc<Grid>,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(grid: Arc<Grid>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidParameter(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite sample".into()));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn sample(grid: Arc<Grid>, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.nodes().iter().map(|&x| f(x)).collect();
        GridFunction { grid, values }
    }

    pub fn zeros(grid: Arc<Grid>) -> Self {
        let values = vec![Complex64::new(0.0, 0.0); grid.len()];
        GridFunction { grid, values }
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn x_max(&self) -> f64 {
        self.grid.x_max()
    }

    pub fn nodes(&self) -> &[f64] {
        self.grid.nodes()
    }

    pub fn weights(&self) -> &[f64] {
        self.grid.weights()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.grid.norm(&self.values)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn inner(&self, other: &GridFunction) -> Complex64 {
        self.grid.inner(&self.values, &other.values)
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> GridFunction {
        let values = self
            .grid
            .nodes()
            .iter()
            .zip(&self.values)
            .map(|(&x, &v)| f(x, v))
            .collect();
        GridFunction {
            grid: self.grid.clone(),
            values,
        }
    }

    pub fn scaled(&self, a: Complex64) -> GridFunction {
        self.map(|_, v| v * a)
    }

    /// `self + a * other`.
    pub fn axpy(&self, a: Complex64, other: &GridFunction) -> GridFunction {
        assert_eq!(self.len(), other.len(), "grid mismatch");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(u, v)| u + a * v)
            .collect();
        GridFunction {
            grid: self.grid.clone(),
            values,
        }
    }

    pub fn interpolate(&self, x: f64) -> Complex64 {
        self.grid.interpolate(&self.values, x)
    }

    pub fn derivative(&self) -> GridFunction {
        GridFunction {
            grid: self.grid.clone(),
            values: self.grid.differentiate(&self.values),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_grid_invariants() {
        let g = Grid::with_node_count(10.0, 100, 16).unwrap();
        assert_eq!(g.len(), 112);
        assert!(g.nodes().windows(2).all(|w| w[0] < w[1]));
        assert!(g.weights().iter().all(|&w| w > 0.0));
        let total: f64 = g.weights().iter().sum();
        assert!((total - 10.0).abs() < 1e-12);
        assert!(Grid::composite(-1.0, 3, 8).is_err());
        assert!(Grid::from_breaks(vec![0.0, 1.0, 1.0], 8).is_err());
    }

    #[test]
    fn cumulative_integrals_of_exponential() {
        let g = Arc::new(Grid::composite(5.0, 10, 12).unwrap());
        let f: Vec<Complex64> = g.nodes().iter().map(|&x| Complex64::new(0.0, x).exp()).collect();
        let left = g.cumulative_left(&f);
        let right = g.cumulative_right(&f);
        let prim = |x: f64| Complex64::new(0.0, x).exp() / Complex64::new(0.0, 1.0);
        for (i, &x) in g.nodes().iter().enumerate() {
            assert!((left[i] - (prim(x) - prim(0.0))).norm() < 1e-13);
            assert!((right[i] - (prim(5.0) - prim(x))).norm() < 1e-13);
        }
    }

    #[test]
    fn scaled_cumulative_handles_huge_growth() {
        // f = e^{x^2} with x up to 40: e^{1600} is far outside f64.
        let g = Grid::composite(40.0, 80, 16).unwrap();
        let exps: Vec<f64> = g.nodes().iter().map(|x| x * x).collect();
        let mant = vec![Complex64::new(1.0, 0.0); g.len()];
        let left = g.cumulative_left_scaled(&mant, &exps);
        // int_0^x e^{t^2} dt ~ e^{x^2} / (2x) for large x.
        let i = g.len() - 1;
        let x = g.nodes()[i];
        let ratio = (left[i].log_abs() - (x * x - (2.0 * x).ln())).exp();
        assert!((ratio - 1.0).abs() < 1e-3);
    }

    #[test]
    fn spectral_derivative() {
        let g = Arc::new(Grid::composite(3.0, 6, 16).unwrap());
        let f = GridFunction::sample(g.clone(), |x| Complex64::new(x.sin(), x * x));
        let d = f.derivative();
        for (x, v) in g.nodes().iter().zip(d.values()) {
            assert!((v - Complex64::new(x.cos(), 2.0 * x)).norm() < 1e-11);
        }
        for x in [0.0, 0.3, 1.5, 3.0] {
            assert!((f.interpolate(x) - Complex64::new(x.sin(), x * x)).norm() < 1e-13);
        }
    }
}
