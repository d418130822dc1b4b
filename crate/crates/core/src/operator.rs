//! The operator `L_c = -d^2/dx^2 + c x` on `[0, inf)` with `y(0) = 0`:
//! parameter branches, spectrum, eigenfunctions of `L_c` and of its adjoint
//! `L_{conj c}`, biorthogonality constants and the numerical-range sector.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::airy::{ai_scaled, airy_zero, airy_zeros};
use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction, DEFAULT_ORDER};

/// Decay (in e-folds of `|Ai|`) demanded at the truncation point.
const TRUNCATION_DECAY: f64 = 36.0;
/// Relative size of an integrand at `x_max` beyond which truncation is rejected.
pub const TAIL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryOperator {
    c: Complex64,
    gamma: f64,
    c_cbrt: Complex64,
    c_23: Complex64,
}

impl AiryOperator {
    /// Rejects `c` on the closed negative half-axis `(-inf, 0]`.
    pub fn new(c: Complex64) -> Result<Self> {
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite c = {c}")));
        }
        if c.im == 0.0 && c.re <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "c = {c} lies on (-inf, 0]"
            )));
        }
        let gamma = c.im.atan2(c.re);
        let c_cbrt = Complex64::from_polar(c.norm().cbrt(), gamma / 3.0);
        Ok(AiryOperator {
            c,
            gamma,
            c_cbrt,
            c_23: c_cbrt * c_cbrt,
        })
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// `arg c` in `(-pi, pi)`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Principal `c^{1/3}`.
    pub fn c_cbrt(&self) -> Complex64 {
        self.c_cbrt
    }

    /// Principal `c^{2/3}`.
    pub fn c_23(&self) -> Complex64 {
        self.c_23
    }

    /// The adjoint operator `L_{conj c}`.
    pub fn adjoint(&self) -> AiryOperator {
        AiryOperator {
            c: self.c.conj(),
            gamma: -self.gamma,
            c_cbrt: self.c_cbrt.conj(),
            c_23: self.c_23.conj(),
        }
    }

    /// `lambda_n = t_n c^{2/3}`.
    pub fn eigenvalue(&self, n: usize) -> Result<Complex64> {
        Ok(self.c_23 * airy_zero(n)?)
    }

    pub fn spectrum(&self, n: usize) -> Result<SpectrumSlice> {
        let t = airy_zeros(n)?;
        let lambda = t.iter().map(|&t| self.c_23 * t).collect();
        Ok(SpectrumSlice { t, lambda })
    }

    /// `y_n` as a reusable evaluator (one zero computation).
    pub fn eigenmode(&self, n: usize) -> Result<Eigenmode> {
        Ok(Eigenmode {
            t: airy_zero(n)?,
            slope: self.c_cbrt,
        })
    }

    /// `z_n`, eigenfunction of `L_{conj c}` for `conj(lambda_n)`.
    pub fn adjoint_eigenmode(&self, n: usize) -> Result<Eigenmode> {
        Ok(Eigenmode {
            t: airy_zero(n)?,
            slope: self.c_cbrt.conj(),
        })
    }

    /// `y_n(x) = Ai(-t_n + x c^{1/3})`.
    pub fn eigenfunction(&self, n: usize, x: f64) -> Result<Complex64> {
        check_x(x)?;
        Ok(self.eigenmode(n)?.eval(x))
    }

    /// `z_n(x) = Ai(-t_n + x conj(c)^{1/3}) = conj(y_n(x))`.
    pub fn adjoint_eigenfunction(&self, n: usize, x: f64) -> Result<Complex64> {
        check_x(x)?;
        Ok(self.adjoint_eigenmode(n)?.eval(x))
    }

    /// `(y_n, z_k) = int y_n conj(z_k)` on `grid`.
    pub fn biorth_pairing(&self, n: usize, k: usize, grid: &Arc<Grid>) -> Result<Complex64> {
        let y = self.eigenmode(n)?.sample_checked(grid)?;
        let z = if k == n {
            y.map(|_, v| v.conj())
        } else {
            self.adjoint_eigenmode(k)?.sample_checked(grid)?
        };
        Ok(y.inner(&z))
    }

    /// `c_n = (y_n, z_n)` by quadrature; analytically `c^{-1/3} Ai'(-t_n)^2`.
    pub fn biorth_constant(&self, n: usize, grid: &Arc<Grid>) -> Result<Complex64> {
        self.biorth_pairing(n, n, grid)
    }

    /// Truncation point `(t_N + 15) / (|c|^{1/3} cos(gamma/3))`, extended until
    /// `|Ai(-t_N + x c^{1/3})|` has decayed by `e^{-36}`.
    pub fn default_truncation(&self, n_max: usize) -> Result<f64> {
        let t = airy_zero(n_max.max(1))?;
        Ok(self.truncation_for_offset(t))
    }

    /// As [`default_truncation`](Self::default_truncation) for a generic
    /// offset `Ai(-offset + x c^{1/3})`.
    pub fn truncation_for_offset(&self, offset: f64) -> f64 {
        let s = self.c_cbrt;
        let mut x = (offset.max(0.0) + 15.0) / (s.norm() * (self.gamma / 3.0).cos());
        for _ in 0..200 {
            if decay_exponent(s * x - offset) >= TRUNCATION_DECAY {
                break;
            }
            x *= 1.1;
        }
        x
    }

    /// Smallest `x` on a geometric scan at which `|Ai(x c^{1/3} - shift)|` has
    /// fallen `e^{36}` below its largest value on `[0, x]`.
    pub fn truncation_for_shift(&self, shift: Complex64) -> f64 {
        let s = self.c_cbrt;
        let mut floor = decay_exponent(-shift);
        let mut x = 0.25 / s.norm();
        let mut prev = 0.0;
        for _ in 0..400 {
            for k in 1..=8 {
                let xi = prev + (x - prev) * k as f64 / 8.0;
                floor = floor.min(decay_exponent(s * xi - shift));
            }
            if decay_exponent(s * x - shift) - floor >= TRUNCATION_DECAY {
                break;
            }
            prev = x;
            x *= 1.1;
        }
        x
    }

    /// Grid resolving `y_1 .. y_{n_max}` and their adjoints: truncation from
    /// [`default_truncation`](Self::default_truncation), panels at most a
    /// quarter of the local oscillation period.
    pub fn grid_for_modes(&self, n_max: usize) -> Result<Arc<Grid>> {
        let t = airy_zero(n_max.max(1))?;
        let x_max = self.truncation_for_offset(t);
        let period = 2.0 * PI / t.max(1.0).sqrt() / self.c_cbrt.norm();
        let panel = (0.25 * period).min(0.5);
        Ok(Arc::new(Grid::with_panel_length(x_max, panel, DEFAULT_ORDER)?))
    }

    pub fn numerical_range_sector(&self) -> Sector {
        Sector::from_gamma(self.gamma)
    }

    /// `(int |y'|^2 + c int x |y|^2) / int |y|^2` with `y'` from the panel
    /// interpolant.
    pub fn rayleigh_quotient(&self, y: &GridFunction) -> Result<Complex64> {
        let grid = y.grid();
        let norm_sq = y.norm().powi(2);
        if norm_sq == 0.0 || !norm_sq.is_finite() {
            return Err(Error::ZeroNorm);
        }
        let dy = y.derivative();
        let kinetic = dy.norm().powi(2);
        let potential: f64 = grid
            .nodes()
            .iter()
            .zip(grid.weights())
            .zip(y.values())
            .map(|((x, w), v)| x * w * v.norm_sqr())
            .sum();
        Ok((Complex64::new(kinetic, 0.0) + self.c * potential) / norm_sq)
    }
}

/// `Re (2/3) w^{3/2}`, the decay rate of `|Ai(w)|`.
fn decay_exponent(w: Complex64) -> f64 {
    (w * w.sqrt()).re * (2.0 / 3.0)
}

fn check_x(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("x = {x} must be a finite nonnegative real")))
    }
}

/// `x -> Ai(-t + x * slope)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenmode {
    pub t: f64,
    pub slope: Complex64,
}

impl Eigenmode {
    pub fn eval(&self, x: f64) -> Complex64 {
        ai_scaled(Complex64::new(-self.t, 0.0) + self.slope * x)
            .value_scaled()
            .to_complex_lossy()
    }

    pub fn eval_with_derivative(&self, x: f64) -> (Complex64, Complex64) {
        let p = ai_scaled(Complex64::new(-self.t, 0.0) + self.slope * x);
        (
            p.value_scaled().to_complex_lossy(),
            p.derivative_scaled().to_complex_lossy() * self.slope,
        )
    }

    pub fn sample(&self, grid: &Arc<Grid>) -> GridFunction {
        GridFunction::sample(grid.clone(), |x| self.eval(x))
    }

    /// Samples and rejects grids whose end point is not in the decayed tail.
    pub fn sample_checked(&self, grid: &Arc<Grid>) -> Result<GridFunction> {
        let f = self.sample(grid);
        let tail = self.eval(grid.x_max()).norm();
        let sup = f.sup_norm();
        if tail > TAIL_TOLERANCE * sup {
            return Err(Error::TruncationInsufficient(format!(
                "eigenmode tail {tail:e} at x_max = {} exceeds {TAIL_TOLERANCE:e} of sup {sup:e}",
                grid.x_max()
            )));
        }
        Ok(f)
    }
}

/// First `n` eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSlice {
    /// `t_1 < t_2 < ...` with `Ai(-t_n) = 0`.
    pub t: Vec<f64>,
    /// `lambda_n = t_n c^{2/3}`.
    pub lambda: Vec<Complex64>,
}

/// Closed sector `{lambda : lower_arg <= arg lambda <= upper_arg}` (with 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    pub lower_arg: f64,
    pub upper_arg: f64,
}

impl Sector {
    /// Sector bounded by the rays `arg = 0` and `arg = gamma`.
    pub fn from_gamma(gamma: f64) -> Self {
        if gamma >= 0.0 {
            Sector {
                lower_arg: 0.0,
                upper_arg: gamma,
            }
        } else {
            Sector {
                lower_arg: gamma,
                upper_arg: 0.0,
            }
        }
    }

    pub fn width(&self) -> f64 {
        self.upper_arg - self.lower_arg
    }

    /// Membership with angular slack `tol` (radians).
    pub fn contains(&self, lambda: Complex64, tol: f64) -> bool {
        if lambda.norm() == 0.0 {
            return true;
        }
        let a = lambda.arg();
        a >= self.lower_arg - tol && a <= self.upper_arg + tol
    }

    /// Euclidean distance from `lambda` to the sector.
    pub fn distance(&self, lambda: Complex64) -> f64 {
        if self.contains(lambda, 0.0) {
            return 0.0;
        }
        let ray = |theta: f64| {
            let dir = Complex64::from_polar(1.0, theta);
            let along = (lambda * dir.conj()).re;
            if along <= 0.0 {
                lambda.norm()
            } else {
                (lambda * dir.conj()).im.abs()
            }
        };
        ray(self.lower_arg).min(ray(self.upper_arg))
    }
}
