use std::f64::consts::PI;

use num_complex::Complex64;

use super::ai;
use crate::error::{Error, Result};

const MAX_NEWTON: usize = 60;

/// Asymptotic location `[(3pi/2)(k - 1/4)]^{2/3}` of the k-th zero of `Ai(-x)`.
pub fn airy_zero_seed(k: usize) -> f64 {
    (1.5 * PI * (k as f64 - 0.25)).powf(2.0 / 3.0)
}

/// The k-th positive zero `t_k` of `Ai(-x)` (so `Ai(-t_k) = 0`), `k >= 1`.
pub fn airy_zero(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParameter("zero index must be >= 1".into()));
    }
    let mut t = airy_zero_seed(k);
    for _ in 0..MAX_NEWTON {
        let fv = ai(Complex64::new(-t, 0.0))?;
        let (a, ap) = (fv.value.re, fv.derivative.re);
        let step = a / ap;
        t += step;
        if step.abs() <= 1e-9 * t {
            let fv = ai(Complex64::new(-t, 0.0))?;
            if fv.value.re.abs() <= 1e-12 * fv.derivative.re.abs() {
                return Ok(t);
            }
        }
    }
    Err(Error::NonConvergence {
        what: format!("Newton iteration for Airy zero {k}"),
        iterations: MAX_NEWTON,
    })
}

/// `t_1 < ... < t_n`.
pub fn airy_zeros(n: usize) -> Result<Vec<f64>> {
    (1..=n).map(airy_zero).collect()
}
