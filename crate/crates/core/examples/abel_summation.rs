//! Abel summation `S(t, f)` with damping `exp(-(e^{-i gamma/2} lambda_k)^beta t)`
//! for a combination of eigenfunctions, as `t` decreases.

use std::f64::consts::PI;

use airy_spectra::completeness::{abel_beta_mid, abel_exponents, abel_sum, abel_window};
use airy_spectra::grid::GridFunction;
use airy_spectra::operator::AiryOperator;
use num_complex::Complex64;

fn main() -> airy_spectra::Result<()> {
    let gamma = PI / 2.0;
    let op = AiryOperator::new(Complex64::from_polar(1.0, gamma))?;
    let grid = op.grid_for_modes(8)?;

    let (lo, hi) = abel_window(gamma)?;
    let beta = abel_beta_mid(gamma)?;
    println!("admissible beta in ({lo:.3}, {hi:.3}); using {beta:.3}");
    for (k, e) in abel_exponents(&op, beta, 5)?.iter().enumerate() {
        println!("  exponent {}: {e:.6}", k + 1);
    }

    let mut f = GridFunction::zeros(grid.clone());
    for (k, a) in [1.0, -0.5, 0.25].iter().enumerate() {
        let y = op.eigenmode(k + 1)?.sample(&grid);
        f = f.axpy(Complex64::new(a / y.norm(), 0.0), &y);
    }
    println!("\n{:>10} {:>14}", "t", "||S(t,f) - f||");
    for t in [1e-1, 1e-2, 1e-3, 1e-4, 1e-6] {
        let s = abel_sum(&op, &f, t, beta, 5)?;
        println!("{t:>10.0e} {:>14.4e}", s.axpy(Complex64::new(-1.0, 0.0), &f).norm());
    }
    Ok(())
}
