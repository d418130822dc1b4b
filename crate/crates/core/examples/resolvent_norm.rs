//! Solves `(L_c - lambda) y = f` with the Green kernel and compares the
//! resolvent norm with the inverse distance to the numerical range.

use std::f64::consts::PI;

use airy_spectra::grid::GridFunction;
use airy_spectra::operator::AiryOperator;
use airy_spectra::resolvent::{green_apply_shifted, resolvent_norm, sector_distance};
use num_complex::Complex64;

fn main() -> airy_spectra::Result<()> {
    let op = AiryOperator::new(Complex64::new(0.0, 1.0))?;
    let grid = op.grid_for_modes(10)?;
    let f = GridFunction::sample(grid.clone(), |x| Complex64::new(x * (-x * x).exp(), 0.0));

    let lambda = Complex64::new(-2.0, 1.0);
    let sol = green_apply_shifted(&op, &f, lambda)?;
    let ypp = sol.dy.derivative();
    let residual = sol
        .y
        .map(|x, v| -ypp.interpolate(x) + op.c() * x * v - lambda * v)
        .axpy(Complex64::new(-1.0, 0.0), &f)
        .norm();
    println!("lambda = {lambda}: ||y|| = {:.6e}, ||(L - lambda) y - f|| = {residual:.2e}", sol.y.norm());

    println!("\n{:>28} {:>14} {:>14} {:>10}", "lambda", "||R||", "1/dist", "ratio");
    for theta in [0.6, 0.8, 1.0, 1.2, 1.6] {
        let lambda = Complex64::from_polar(4.0, theta * PI);
        let norm = resolvent_norm(&op, lambda, 384)?;
        let d = sector_distance(&op, lambda);
        println!(
            "{:>28} {:>14.6e} {:>14.6e} {:>10.4}",
            format!("{lambda:.4}"),
            norm,
            1.0 / d,
            norm * d
        );
    }
    Ok(())
}
