//! Eigenvalues `lambda_n = t_n c^{2/3}` of the complex Airy operator and a
//! check of the eigenpair residual on a quadrature grid.

use std::f64::consts::PI;

use airy_spectra::operator::AiryOperator;
use num_complex::Complex64;

fn main() -> airy_spectra::Result<()> {
    let op = AiryOperator::new(Complex64::from_polar(1.0, PI / 3.0))?;
    let slice = op.spectrum(8)?;
    let grid = op.grid_for_modes(8)?;

    println!("c = {:.6}, arg c = {:.6}", op.c(), op.gamma());
    println!("{:>3} {:>18} {:>36} {:>12}", "n", "t_n", "lambda_n", "residual");
    for (n, (t, lambda)) in slice.t.iter().zip(&slice.lambda).enumerate() {
        let y = op.eigenmode(n + 1)?.sample_checked(&grid)?;
        let ypp = y.derivative().derivative();
        let residual = y
            .map(|x, v| -ypp.interpolate(x) + op.c() * x * v - lambda * v)
            .norm()
            / y.norm();
        println!(
            "{:>3} {:>18.12} {:>36} {:>12.2e}",
            n + 1,
            t,
            format!("{lambda:.10}"),
            residual
        );
    }

    let q = op.rayleigh_quotient(&op.eigenmode(1)?.sample(&grid))?;
    println!("\nRayleigh quotient of y_1: {q:.10}");
    let sector = op.numerical_range_sector();
    println!(
        "numerical range sector: arg in [{:.4}, {:.4}]",
        sector.lower_arg, sector.upper_arg
    );
    Ok(())
}
