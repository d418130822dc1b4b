//! Expands a source in the eigenfunctions `y_k` using the adjoint family
//! `z_k`, then tracks the partial-sum error as terms are added.

use std::f64::consts::PI;

use airy_spectra::completeness::{expand, partial_sum_error};
use airy_spectra::grid::GridFunction;
use airy_spectra::operator::AiryOperator;
use num_complex::Complex64;

fn main() -> airy_spectra::Result<()> {
    let op = AiryOperator::new(Complex64::from_polar(1.0, PI / 4.0))?;
    let grid = op.grid_for_modes(24)?;

    println!("biorthogonality (y_n, z_k) / (y_k, z_k):");
    let diag: Vec<Complex64> = (1..=4)
        .map(|k| op.biorth_constant(k, &grid))
        .collect::<Result<_, _>>()?;
    for n in 1..=4 {
        let mut row = String::new();
        for k in 1..=4 {
            let r = op.biorth_pairing(n, k, &grid)? / diag[k - 1];
            row.push_str(&format!("{:10.1e}", r.norm()));
        }
        println!("  {row}");
    }

    let f = GridFunction::sample(grid.clone(), |x| Complex64::new(x * x * (-x).exp() * (1.0 - 0.3 * x), 0.0));
    let a = expand(&op, &f, 6)?;
    println!("\nleading coefficients:");
    for (k, c) in a.coeffs.iter().enumerate() {
        println!("  a_{} = {c:.6}", k + 1);
    }
    println!("\n{:>4} {:>14}", "N", "||f - S_N||");
    for n in [1, 2, 4, 8, 12, 16, 20] {
        println!("{n:>4} {:>14.4e}", partial_sum_error(&op, &f, n)?);
    }
    println!("the eigenfunction series of a non-normal operator need not converge in norm;");
    println!("see the abel_summation example for a summation method that does");
    Ok(())
}
