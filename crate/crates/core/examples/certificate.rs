//! The function `F_0(w) = int Ai(w + c^{1/3} x) f(x) dx` vanishes at `w = -t_k`
//! exactly when `f` is orthogonal to the adjoint eigenfunction `z_k`.

use std::f64::consts::PI;

use airy_spectra::airy::airy_zero;
use airy_spectra::completeness::{eval_f0, orthogonalize_against_adjoint};
use airy_spectra::grid::GridFunction;
use airy_spectra::operator::AiryOperator;
use airy_spectra::sources::RandomBumps;
use num_complex::Complex64;

fn main() -> airy_spectra::Result<()> {
    let op = AiryOperator::new(Complex64::from_polar(1.0, PI / 3.0))?;
    let grid = op.grid_for_modes(10)?;
    let bumps = RandomBumps::new(11, 8.0);
    let f = GridFunction::sample(grid.clone(), |x| bumps.eval(x));
    let h = orthogonalize_against_adjoint(&op, &f, 4)?;

    println!("{:>3} {:>16} {:>16}", "k", "|F0(-t_k)| f", "|F0(-t_k)| h");
    for k in 1..=7 {
        let w = Complex64::new(-airy_zero(k)?, 0.0);
        println!(
            "{k:>3} {:>16.4e} {:>16.4e}",
            eval_f0(&op, &f, w)?.norm() / f.norm(),
            eval_f0(&op, &h, w)?.norm() / h.norm()
        );
    }
    println!("h is f with its components along z_1..z_4 removed");
    Ok(())
}
