//! Values of Ai and U across the complex plane, the first Airy zeros, and
//! the derivative polynomials `Ai^(n) = P_n Ai + Q_n Ai'`.

use airy_spectra::airy::{ai, airy_zeros, derivative_polynomials, u, WRONSKIAN};
use num_complex::Complex64;

fn main() -> airy_spectra::Result<()> {
    println!("{:>16} {:>44} {:>44}", "z", "Ai(z)", "U(z)");
    for z in [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-4.0, 0.0),
        Complex64::new(2.0, 3.0),
        Complex64::new(-9.0, 0.5),
        Complex64::new(20.0, -1.0),
    ] {
        let a = ai(z)?;
        let b = u(z)?;
        let w = a.value * b.derivative - a.derivative * b.value;
        println!(
            "{:>16} {:>44} {:>44}   W*pi - 1 = {:.1e}",
            format!("{z}"),
            format!("{:.12e}", a.value),
            format!("{:.12e}", b.value),
            (w / WRONSKIAN - 1.0).norm()
        );
    }

    println!("\nzeros of Ai(-t):");
    for (k, t) in airy_zeros(6)?.iter().enumerate() {
        println!("  t_{} = {t:.15}", k + 1);
    }

    println!("\nderivative polynomials (ascending coefficients):");
    for n in 0..=6 {
        let p = derivative_polynomials(n)?;
        println!("  n = {n}: P = {:?}, Q = {:?}", p.p_coeffs, p.q_coeffs);
    }
    Ok(())
}
