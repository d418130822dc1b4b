//! Computes `1/||R_c(lambda)||` on a lattice and writes it as CSV, then draws
//! a coarse contour map in the terminal.

use std::fs::File;
use std::io::BufWriter;

use airy_spectra::operator::AiryOperator;
use airy_spectra::resolvent::{pseudospectrum_grid, Region};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let op = AiryOperator::new(Complex64::new(0.0, 1.0))?;
    let region = Region::new(-2.0, 12.0, -1.0, 12.0)?;
    let (nx, ny) = (36, 24);
    let ps = pseudospectrum_grid(&op, region, (nx, ny), 128)?;

    let path = std::env::temp_dir().join("airy_pseudospectrum.csv");
    ps.write_csv(BufWriter::new(File::create(&path)?))?;
    println!("wrote {}", path.display());

    let glyph = |v: Option<f64>| match v {
        None => '?',
        Some(v) if v < 1e-3 => '#',
        Some(v) if v < 1e-2 => '+',
        Some(v) if v < 1e-1 => '.',
        Some(_) => ' ',
    };
    for j in (0..ny).rev() {
        let row: String = (0..nx).map(|i| glyph(ps.get(i, j))).collect();
        println!("{:>7.2} |{row}|", ps.im[j]);
    }
    println!("levels: '#' < 1e-3, '+' < 1e-2, '.' < 1e-1");
    for n in 1..=4 {
        println!("lambda_{n} = {:.4}", op.eigenvalue(n)?);
    }
    Ok(())
}
