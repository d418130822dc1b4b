//! Sweeps `gamma = |arg c|` and reports the root `alpha0` of `eta` and
//! whether the completeness threshold holds.

use std::f64::consts::PI;

use airy_spectra::completeness::{completeness_verdict, eta};

fn main() -> airy_spectra::Result<()> {
    println!("{:>10} {:>10} {:>12} {:>8}", "gamma/pi", "eta(0)", "alpha0/pi", "ok");
    for k in 1..=19 {
        let gamma = k as f64 * PI / 20.0;
        let geo = completeness_verdict(gamma)?;
        println!(
            "{:>10.3} {:>10.4} {:>12} {:>8}",
            gamma / PI,
            eta(gamma, 0.0)?,
            geo.alpha0.map_or("-".into(), |a| format!("{:.6}", a / PI)),
            geo.threshold_ok
        );
    }
    println!("\n{}", completeness_verdict(5.0 * PI / 6.0)?.to_json());
    Ok(())
}
