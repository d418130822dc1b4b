//! Maclaurin branch: `Ai = c1 f - c2 g`, `U = 2 sqrt(3) c2 g`, with `f`, `g`
//! the two power-series solutions of `y'' = z y` normalised at the origin.
//! Sums are carried in double-double so the cancellation in `c1 f - c2 g`
//! (up to `e^{(4/3)|z|^{3/2}}`) stays below `f64` resolution for `|z| <= 9`.

use num_complex::Complex64;

use super::FunctionValue;
use crate::dd::{CDd, Dd};

/// `Ai(0) = 1/(3^{2/3} Gamma(2/3))`.
const C1: Dd = Dd::new(0.3550280538878172, 2.05233632436212e-17);
/// `-Ai'(0) = 1/(3^{1/3} Gamma(1/3))`.
const C2: Dd = Dd::new(0.2588194037928068, -2.522243111610832e-17);
/// `U'(0) = 2 3^{1/6} / Gamma(1/3) = 2 sqrt(3) C2`.
const U_SCALE: Dd = Dd::new(0.8965767147076528, -5.072647554883461e-17);

const MAX_TERMS: usize = 400;
const STOP_RATIO: f64 = 1e-34;

/// Evaluates `(Ai, Ai')` and `(U, U')` at `z` from the power series.
pub fn maclaurin(z: Complex64) -> (FunctionValue, FunctionValue) {
    let zd = CDd::from_c64(z);
    let z2 = zd * zd;
    let z3 = z2 * zd;
    let z3_norm = z.norm().powi(3);

    // f = sum a_k z^{3k}, f' = z^2 sum d_k z^{3(k-1)}
    // g = z sum b_k z^{3k}, g' = sum (3k+1) b_k z^{3k}
    let mut f_term = CDd::real(Dd::ONE);
    let mut g_term = CDd::real(Dd::ONE);
    let mut fp_term = CDd::real(Dd::from_f64(0.5));
    let mut f = f_term;
    let mut g = g_term;
    let mut fp = fp_term;
    let mut gp = g_term;
    let mut peak = 1.0f64;

    for k in 1..MAX_TERMS {
        let kf = k as f64;
        f_term = (f_term * z3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        g_term = (g_term * z3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        f = f + f_term;
        g = g + g_term;
        gp = gp + g_term.mul_f64(3.0 * kf + 1.0);
        if k >= 2 {
            fp_term = (fp_term * z3).div_f64((kf - 1.0) * (3.0 * kf - 1.0) * 3.0);
            fp = fp + fp_term;
        }
        let mag = f_term
            .approx_norm()
            .max(g_term.approx_norm() * (3.0 * kf + 1.0))
            .max(fp_term.approx_norm() * z3_norm.max(1.0));
        peak = peak.max(mag);
        let ratio = z3_norm / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        if ratio < 0.5 && mag <= STOP_RATIO * peak {
            break;
        }
    }

    let f_val = f;
    let g_val = zd * g;
    let fp_val = z2 * fp;
    let gp_val = gp;

    let ai = f_val.mul_dd(C1) - g_val.mul_dd(C2);
    let aip = fp_val.mul_dd(C1) - gp_val.mul_dd(C2);
    let u = g_val.mul_dd(U_SCALE);
    let up = gp_val.mul_dd(U_SCALE);
    (
        FunctionValue::new(ai.to_c64(), aip.to_c64()),
        FunctionValue::new(u.to_c64(), up.to_c64()),
    )
}
