//! Airy functions `Ai`, `U = Bi - sqrt(3) Ai` and their derivatives for complex
//! argument, zeros of `Ai`, and the polynomials expressing `Ai^{(n)}` through
//! `Ai` and `Ai'`.
//!
//! Evaluation strategy:
//!
//! * `|z| <= R_SWITCH`: Maclaurin series in double-double precision.
//! * `|z| > R_SWITCH`, `|arg z| <= 2pi/3`: asymptotic expansion.
//! * otherwise: connection identity between `Ai(z)`, `Ai(wz)`, `Ai(w^2 z)`.
//!
//! `U` is `2 sqrt(3) Ai'(0)`-normalised odd series near the origin and
//! `2i (Ai(wz) - Ai(w^2 z))` beyond it.

pub mod asymptotic;
mod polynomials;
pub mod series;
mod zeros;

use num_complex::Complex64;

use crate::error::Result;
use crate::scaled::Scaled;

pub use polynomials::{derivative_polynomials, PolyPair, MAX_DERIVATIVE_ORDER};
pub use zeros::{airy_zero, airy_zero_seed, airy_zeros};

/// Radius separating the series and asymptotic branches.
pub const R_SWITCH: f64 = 9.0;

/// `Ai(0)`.
pub const AI_ZERO: f64 = 0.355_028_053_887_817_2;
/// `Ai'(0)`.
pub const AI_PRIME_ZERO: f64 = -0.258_819_403_792_806_8;
/// `U'(0)`.
pub const U_PRIME_ZERO: f64 = 0.896_576_714_707_652_8;
/// `W(Ai, U) = Ai U' - Ai' U`.
pub const WRONSKIAN: f64 = std::f64::consts::FRAC_1_PI;

/// A special-function value and its derivative at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionValue {
    pub value: Complex64,
    pub derivative: Complex64,
}

impl FunctionValue {
    pub fn new(value: Complex64, derivative: Complex64) -> Self {
        FunctionValue { value, derivative }
    }
}

/// `(value, derivative) * e^{exponent}` with one shared real exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledPair {
    pub value: Complex64,
    pub derivative: Complex64,
    pub exponent: f64,
}

impl ScaledPair {
    pub const ZERO: ScaledPair = ScaledPair {
        value: Complex64::new(0.0, 0.0),
        derivative: Complex64::new(0.0, 0.0),
        exponent: 0.0,
    };

    pub fn new(value: Complex64, derivative: Complex64, exponent: f64) -> Self {
        ScaledPair {
            value,
            derivative,
            exponent,
        }
    }

    pub fn unscaled(fv: FunctionValue) -> Self {
        ScaledPair::new(fv.value, fv.derivative, 0.0)
    }

    pub fn value_scaled(&self) -> Scaled {
        Scaled::new(self.value, self.exponent)
    }

    pub fn derivative_scaled(&self) -> Scaled {
        Scaled::new(self.derivative, self.exponent)
    }

    pub fn value_at(&self, exponent: f64) -> Complex64 {
        self.value_scaled().mantissa_at(exponent)
    }

    pub fn derivative_at(&self, exponent: f64) -> Complex64 {
        self.derivative_scaled().mantissa_at(exponent)
    }

    /// Materialises the pair, failing when `e^{exponent}` is out of range.
    pub fn to_function_value(&self) -> Result<FunctionValue> {
        Ok(FunctionValue::new(
            self.value_scaled().to_complex()?,
            self.derivative_scaled().to_complex()?,
        ))
    }
}

fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(crate::error::Error::InvalidParameter(format!(
            "non-finite argument {z}"
        )))
    }
}

/// `(Ai(z), Ai'(z))` as mantissas with a common exponent. Never overflows.
pub fn ai_scaled(z: Complex64) -> ScaledPair {
    if z.norm() <= R_SWITCH {
        ScaledPair::unscaled(series::maclaurin(z).0)
    } else if asymptotic::in_direct_sector(z) {
        asymptotic::ai_expansion(z)
    } else {
        asymptotic::ai_triple(z)[0]
    }
}

/// `(U(z), U'(z))` as mantissas with a common exponent. Never overflows.
pub fn u_scaled(z: Complex64) -> ScaledPair {
    if z.norm() <= R_SWITCH {
        ScaledPair::unscaled(series::maclaurin(z).1)
    } else {
        u_from_triple(&asymptotic::ai_triple(z))
    }
}

/// Both `Ai` and `U` at `z`, sharing the work between them.
pub fn ai_u_scaled(z: Complex64) -> (ScaledPair, ScaledPair) {
    if z.norm() <= R_SWITCH {
        let (a, u) = series::maclaurin(z);
        (ScaledPair::unscaled(a), ScaledPair::unscaled(u))
    } else {
        let triple = asymptotic::ai_triple(z);
        (triple[0], u_from_triple(&triple))
    }
}

fn u_from_triple(t: &[ScaledPair; 3]) -> ScaledPair {
    use asymptotic::{OMEGA, OMEGA_BAR};
    let two_i = Complex64::new(0.0, 2.0);
    let e = t[1].exponent.max(t[2].exponent);
    let value = two_i * (t[1].value_at(e) - t[2].value_at(e));
    let derivative = two_i * (OMEGA * t[1].derivative_at(e) - OMEGA_BAR * t[2].derivative_at(e));
    ScaledPair::new(value, derivative, e)
}

/// `(Ai(z), Ai'(z))`.
///
/// Fails with [`crate::Error::Overflow`] when `|Re (2/3) z^{3/2}|` leaves the
/// `f64` exponent range; [`ai_scaled`] returns the mantissa/exponent form.
pub fn ai(z: Complex64) -> Result<FunctionValue> {
    check_finite(z)?;
    ai_scaled(z).to_function_value()
}

/// `(U(z), U'(z))` with `U = Bi - sqrt(3) Ai`, `U(0) = 0`, `W(Ai, U) = 1/pi`.
pub fn u(z: Complex64) -> Result<FunctionValue> {
    check_finite(z)?;
    u_scaled(z).to_function_value()
}
