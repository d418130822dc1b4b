//! Complex numbers carried together with an explicit real exponent.
//!
//! A [`Scaled`] value `m` with exponent `s` stands for `m * e^s`. Airy
//! functions grow or decay like `exp(±(2/3) z^{3/2})`; keeping the exponent
//! apart lets products such as `Ai(x) U(t)` be formed without ever
//! materialising either factor.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest exponent magnitude that is materialised without error.
pub const MAX_EXPONENT: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub mantissa: Complex64,
    pub exponent: f64,
}

impl Scaled {
    pub const ZERO: Scaled = Scaled {
        mantissa: Complex64::new(0.0, 0.0),
        exponent: 0.0,
    };

    pub fn new(mantissa: Complex64, exponent: f64) -> Self {
        Scaled { mantissa, exponent }
    }

    pub fn unscaled(value: Complex64) -> Self {
        Scaled {
            mantissa: value,
            exponent: 0.0,
        }
    }

    pub fn scale(self, factor: Complex64) -> Self {
        Scaled::new(self.mantissa * factor, self.exponent)
    }

    /// Re-expresses the value relative to exponent `exponent`.
    pub fn mantissa_at(self, exponent: f64) -> Complex64 {
        if self.mantissa == Complex64::new(0.0, 0.0) {
            return self.mantissa;
        }
        self.mantissa * (self.exponent - exponent).exp()
    }

    pub fn to_complex(self) -> Result<Complex64> {
        if self.mantissa == Complex64::new(0.0, 0.0) {
            return Ok(self.mantissa);
        }
        if self.exponent.abs() > MAX_EXPONENT {
            return Err(Error::Overflow {
                exponent: self.exponent,
            });
        }
        Ok(self.mantissa * self.exponent.exp())
    }

    /// Converts without the range check; very small values flush to zero.
    pub fn to_complex_lossy(self) -> Complex64 {
        self.mantissa_at(0.0)
    }

    /// `ln |value|`, or `-inf` for zero.
    pub fn log_abs(self) -> f64 {
        self.mantissa.norm().ln() + self.exponent
    }

    /// Moves magnitude into the exponent so the mantissa has modulus near 1.
    pub fn normalized(self) -> Self {
        let m = self.mantissa.norm();
        if m == 0.0 || !m.is_finite() {
            return self;
        }
        let shift = m.ln();
        Scaled::new(self.mantissa / m, self.exponent + shift)
    }
}

impl std::ops::Mul for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled::new(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl std::ops::Add for Scaled {
    type Output = Scaled;
    fn add(self, rhs: Scaled) -> Scaled {
        let zero = Complex64::new(0.0, 0.0);
        if self.mantissa == zero {
            return rhs;
        }
        if rhs.mantissa == zero {
            return self;
        }
        let e = self.exponent.max(rhs.exponent);
        Scaled::new(self.mantissa_at(e) + rhs.mantissa_at(e), e)
    }
}

impl std::ops::Neg for Scaled {
    type Output = Scaled;
    fn neg(self) -> Scaled {
        Scaled::new(-self.mantissa, self.exponent)
    }
}

impl std::ops::Sub for Scaled {
    type Output = Scaled;
    fn sub(self, rhs: Scaled) -> Scaled {
        self + (-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_cancels_exponents() {
        let a = Scaled::new(Complex64::new(2.0, 0.0), 1000.0);
        let b = Scaled::new(Complex64::new(0.0, 3.0), -999.0);
        let p = (a * b).to_complex().unwrap();
        assert!((p - Complex64::new(0.0, 6.0 * 1f64.exp())).norm() < 1e-12);
        assert!(a.to_complex().is_err());
    }

    #[test]
    fn sum_aligns_to_larger_exponent() {
        let a = Scaled::new(Complex64::new(1.0, 0.0), 2.0);
        let b = Scaled::new(Complex64::new(1.0, 0.0), 0.0);
        let s = a + b;
        assert_eq!(s.exponent, 2.0);
        let expect = 2f64.exp() + 1.0;
        assert!((s.to_complex().unwrap().re - expect).abs() < 1e-12);
    }
}
