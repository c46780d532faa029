//! Exponentially scaled real values.
//!
//! Modified Bessel functions K_nu((h^-2 - lambda)^(1/2) r) underflow to zero
//! long before h gets interestingly small, so they are carried around as
//! `mantissa * exp(log_scale)` and the common exponential factor is divided
//! out of secular determinants before any sign is taken.

/// A real number represented as `mantissa * exp(log_scale)`.
///
/// Normalized so that `|mantissa|` is in `[1, e)`, or the value is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    pub mantissa: f64,
    pub log_scale: f64,
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        mantissa: 0.0,
        log_scale: 0.0,
    };

    /// Build from an unnormalized mantissa/scale pair.
    pub fn new(mantissa: f64, log_scale: f64) -> Self {
        assert!(mantissa.is_finite(), "ScaledValue mantissa must be finite");
        if mantissa == 0.0 {
            return Self::ZERO;
        }
        let shift = mantissa.abs().ln().floor();
        Self {
            mantissa: mantissa / shift.exp(),
            log_scale: log_scale + shift,
        }
    }

    pub fn from_value(value: f64) -> Self {
        Self::new(value, 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    /// The represented value; may overflow or underflow f64.
    pub fn value(&self) -> f64 {
        self.mantissa * self.log_scale.exp()
    }

    /// ln |value|; -inf for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.abs().ln() + self.log_scale
        }
    }

    pub fn signum(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mantissa: -self.mantissa,
            log_scale: self.log_scale,
        }
    }

    pub fn scale_by(&self, factor: f64) -> Self {
        if factor == 0.0 || self.is_zero() {
            return Self::ZERO;
        }
        Self::new(self.mantissa * factor, self.log_scale)
    }

    /// `mantissa * exp(log_scale - reference)`: the value with a common
    /// exponential factor `exp(reference)` divided out.
    pub fn value_relative_to(&self, reference: f64) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.mantissa * (self.log_scale - reference).exp()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_keeps_value() {
        let v = ScaledValue::new(12345.678, -3.0);
        assert!((v.value() - 12345.678 * (-3.0f64).exp()).abs() < 1e-9);
        assert!(v.mantissa.abs() >= 1.0 && v.mantissa.abs() < std::f64::consts::E);
    }

    #[test]
    fn zero_is_canonical() {
        let z = ScaledValue::new(0.0, 42.0);
        assert!(z.is_zero());
        assert_eq!(z.value(), 0.0);
        assert_eq!(z.signum(), 0.0);
    }

    #[test]
    fn tiny_values_survive() {
        // e^-1000 underflows f64 but is representable here.
        let v = ScaledValue::new(2.5, -1000.0);
        assert!((v.ln_abs() - (2.5f64.ln() - 1000.0)).abs() < 1e-12);
        assert_eq!(v.signum(), 1.0);
    }

    #[test]
    fn relative_values_divide_out_common_factor() {
        let a = ScaledValue::new(1.5, -500.0);
        let b = ScaledValue::new(-2.0, -500.5);
        let r = a.ln_abs().max(b.ln_abs());
        let (va, vb) = (a.value_relative_to(r), b.value_relative_to(r));
        assert!((va.abs().max(vb.abs()) - 1.0).abs() < 1.0);
        assert!((va / vb + 1.5 / 2.0 * 0.5f64.exp()).abs() < 1e-12);
    }
}
