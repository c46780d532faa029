//! The half-line boundary-layer model operator in stretched coordinates.
//!
//! In the stretched variable rho_hat = (r - a)/h the leading boundary-layer
//! equation is (-d^2/d rho_hat^2 + 1_{rho_hat > 0}) u = v on the line, with u
//! bounded on the left and decaying on the right. Its fundamental solution
//! with a unit delta source at rho_hat = 0 is the profile G below; general
//! right-hand sides (an exponentially decaying smooth part on rho_hat > 0
//! plus a multiple of the delta at 0) are solved in closed form by variation
//! of parameters.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::GaussRule;

/// Truncation of the Duhamel integrals: e^{-s} factors make the tail beyond
/// this length smaller than machine precision for admissible right-hand
/// sides.
const TAIL_LENGTH: f64 = 60.0;

/// Panel width for composite Gauss-Legendre on the half line.
const PANEL: f64 = 5.0;

/// The model layer profile: 1 for rho_hat <= 0, e^{-rho_hat} for
/// rho_hat > 0. Solves the model equation with right-hand side delta_0 and a
/// bounded left tail.
pub fn model_green(rho_hat: f64) -> f64 {
    if rho_hat <= 0.0 {
        1.0
    } else {
        (-rho_hat).exp()
    }
}

/// Right-hand side for the model solver: a smooth part supported on
/// rho_hat > 0 (must decay at infinity) plus delta_coeff * delta_0.
pub struct LayerRHS {
    pub smooth: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub delta_coeff: f64,
}

impl LayerRHS {
    /// A pure delta source.
    pub fn delta(coeff: f64) -> Self {
        LayerRHS { smooth: Arc::new(|_| 0.0), delta_coeff: coeff }
    }

    /// A smooth source with no delta component.
    pub fn smooth(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        LayerRHS { smooth: Arc::new(f), delta_coeff: 0.0 }
    }
}

/// The solution of the model equation: constant `left_value` on
/// rho_hat <= 0, and on rho_hat > 0 the sum of a decaying particular part
/// and `decay_coeff * e^{-rho_hat}`.
pub struct LayerFunction {
    pub left_value: f64,
    decay_coeff: f64,
    smooth: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl LayerFunction {
    /// Evaluate the solution at rho_hat.
    pub fn eval(&self, rho_hat: f64) -> f64 {
        if rho_hat <= 0.0 {
            return self.left_value;
        }
        let rule = GaussRule::n256();
        // 1/2 * int_0^rho e^{-(rho - s)} v(s) ds, substituted u = rho - s so
        // the kernel decays in the integration variable.
        let len1 = rho_hat.min(TAIL_LENGTH);
        let term1 = 0.5
            * composite(rule, len1, |u| (-u).exp() * (self.smooth)(rho_hat - u));
        // 1/2 * int_rho^inf e^{rho - s} v(s) ds, substituted t = s - rho.
        let term2 = 0.5
            * composite(rule, TAIL_LENGTH, |t| (-t).exp() * (self.smooth)(rho_hat + t));
        term1 + term2 + self.decay_coeff * (-rho_hat).exp()
    }

    /// Right derivative at 0+ (the left derivative is 0).
    pub fn right_derivative_at_zero(&self) -> f64 {
        let rule = GaussRule::n256();
        let i = composite(rule, TAIL_LENGTH, |s| (-s).exp() * (self.smooth)(s));
        // d/drho [1/2 e^{rho} int_rho^inf e^{-s} v] at 0 is I/2 - v(0)/2;
        // the first Duhamel term contributes +v(0)/2; the decaying tail -A.
        0.5 * i - self.decay_coeff
    }
}

/// Composite Gauss-Legendre of f over [0, length] in fixed panels.
fn composite(rule: &GaussRule, length: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
    let mut sum = 0.0;
    let mut lo = 0.0;
    while lo < length {
        let hi = (lo + PANEL).min(length);
        sum += rule.integrate(lo, hi, &mut f);
        lo = hi;
    }
    sum
}

/// Solve the model equation for the given right-hand side.
///
/// The solution is
///   u(rho) = 1/2 int_0^inf e^{-|rho - s|} v(s) ds + A e^{-rho}   (rho > 0),
///   u(rho) = I + c                                                (rho <= 0),
/// with I = int_0^inf e^{-s} v(s) ds, c the delta coefficient, and
/// A = I/2 + c chosen so that the derivative jumps by exactly -c at 0.
///
/// Rejects right-hand sides whose smooth part does not decay: the sampled
/// magnitude beyond rho = 20 must be negligible against the near field.
pub fn model_solve(rhs: &LayerRHS) -> Result<LayerFunction> {
    let sample_max = |lo: f64, hi: f64, n: usize| -> f64 {
        (0..=n)
            .map(|k| (rhs.smooth)(lo + (hi - lo) * k as f64 / n as f64).abs())
            .fold(0.0, f64::max)
    };
    let near = sample_max(0.0, 5.0, 50);
    let far = sample_max(20.0, TAIL_LENGTH, 80);
    let tail = sample_max(40.0, TAIL_LENGTH, 40);
    let mid = sample_max(15.0, 25.0, 40);
    if far > 0.1 * (1.0 + near) || tail > mid + 1e-12 * (1.0 + near) {
        return Err(Error::Config(format!(
            "smooth right-hand side does not decay: sup |v| = {far} beyond rho = 20"
        )));
    }
    let rule = GaussRule::n256();
    let i = composite(rule, TAIL_LENGTH, |s| (-s).exp() * (rhs.smooth)(s));
    Ok(LayerFunction {
        left_value: i + rhs.delta_coeff,
        decay_coeff: 0.5 * i + rhs.delta_coeff,
        smooth: rhs.smooth.clone(),
    })
}
