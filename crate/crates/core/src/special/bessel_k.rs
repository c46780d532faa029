//! Modified Bessel functions of the second kind K_nu, exponentially scaled.
//!
//! K_nu(x) ~ sqrt(pi/2x) e^{-x} decays fast; at the arguments arising from a
//! deep well ((h^-2 - lambda)^(1/2) * r with small h) a plain f64 value
//! underflows, so everything is returned as a [`ScaledValue`].
//!
//! Strategy: reduce to order mu in [-1/2, 1/2], evaluate K_mu and K_{mu+1}
//! (Temme's series for x <= 2, a Steed-type continued fraction for x > 2),
//! then climb to the target order with the stable upward recurrence
//! K_{s+1} = K_{s-1} + (2s/x) K_s, rescaling as needed.

use super::gamma::temme_gammas;
use crate::error::{Error, Result};
use crate::scaled::ScaledValue;

/// K_nu(x) for nu >= 0, x > 0, as mantissa * exp(log_scale).
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<ScaledValue> {
    let (k_nu, _) = bessel_k_pair(nu, x)?;
    Ok(k_nu)
}

/// K_nu'(x) = -(K_{nu-1}(x) + K_{nu+1}(x)) / 2, scaled.
///
/// For nu < 1 the symmetry K_{-s} = K_s supplies K_{nu-1} = K_{1-nu}.
pub fn bessel_k_derivative_scaled(nu: f64, x: f64) -> Result<ScaledValue> {
    let (_, k_nu_p1) = bessel_k_pair(nu, x)?;
    let k_nu_m1 = if nu >= 1.0 {
        bessel_k_pair(nu - 1.0, x)?.0
    } else {
        bessel_k_pair(1.0 - nu, x)?.0
    };
    // Sum of two positive values in scaled form.
    let r = k_nu_m1.ln_abs().max(k_nu_p1.ln_abs());
    let s = k_nu_m1.value_relative_to(r) + k_nu_p1.value_relative_to(r);
    Ok(ScaledValue::new(-0.5 * s, r))
}

/// (K_nu(x), K_{nu+1}(x)) both scaled, sharing one evaluation of the base pair.
pub fn bessel_k_pair(nu: f64, x: f64) -> Result<(ScaledValue, ScaledValue)> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::Domain(format!("Bessel order nu={nu} must be finite and >= 0")));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("Bessel K argument x={x} must be finite and > 0")));
    }
    let n = (nu + 0.5).floor() as usize; // nu = n + mu with mu in [-1/2, 1/2)
    let mu = nu - n as f64;

    // Base pair (K_mu, K_{mu+1}) as mantissa * exp(log_base).
    let (mut k_lo, mut k_hi, log_base) = if x <= 2.0 {
        let (a, b) = temme_series(mu, x);
        (a, b, 0.0)
    } else {
        let (a, b) = continued_fraction(mu, x);
        (a, b, -x)
    };

    // Climb: K_{s+1} = K_{s-1} + (2s/x) K_s for s = mu+1, ..., mu+n-1.
    let mut log_extra = 0.0;
    for j in 1..n {
        let s = mu + j as f64;
        let next = k_lo + 2.0 * s / x * k_hi;
        k_lo = k_hi;
        k_hi = next;
        if k_hi > 1e270 {
            k_lo *= 1e-270;
            k_hi *= 1e-270;
            log_extra += 270.0 * std::f64::consts::LN_10;
        }
    }
    let log_total = log_base + log_extra;
    if n == 0 {
        // Target order is mu itself; K_{nu+1} = K_{mu+1}.
        Ok((
            ScaledValue::new(k_lo, log_total),
            ScaledValue::new(k_hi, log_total),
        ))
    } else {
        // After the loop k_hi = K_{mu+n} = K_nu; one more step gives K_{nu+1}.
        let k_next = k_lo + 2.0 * nu / x * k_hi;
        Ok((
            ScaledValue::new(k_hi, log_total),
            ScaledValue::new(k_next, log_total),
        ))
    }
}

/// Temme's series for (K_mu, K_{mu+1}), |mu| <= 1/2, 0 < x <= 2. Unscaled.
fn temme_series(mu: f64, x: f64) -> (f64, f64) {
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let xx = 0.5 * x;
    let lnx2 = xx.ln();
    let d = -mu * lnx2; // so e^d = (x/2)^{-mu}
    let e = d.exp();
    // fact = mu*pi/sin(mu*pi), -> 1 as mu -> 0.
    let pimu = std::f64::consts::PI * mu;
    let fact = if pimu.abs() < 1e-8 {
        1.0 + pimu * pimu / 6.0
    } else {
        pimu / pimu.sin()
    };
    // ff = f_0 = fact * (gam1*cosh(d) + gam2*ln(2/x)... ) per the standard recipe:
    let sinh_term = if d.abs() < 1e-8 {
        // sinh(d)/d -> 1
        1.0 + d * d / 6.0
    } else {
        d.sinh() / d
    };
    let mut ff = fact * (gam1 * d.cosh() + gam2 * (-lnx2) * sinh_term);
    let x2 = xx * xx;
    let mut sum = ff;
    let mut p = 0.5 * e / gampl; // p_0 = (1/2)(x/2)^{-mu} Gamma(1+mu)
    let mut q = 0.5 / (e * gammi); // q_0 = (1/2)(x/2)^{mu} Gamma(1-mu)
    let mut sum1 = p;
    let mut c = 1.0;
    for i in 1..=400 {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c *= x2 / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - fi * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    let k_mu = sum;
    let k_mu1 = sum1 * 2.0 / x;
    (k_mu, k_mu1)
}

/// Steed-type continued fraction for the pair (e^x K_mu, e^x K_{mu+1}),
/// |mu| <= 1/2, x > 2; the caller reattaches the e^{-x} factor symbolically.
fn continued_fraction(mu: f64, x: f64) -> (f64, f64) {
    const EPS: f64 = 1e-16;
    let a1 = 0.25 - mu * mu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = delh;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..=10000u32 {
        let fi = f64::from(i);
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h = a1 * h;
    // e^x K_mu = sqrt(pi/(2x)) / s
    let k_mu = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
    let k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
    (k_mu, k_mu1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: K_nu(x) = integral_0^inf e^{-x cosh t} cosh(nu t) dt,
    /// by wide trapezoid on the doubly-exponentially decaying integrand.
    fn integral_oracle(nu: f64, x: f64) -> f64 {
        let dt = 1e-3f64;
        let mut sum = 0.5 * (-x).exp(); // t = 0 term has weight 1/2
        let mut t = dt;
        loop {
            let term = (-x * t.cosh()).exp() * (nu * t).cosh();
            sum += term;
            if term < 1e-320 || t > 60.0 {
                break;
            }
            t += dt;
        }
        sum * dt
    }

    fn value(nu: f64, x: f64) -> f64 {
        bessel_k_scaled(nu, x).unwrap().value()
    }

    #[test]
    fn known_values() {
        // K_0(1) and K_1(1), standard reference constants.
        assert!((value(0.0, 1.0) - 0.42102443824070833334).abs() < 1e-14);
        assert!((value(1.0, 1.0) - 0.60190723019723457474).abs() < 1e-14);
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for &x in &[0.5, 1.0, 2.0, 5.0, 20.0] {
            let want = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x as f64).exp();
            assert!((value(0.5, x) - want).abs() < 1e-14 * want, "x={x}");
        }
    }

    #[test]
    fn matches_integral_oracle() {
        for &(nu, x) in &[
            (0.0, 0.5),
            (0.0, 3.0),
            (1.0, 1.5),
            (2.5, 2.0),
            (4.0, 7.0),
            (7.3, 4.0),
            (10.0, 12.0),
        ] {
            let got = value(nu, x);
            let want = integral_oracle(nu, x);
            assert!(
                ((got - want) / want).abs() < 1e-6,
                "nu={nu} x={x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn recurrence_consistency() {
        // K_{nu+1} - K_{nu-1} = (2 nu / x) K_nu
        for &nu in &[1.0, 2.0, 3.5, 9.0] {
            for &x in &[0.7, 1.9, 2.1, 8.0, 30.0] {
                let lo = value(nu - 1.0, x);
                let mid = value(nu, x);
                let hi = value(nu + 1.0, x);
                assert!(
                    (hi - lo - 2.0 * nu / x * mid).abs() < 1e-12 * hi,
                    "nu={nu} x={x}"
                );
            }
        }
    }

    #[test]
    fn pair_is_consistent_with_single_calls() {
        for &(nu, x) in &[(0.0, 1.0), (0.3, 5.0), (2.0, 0.9), (6.5, 11.0)] {
            let (k, k1) = bessel_k_pair(nu, x).unwrap();
            let rel = (k.value() - value(nu, x)).abs() / value(nu, x);
            let rel1 = (k1.value() - value(nu + 1.0, x)).abs() / value(nu + 1.0, x);
            assert!(rel < 1e-14 && rel1 < 1e-13, "nu={nu} x={x}: {rel} {rel1}");
        }
    }

    #[test]
    fn huge_arguments_stay_representable() {
        // K_0(2000) ~ e^{-2000}, far below f64 underflow.
        let k = bessel_k_scaled(0.0, 2000.0).unwrap();
        assert!(!k.is_zero());
        // ln K_nu(x) ~ -x + ln sqrt(pi/2x) for large x.
        let want = -2000.0 + (std::f64::consts::PI / 4000.0f64).sqrt().ln();
        assert!((k.ln_abs() - want).abs() < 1e-3);
        assert_eq!(k.signum(), 1.0);
    }

    #[test]
    fn high_order_climb_is_positive_and_monotone() {
        // K_nu(x) increases with nu at fixed x.
        let mut prev = value(0.25, 3.0);
        for i in 1..=40 {
            let nu = 0.25 + i as f64;
            let cur = bessel_k_scaled(nu, 3.0).unwrap();
            assert_eq!(cur.signum(), 1.0);
            assert!(cur.ln_abs() > prev.ln(), "nu={nu}");
            prev = cur.value().min(f64::MAX);
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let step = 1e-6;
        for &(nu, x) in &[(0.0, 1.0), (0.5, 2.5), (1.0, 0.8), (3.0, 4.0), (5.5, 9.0)] {
            let d = bessel_k_derivative_scaled(nu, x).unwrap().value();
            let fd = (value(nu, x + step) - value(nu, x - step)) / (2.0 * step);
            assert!(
                ((d - fd) / fd).abs() < 1e-7,
                "nu={nu} x={x}: {d} vs {fd}"
            );
        }
    }

    #[test]
    fn invalid_arguments_rejected() {
        assert!(bessel_k_scaled(0.0, 0.0).is_err());
        assert!(bessel_k_scaled(-1.0, 1.0).is_err());
        assert!(bessel_k_scaled(1.0, -2.0).is_err());
    }
}
