//! Bessel functions of the first kind J_nu for real order nu >= 0.
//!
//! Three regimes:
//!   - power series for small x (no cancellation growth there),
//!   - normalized backward (Miller) recurrence for moderate x,
//!   - Hankel asymptotic expansion for x >= 40 + nu^2.

use super::gamma::{gamma, ln_gamma};
use crate::error::{Error, Result};

fn check_args(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::Domain(format!("Bessel order nu={nu} must be finite and >= 0")));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("Bessel argument x={x} must be finite and >= 0")));
    }
    Ok(())
}

/// J_nu(x) for nu >= 0, x >= 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_args(nu, x)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x <= series_cutoff(nu) {
        Ok(series(nu, x))
    } else if x >= 40.0 + nu * nu {
        Ok(asymptotic(nu, x))
    } else {
        Ok(miller(nu, x))
    }
}

/// J_nu'(x), via J_nu' = (J_{nu-1} - J_{nu+1})/2 for nu >= 1,
/// J_0' = -J_1, and J_nu' = (nu/x) J_nu - J_{nu+1} for 0 < nu < 1.
pub fn bessel_j_derivative(nu: f64, x: f64) -> Result<f64> {
    check_args(nu, x)?;
    if x == 0.0 {
        return Ok(if nu == 1.0 { 0.5 } else { 0.0 });
    }
    if nu == 0.0 {
        return Ok(-bessel_j(1.0, x)?);
    }
    if nu >= 1.0 {
        Ok(0.5 * (bessel_j(nu - 1.0, x)? - bessel_j(nu + 1.0, x)?))
    } else {
        Ok(nu / x * bessel_j(nu, x)? - bessel_j(nu + 1.0, x)?)
    }
}

fn series_cutoff(nu: f64) -> f64 {
    // The leading term ratio (x/2)^2/(nu+1) stays O(1) here, so the
    // alternating sum never amplifies roundoff beyond ~1e-13 relative.
    9.0f64.max(2.0 * (nu + 1.0).sqrt())
}

fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    // t0 = (x/2)^nu / Gamma(nu+1), in log form so large nu cannot overflow.
    let t0 = (nu * half.ln() - ln_gamma(nu + 1.0)).exp();
    if t0 == 0.0 {
        return 0.0;
    }
    let q = half * half;
    let mut term = t0;
    let mut sum = t0;
    for k in 0..500 {
        let kf = k as f64;
        term *= -q / ((kf + 1.0) * (nu + kf + 1.0));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(t0 * 1e-4) {
            break;
        }
    }
    sum
}

/// Backward recurrence with the generalized Neumann-series normalization
/// (x/2)^mu = sum_k (mu+2k) Gamma(mu+k)/k! * J_{mu+2k}(x),  0 <= mu < 1.
fn miller(nu: f64, x: f64) -> f64 {
    let n = nu.floor() as usize;
    let mu = nu - n as f64;

    // Start far enough above max(nu, x) that the unnormalized downward
    // recurrence has amplified the seed by >> 1/epsilon.
    let mut start = (n + 2).max(x.ceil() as usize + 2);
    loop {
        let t = start as f64;
        let decay = t * (2.0 * t / (std::f64::consts::E * x)).ln();
        if decay > 46.0 {
            break;
        }
        start += 1 + start / 64;
    }

    let mut vals = vec![0.0f64; start + 2];
    vals[start + 1] = 0.0;
    vals[start] = 1e-290;
    for k in (1..=start).rev() {
        let order = mu + k as f64;
        let next = 2.0 * order / x * vals[k] - vals[k + 1];
        vals[k - 1] = next;
        if next.abs() > 1e250 {
            for v in vals[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }

    // Normalization sum over even offsets, c_m = (mu+2m) Gamma(mu+m) / m!.
    let g = gamma(mu + 1.0); // c_0 = mu * Gamma(mu) = Gamma(mu+1); equals 1 at mu = 0
    let mut sum = 0.0;
    let mut coeff = g;
    let mut m = 0usize;
    while 2 * m <= start {
        sum += coeff * vals[2 * m];
        let mf = m as f64;
        coeff = if m == 0 {
            // The ratio formula has a 0/0 at mu = 0; c_1 = (mu+2) Gamma(mu+1)
            // directly covers both cases (-> 2 at mu = 0).
            (mu + 2.0) * g
        } else {
            coeff * (mu + 2.0 * mf + 2.0) / (mu + 2.0 * mf) * (mu + mf) / (mf + 1.0)
        };
        m += 1;
    }
    let scale = (0.5 * x).powf(mu) / sum;
    vals[n] * scale
}

/// Hankel's large-x expansion.
fn asymptotic(nu: f64, x: f64) -> f64 {
    let omega = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    let mu4 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut u = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..=40u32 {
        let kf = k as f64;
        u *= (mu4 - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf * x);
        if u.abs() >= prev {
            break; // divergent tail reached
        }
        prev = u.abs();
        let m = k / 2;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            q += sign * u;
        } else {
            p += sign * u;
        }
        if u.abs() < 1e-18 {
            break;
        }
    }
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * omega.cos() - q * omega.sin())
}
