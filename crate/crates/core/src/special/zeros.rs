//! Positive zeros j_{nu,l} of the Bessel function J_nu.

use super::bessel_j::{bessel_j, bessel_j_derivative};
use crate::error::{Error, Result};

/// The l-th positive zero of J_nu (l >= 1), to near machine precision.
///
/// Works by scanning for a sign change starting from a McMahon-style guess
/// (consecutive zeros are at least pi apart, so unit steps cannot skip one),
/// then bisecting and polishing with safeguarded Newton.
pub fn bessel_j_zero(nu: f64, l: usize) -> Result<f64> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::Domain(format!("Bessel order nu={nu} must be finite and >= 0")));
    }
    if l == 0 {
        return Err(Error::Domain("zero index l must be >= 1".into()));
    }
    let mut prev = 0.0;
    let mut zero = 0.0;
    for i in 1..=l {
        zero = next_zero(nu, i, prev)?;
        prev = zero;
    }
    Ok(zero)
}

/// The first `count` positive zeros of J_nu, ascending.
pub fn bessel_j_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    let mut prev = 0.0;
    for i in 1..=count {
        let z = next_zero(nu, i, prev)?;
        out.push(z);
        prev = z;
    }
    Ok(out)
}

fn next_zero(nu: f64, l: usize, prev: f64) -> Result<f64> {
    // The first sign change of J_nu past `lo` brackets the next zero.
    // J_nu > 0 on (0, j_{nu,1}) and consecutive zeros are more than 3 apart,
    // so unit steps starting below the target cannot skip a zero.
    let mut lo = if prev == 0.0 { nu } else { prev + 0.5 };

    // Scan with unit steps for a bracket.
    let mut f_lo = bessel_j(nu, lo)?;
    let mut hi;
    let mut f_hi;
    let mut steps = 0;
    loop {
        hi = lo + 1.0;
        f_hi = bessel_j(nu, hi)?;
        if f_lo == 0.0 {
            return polish(nu, lo, lo, hi);
        }
        if f_lo.signum() != f_hi.signum() {
            break;
        }
        lo = hi;
        f_lo = f_hi;
        steps += 1;
        if steps > 100_000 {
            return Err(Error::Solver(format!(
                "no sign change found searching for zero {l} of J_{nu}"
            )));
        }
    }

    // Bisection to a tight bracket, then Newton.
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = bessel_j(nu, mid)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-9 * hi {
            break;
        }
    }
    polish(nu, 0.5 * (lo + hi), lo, hi)
}

fn polish(nu: f64, start: f64, lo: f64, hi: f64) -> Result<f64> {
    let mut x = start;
    for _ in 0..8 {
        let f = bessel_j(nu, x)?;
        let df = bessel_j_derivative(nu, x)?;
        if df == 0.0 {
            break;
        }
        let step = f / df;
        let next = x - step;
        // Stay inside the bracket; bisect if Newton tries to leave it.
        x = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
        if step.abs() < 1e-15 * x {
            break;
        }
    }
    let residual = bessel_j(nu, x)?.abs();
    let slope = bessel_j_derivative(nu, x)?.abs().max(1.0);
    if residual > 1e-13 * slope {
        return Err(Error::Solver(format!(
            "zero refinement stalled at x={x} for J_{nu} (residual {residual:.3e})"
        )));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_first_zeros() {
        // j_{0,1..3} and j_{1,1}, standard reference values.
        assert!((bessel_j_zero(0.0, 1).unwrap() - 2.4048255576957728).abs() < 1e-12);
        assert!((bessel_j_zero(0.0, 2).unwrap() - 5.5200781102863106).abs() < 1e-12);
        assert!((bessel_j_zero(0.0, 3).unwrap() - 8.6537279129110122).abs() < 1e-12);
        assert!((bessel_j_zero(1.0, 1).unwrap() - 3.8317059702075123).abs() < 1e-12);
        assert!((bessel_j_zero(2.0, 1).unwrap() - 5.1356223018406826).abs() < 1e-12);
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        // J_{1/2}(x) proportional to sin(x): zeros at l*pi.
        for l in 1..=10 {
            let z = bessel_j_zero(0.5, l).unwrap();
            assert!((z - l as f64 * std::f64::consts::PI).abs() < 1e-11, "l={l}");
        }
    }

    #[test]
    fn zeros_interlace_across_consecutive_orders() {
        // j_{nu,l} < j_{nu+1,l} < j_{nu,l+1}
        for &nu in &[0.0, 1.0, 2.5, 7.0, 15.0] {
            let a = bessel_j_zeros(nu, 8).unwrap();
            let b = bessel_j_zeros(nu + 1.0, 8).unwrap();
            for l in 0..7 {
                assert!(a[l] < b[l] && b[l] < a[l + 1], "nu={nu} l={}", l + 1);
            }
        }
    }

    #[test]
    fn spacing_approaches_pi() {
        let z = bessel_j_zeros(3.0, 40).unwrap();
        let gap = z[39] - z[38];
        assert!((gap - std::f64::consts::PI).abs() < 1e-3);
    }

    #[test]
    fn high_order_first_zero() {
        // j_{nu,1} ~ nu + 1.8557 nu^{1/3} for large nu; must exceed nu.
        for &nu in &[10.0, 25.0, 60.0] {
            let z = bessel_j_zero(nu, 1).unwrap();
            assert!(z > nu + 1.8 * nu.powf(1.0 / 3.0), "nu={nu} z={z}");
            assert!(z < nu + 3.0 * nu.powf(1.0 / 3.0), "nu={nu} z={z}");
            assert!(bessel_j(nu, z).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn batch_matches_single() {
        let batch = bessel_j_zeros(1.5, 6).unwrap();
        for (i, &z) in batch.iter().enumerate() {
            assert_eq!(z, bessel_j_zero(1.5, i + 1).unwrap());
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(bessel_j_zero(-1.0, 1).is_err());
        assert!(bessel_j_zero(0.0, 0).is_err());
    }
}
