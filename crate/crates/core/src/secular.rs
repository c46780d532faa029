//! Secular equations for the finite-depth well and their root solvers.
//!
//! An energy 0 < lambda < h^-2 is an eigenvalue of the well operator exactly
//! when the matching determinant of the interior oscillatory solution and the
//! exterior decaying solution vanishes. On intervals the determinant is
//! trigonometric; on balls it combines J_sigma inside with K_sigma outside,
//! where sigma = nu + d/2 - 1 is the effective Bessel order of the sector.

use crate::dirichlet::dirichlet_eigenvalue;
use crate::domain::{Eigenvalue, Mode, Parity, Sector, WellDomain, WellParams};
use crate::error::{Error, Result};
use crate::special::{
    bessel_j, bessel_j_derivative, bessel_k_derivative_scaled, bessel_k_scaled,
};

fn check_window(lambda: f64, params: &WellParams) -> Result<()> {
    if !(lambda > 0.0 && lambda < params.depth()) {
        return Err(Error::Domain(format!(
            "lambda={lambda} outside (0, {})",
            params.depth()
        )));
    }
    Ok(())
}

fn interval_radius(domain: &WellDomain) -> Result<f64> {
    match domain {
        WellDomain::Interval { radius } => Ok(*radius),
        WellDomain::Ball { .. } => Err(Error::Config("interval secular function on a ball".into())),
    }
}

/// Matching determinant of the even (cosine) interval modes:
/// (h^-2 - lambda)^(1/2) cos(lambda^(1/2) a) - lambda^(1/2) sin(lambda^(1/2) a).
pub fn secular_interval_even(lambda: f64, params: &WellParams, domain: &WellDomain) -> Result<f64> {
    check_window(lambda, params)?;
    let a = interval_radius(domain)?;
    let s = lambda.sqrt();
    let kappa = (params.depth() - lambda).sqrt();
    Ok(kappa * (s * a).cos() - s * (s * a).sin())
}

/// Matching determinant of the odd (sine) interval modes:
/// lambda^(1/2) cos(lambda^(1/2) a) + (h^-2 - lambda)^(1/2) sin(lambda^(1/2) a).
pub fn secular_interval_odd(lambda: f64, params: &WellParams, domain: &WellDomain) -> Result<f64> {
    check_window(lambda, params)?;
    let a = interval_radius(domain)?;
    let s = lambda.sqrt();
    let kappa = (params.depth() - lambda).sqrt();
    Ok(s * (s * a).cos() + kappa * (s * a).sin())
}

/// The product of the even and odd determinants in simplified closed form:
/// lambda^(1/2)(h^-2-lambda)^(1/2) cos(2 lambda^(1/2) a)
///   + ((h^-2 - 2 lambda)/2) sin(2 lambda^(1/2) a).
pub fn secular_interval_combined(
    lambda: f64,
    params: &WellParams,
    domain: &WellDomain,
) -> Result<f64> {
    check_window(lambda, params)?;
    let a = interval_radius(domain)?;
    let s = lambda.sqrt();
    let depth = params.depth();
    let kappa = (depth - lambda).sqrt();
    Ok(s * kappa * (2.0 * s * a).cos() + 0.5 * (depth - 2.0 * lambda) * (2.0 * s * a).sin())
}

/// Ball matching determinant for effective Bessel order sigma, with the
/// common exponential magnitude of the K factors divided out (the sign and
/// the zeros are unchanged; absolute magnitudes are not meaningful):
/// lambda^(1/2) J'_sigma(lambda^(1/2) a) K_sigma(kappa a)
///   - kappa J_sigma(lambda^(1/2) a) K'_sigma(kappa a),  kappa = (h^-2-lambda)^(1/2).
pub fn secular_ball_order(
    lambda: f64,
    params: &WellParams,
    radius: f64,
    sigma: f64,
) -> Result<f64> {
    check_window(lambda, params)?;
    let s = lambda.sqrt();
    let kappa = (params.depth() - lambda).sqrt();
    let j = bessel_j(sigma, s * radius)?;
    let dj = bessel_j_derivative(sigma, s * radius)?;
    let k = bessel_k_scaled(sigma, kappa * radius)?;
    let dk = bessel_k_derivative_scaled(sigma, kappa * radius)?;
    let reference = k.ln_abs().max(dk.ln_abs());
    Ok(s * dj * k.value_relative_to(reference) - kappa * j * dk.value_relative_to(reference))
}

/// Ball secular function of the angular sector nu.
///
/// For every dimension d >= 2 the full determinant built from the profiles
/// r^{1-d/2} J_sigma and r^{1-d/2} K_sigma reduces (the prefactor cross
/// terms cancel) to a positive multiple of the order-sigma determinant, so
/// one implementation covers d = 2 and d >= 3.
pub fn secular_ball(
    lambda: f64,
    params: &WellParams,
    domain: &WellDomain,
    nu: u32,
) -> Result<f64> {
    match domain {
        WellDomain::Ball { radius, .. } => {
            let sigma = domain.effective_order(nu)?;
            secular_ball_order(lambda, params, *radius, sigma)
        }
        WellDomain::Interval { .. } => {
            Err(Error::Config("ball secular function on an interval".into()))
        }
    }
}

/// The secular function of one sector as a closure-friendly evaluation.
pub fn secular_sector(
    lambda: f64,
    params: &WellParams,
    domain: &WellDomain,
    sector: Sector,
) -> Result<f64> {
    match sector {
        Sector::Parity(Parity::Even) => secular_interval_even(lambda, params, domain),
        Sector::Parity(Parity::Odd) => secular_interval_odd(lambda, params, domain),
        Sector::Angular(nu) => secular_ball(lambda, params, domain, nu),
    }
}

/// Refine a sign-change bracket [lo, hi] of f to a root: bisection to width
/// `width_tol`, then one safeguarded Newton polish with a numerical
/// derivative. Returns (root, |f(root)| / local scale).
fn refine_root(
    mut f: impl FnMut(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    width_tol: f64,
) -> Result<(f64, f64)> {
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    let local_scale = f_lo.abs().max(f_hi.abs()).max(f64::MIN_POSITIVE);
    if f_lo == 0.0 {
        return Ok((lo, 0.0));
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Solver(format!("not a sign-change bracket: [{lo}, {hi}]")));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi || hi - lo < width_tol {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok((mid, 0.0));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    // One Newton step with a centered numerical derivative.
    let dstep = (hi - lo).max(1e-9 * x.abs()).max(1e-300);
    let fp = f(x + dstep)?;
    let fm = f(x - dstep)?;
    let df = (fp - fm) / (2.0 * dstep);
    if df != 0.0 {
        let fx = f(x)?;
        let next = x - fx / df;
        if next > lo && next < hi {
            x = next;
        }
    }
    let residual = f(x)?.abs() / local_scale;
    Ok((x, residual))
}

/// All roots of one sector's secular function in (lambda_min, lambda_max],
/// by sign-change scanning with the given step, each refined.
fn sector_roots(
    domain: &WellDomain,
    params: &WellParams,
    sector: Sector,
    lambda_min: f64,
    lambda_max: f64,
    step: f64,
) -> Result<Vec<(f64, f64)>> {
    let f = |lam: f64| secular_sector(lam, params, domain, sector);
    let mut roots = Vec::new();
    let width_tol = 1e-13 * lambda_max;
    let mut lo = lambda_min;
    let mut f_lo = f(lo)?;
    while lo < lambda_max {
        let hi = (lo + step).min(lambda_max);
        let f_hi = f(hi)?;
        if f_lo == 0.0 {
            roots.push((lo, 0.0));
        } else if f_lo.signum() != f_hi.signum() {
            roots.push(refine_root(f, lo, hi, width_tol)?);
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(roots)
}

/// All eigenvalues of the well operator in (1e-12 h^-2, lambda_max]
/// (default lambda_max = h^-2/2), sorted ascending, with multiplicities.
///
/// The angular loop for balls runs until a sector produces no roots and its
/// lowest Dirichlet eigenvalue already exceeds the window (sector lowest
/// eigenvalues increase with nu, so no later sector can contribute either).
pub fn solve_spectrum(
    domain: &WellDomain,
    params: &WellParams,
    lambda_max: Option<f64>,
    nu_max: Option<u32>,
) -> Result<Vec<Eigenvalue>> {
    let depth = params.depth();
    let lambda_max = lambda_max.unwrap_or(0.5 * depth);
    if !(lambda_max > 0.0 && lambda_max <= 0.5 * depth) {
        return Err(Error::Config(format!(
            "lambda_max={lambda_max} must lie in (0, h^-2/2]"
        )));
    }
    let a = domain.radius();
    let lambda_min = 1e-12 * depth;
    let step = (std::f64::consts::PI.powi(2) / (8.0 * a * a)).min(lambda_max / 512.0);

    let mut out: Vec<Eigenvalue> = Vec::new();
    match domain {
        WellDomain::Interval { .. } => {
            for parity in [Parity::Even, Parity::Odd] {
                let sector = Sector::Parity(parity);
                for (l0, (lambda, residual)) in sector_roots(
                    domain, params, sector, lambda_min, lambda_max, step,
                )?
                .into_iter()
                .enumerate()
                {
                    out.push(Eigenvalue {
                        lambda,
                        multiplicity: 1,
                        mode: Mode { sector, l: l0 as u32 + 1 },
                        residual,
                    });
                }
            }
        }
        WellDomain::Ball { .. } => {
            let mut nu = 0u32;
            loop {
                if let Some(max) = nu_max {
                    if nu > max {
                        break;
                    }
                }
                let sector = Sector::Angular(nu);
                let roots =
                    sector_roots(domain, params, sector, lambda_min, lambda_max, step)?;
                let empty = roots.is_empty();
                for (l0, (lambda, residual)) in roots.into_iter().enumerate() {
                    out.push(Eigenvalue {
                        lambda,
                        multiplicity: domain.sector_multiplicity(nu),
                        mode: Mode { sector, l: l0 as u32 + 1 },
                        residual,
                    });
                }
                if empty {
                    let first_dirichlet =
                        dirichlet_eigenvalue(domain, &Mode::ball(nu, 1))?;
                    if first_dirichlet > lambda_max {
                        break;
                    }
                }
                nu += 1;
            }
        }
    }
    out.sort_by(|x, y| {
        (x.lambda, sector_key(x.mode.sector))
            .partial_cmp(&(y.lambda, sector_key(y.mode.sector)))
            .unwrap()
    });
    Ok(out)
}

fn sector_key(s: Sector) -> u32 {
    match s {
        Sector::Parity(Parity::Even) => 0,
        Sector::Parity(Parity::Odd) => 1,
        Sector::Angular(nu) => nu,
    }
}

/// The well eigenvalue of one specific mode, located just below its
/// Dirichlet limit by a downward scan (robust at small h, where the root
/// sits within O(h) of lambda^D and a global scan would be wasteful).
pub fn solve_mode(domain: &WellDomain, params: &WellParams, mode: &Mode) -> Result<f64> {
    let lambda_d = dirichlet_eigenvalue(domain, mode)?;
    let depth = params.depth();
    // Bound states sit strictly below the well depth; near birth the branch
    // exists even when lambda^D itself exceeds the depth.
    let top = lambda_d.min(depth * (1.0 - 1e-9));
    let lower = if mode.l > 1 {
        dirichlet_eigenvalue(domain, &Mode { sector: mode.sector, l: mode.l - 1 })?
    } else {
        1e-12 * depth
    };
    if lower >= top {
        // The previous branch's Dirichlet value is a lower bound for this
        // eigenvalue, so nothing can fit below the depth.
        return Err(Error::Solver(format!(
            "well depth {depth} too shallow for {mode:?}; mode not bound"
        )));
    }
    let f = |lam: f64| secular_sector(lam, params, domain, mode.sector);
    // The root lies in (lower, top); approach from above in steps scaled to
    // the expected O(h lambda^D) gap.
    let step = (params.h * lambda_d * 0.25).max(1e-9 * lambda_d);
    let mut hi = top * (1.0 - 1e-13);
    let mut f_hi = f(hi)?;
    loop {
        let lo = (hi - step).max(lower * (1.0 + 1e-13));
        if lo >= hi {
            return Err(Error::Solver(format!(
                "no secular root found in ({lower}, {lambda_d}) for {mode:?}"
            )));
        }
        let f_lo = f(lo)?;
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if f_lo.signum() != f_hi.signum() {
            let (root, _) = refine_root(f, lo, hi, 1e-14 * lambda_d)?;
            return Ok(root);
        }
        if lo <= lower * (1.0 + 2e-13) {
            return Err(Error::Solver(format!(
                "no secular root found in ({lower}, {lambda_d}) for {mode:?}"
            )));
        }
        hi = lo;
        f_hi = f_lo;
    }
}
