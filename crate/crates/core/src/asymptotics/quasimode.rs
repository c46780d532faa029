//! Matched-asymptotics quasimodes for the finite well: a Dirichlet mode glued
//! to the exponential boundary layer, with an optional first-order interior
//! correction from the bordered reduction.
//!
//! Order 0:  u~ = E u_0 - h g G((r-a)/h) chi(r-a),  lambda~ = lambda_0,
//! where E extends by zero, g is the boundary radial derivative of u_0, G is
//! the model layer profile and chi the collar cutoff. The construction makes
//! the derivative jump at r = a cancel exactly, so the residual carries no
//! leading delta layer.
//!
//! Order 1 adds h*w with w from the bordered system for the cut-off boundary
//! source, and shifts the eigenvalue guess to lambda_0 + h lambda_1 with
//! lambda_1 = -||du_0/dn||^2.

use crate::asymptotics::cutoff::{
    collar_width, cutoff, cutoff_breakpoints, cutoff_derivative, cutoff_second_derivative,
};
use crate::asymptotics::grushin::{grushin_solve, BoundarySource, SectorBasis};
use crate::asymptotics::model::model_green;
use crate::dirichlet::{dirichlet_mode, normal_derivative_norm, DirichletMode};
use crate::domain::{Mode, WellDomain, WellParams};
use crate::error::{Error, Result};
use crate::oracle::discrete_hminus1_norm;
use crate::quadrature::GaussRule;

/// Default truncation of the sector eigenbasis for the order-1 correction.
pub const DEFAULT_BASIS_SIZE: usize = 256;

/// An explicit approximate eigenpair of the well operator.
pub struct Quasimode {
    pub domain: WellDomain,
    pub mode: Mode,
    pub params: WellParams,
    pub order: u32,
    /// The eigenvalue guess lambda_0 (order 0) or lambda_0 + h lambda_1.
    pub lambda_tilde: f64,
    pub lambda1: f64,
    pub collar: f64,
    u0: DirichletMode,
    g_hat: f64,
    correction: Option<Correction>,
}

struct Correction {
    basis: SectorBasis,
    w_coeffs: Vec<f64>,
    /// Coefficients of (-Delta_D - lambda_0) w in the retained basis.
    image_coeffs: Vec<f64>,
    /// Radial derivative of w at the boundary.
    w_boundary_derivative: f64,
}

/// Residual norms of a quasimode, measured on a uniform sampling grid with
/// at least 16 points per layer width h.
pub struct QuasimodeResidual {
    /// L^2 norm of the smooth residual part.
    pub l2: f64,
    /// Discrete H^-1 norm of smooth part plus the boundary delta layer.
    pub hminus1: f64,
    /// Coefficient of the delta at r = a left by the construction (0 at
    /// order 0 by exact cancellation; h * w'(a) at order 1).
    pub delta_coeff: f64,
    /// L^2 norm of the quasimode itself (1 + O(h)).
    pub norm: f64,
}

/// Build the quasimode of the given order (0 or 1) for a simple mode.
///
/// Requires 2h < collar width so the layer decays substantially inside the
/// cutoff plateau;
/// degenerate ball sectors are refused (on the disk the pair does not split
/// at first order, so either member could be corrected, but an explicit
/// basis choice is out of scope here).
pub fn build_quasimode(
    domain: &WellDomain,
    mode: &Mode,
    params: &WellParams,
    order: u32,
    basis_size: usize,
) -> Result<Quasimode> {
    if order > 1 {
        return Err(Error::Config(format!("quasimode order {order} not supported (0 or 1)")));
    }
    if let Some(nu) = mode.sector.nu() {
        let m = domain.sector_multiplicity(nu);
        if m > 1 {
            return Err(Error::Degenerate(format!(
                "sector nu={nu} has multiplicity {m}; quasimodes need a simple mode"
            )));
        }
    }
    let a = domain.radius();
    let collar = collar_width(a);
    if 2.0 * params.h >= collar {
        return Err(Error::Config(format!(
            "layer width h={} too large for the collar {collar}: need 2h < collar",
            params.h
        )));
    }
    let u0 = dirichlet_mode(domain, mode)?;
    let g_hat = u0.eval_derivative(a)?;
    let lambda1 = -normal_derivative_norm(domain, mode)?.normal_derivative_norm_sq;
    let correction = if order >= 1 {
        let src = BoundarySource::new(domain, mode)?;
        let basis = SectorBasis::new(domain, mode.sector, basis_size)?;
        let f = basis.expand(&|r| src.eval(r), &src.breakpoints());
        let sol = grushin_solve(&basis, mode.l, &f)?;
        let image: Vec<f64> = sol
            .w_coeffs
            .iter()
            .zip(&basis.modes)
            .map(|(w, m)| w * (m.lambda - u0.lambda))
            .collect();
        let w_boundary_derivative = basis.boundary_derivative_sum(&sol.w_coeffs)?;
        Some(Correction {
            basis,
            w_coeffs: sol.w_coeffs,
            image_coeffs: image,
            w_boundary_derivative,
        })
    } else {
        None
    };
    let lambda_tilde = if order >= 1 {
        u0.lambda + params.h * lambda1
    } else {
        u0.lambda
    };
    Ok(Quasimode {
        domain: *domain,
        mode: *mode,
        params: *params,
        order,
        lambda_tilde,
        lambda1,
        collar,
        u0,
        g_hat,
        correction,
    })
}

impl Quasimode {
    /// The radial profile at r >= 0 (parity extension implied on intervals).
    pub fn eval(&self, r: f64) -> Result<f64> {
        let a = self.domain.radius();
        let h = self.params.h;
        let rho = r - a;
        let layer = -h * self.g_hat * model_green(rho / h) * cutoff(rho, self.collar);
        if r > a {
            return Ok(layer);
        }
        let mut v = self.u0.eval(r)? + layer;
        if let Some(c) = &self.correction {
            v += h * c.basis.eval_sum(&c.w_coeffs, r)?;
        }
        Ok(v)
    }

    /// L^2 norm of the quasimode by piecewise quadrature.
    pub fn norm(&self) -> Result<f64> {
        let a = self.domain.radius();
        let rule = GaussRule::n256();
        let breaks = cutoff_breakpoints(a, self.collar);
        let r_max = a + self.collar;
        let weight_pow = match self.domain {
            WellDomain::Interval { .. } => 0,
            WellDomain::Ball { dim, .. } => (dim - 1) as i32,
        };
        let factor = match self.domain {
            WellDomain::Interval { .. } => 2.0,
            WellDomain::Ball { .. } => 1.0,
        };
        let mut err = None;
        let sq = rule.integrate_piecewise(0.0, r_max, &breaks, |r| match self.eval(r) {
            Ok(u) => u * u * r.powi(weight_pow),
            Err(e) => {
                err = Some(e);
                0.0
            }
        });
        err.map_or(Ok((factor * sq).sqrt()), Err)
    }

    /// The smooth part of (P_h - lambda~) u~ at radius r, in closed form
    /// (the delta layer at r = a is reported separately).
    pub fn residual_at(&self, r: f64) -> Result<f64> {
        let a = self.domain.radius();
        let h = self.params.h;
        let rho = r - a;
        let (curv, ang) = match self.domain {
            WellDomain::Interval { .. } => (0.0, 0.0),
            WellDomain::Ball { dim, .. } => {
                let nu = self.mode.sector.nu().unwrap() as f64;
                let d = dim as f64;
                ((d - 1.0) / r, nu * (nu + d - 2.0) / (r * r))
            }
        };
        let x0 = cutoff(rho, self.collar);
        let x1 = cutoff_derivative(rho, self.collar);
        let x2 = cutoff_second_derivative(rho, self.collar);
        if r > a {
            // Layer term only; X = e^{-rho/h} chi, potential h^{-2}.
            let e = (-rho / h).exp();
            let bracket = -x2 + 2.0 * x1 / h - curv * x1 + curv * x0 / h
                + (ang - self.lambda_tilde) * x0;
            return Ok(-h * self.g_hat * e * bracket);
        }
        // Inside: Dirichlet part, plateau layer (G = 1), optional correction.
        let mut res = (self.u0.lambda - self.lambda_tilde) * self.u0.eval(r)?;
        let bracket = -x2 - curv * x1 + (ang - self.lambda_tilde) * x0;
        res += -h * self.g_hat * bracket;
        if let Some(c) = &self.correction {
            // (-Delta - lambda~)(h w) = h [(-Delta_D - lambda_0) w
            //                              + (lambda_0 - lambda~) w].
            let image = c.basis.eval_sum(&c.image_coeffs, r)?;
            let w = c.basis.eval_sum(&c.w_coeffs, r)?;
            res += h * (image + (self.u0.lambda - self.lambda_tilde) * w);
        }
        Ok(res)
    }

    /// Coefficient of the boundary delta layer in the residual: the negated
    /// jump of the radial derivative across r = a.
    pub fn residual_delta_coeff(&self) -> f64 {
        match &self.correction {
            None => 0.0,
            Some(c) => self.params.h * c.w_boundary_derivative,
        }
    }

    /// Sample the residual on a uniform grid and return its L^2 and discrete
    /// H^-1 norms (with the delta layer injected symbolically into the
    /// latter), plus the quasimode norm.
    pub fn residual_norms(&self) -> Result<QuasimodeResidual> {
        let a = self.domain.radius();
        let h = self.params.h;
        // At least 16 sample points per layer width, with a on the grid.
        let target = (a.min(h) / 32.0).min(h / 16.0);
        let k = (a / target).ceil().max(1.0);
        let delta = a / k;
        let r_max = a + self.collar + 1.0;
        let (offset, factor, weight_pow) = match self.domain {
            // Line nodes i*delta; the parity factor 2 counts both halves.
            WellDomain::Interval { .. } => (0.0, 2.0, 0),
            // Cell centers (i - 1/2)*delta keep the angular term finite.
            WellDomain::Ball { dim, .. } => (-0.5, 1.0, (dim - 1) as i32),
        };
        let n = ((r_max / delta).ceil() as usize).max(2);
        let mut samples = Vec::with_capacity(n);
        let mut l2_sq = 0.0;
        let mut delta_node = 0;
        let mut best = f64::INFINITY;
        for i in 1..=n {
            let r = (i as f64 + offset) * delta;
            let w = r.powi(weight_pow);
            let v = self.residual_at(r)?;
            l2_sq += factor * delta * w * v * v;
            // Symmetrized sample for the discrete H^-1 oracle.
            samples.push(w.sqrt() * v);
            if (r - a).abs() < best {
                best = (r - a).abs();
                delta_node = i - 1;
            }
        }
        let delta_coeff = self.residual_delta_coeff();
        let sym_delta_coeff = delta_coeff * a.powi(weight_pow).sqrt();
        let hm1 = discrete_hminus1_norm(&samples, sym_delta_coeff, delta_node, delta)?;
        Ok(QuasimodeResidual {
            l2: l2_sq.sqrt(),
            hminus1: factor.sqrt() * hm1,
            delta_coeff,
            norm: self.norm()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::secular::solve_mode;

    fn interval_quasimode(h: f64, order: u32, basis: usize) -> Quasimode {
        let dom = WellDomain::interval(2.0).unwrap();
        let p = WellParams::new(h).unwrap();
        build_quasimode(&dom, &Mode::interval_nth(1), &p, order, basis).unwrap()
    }

    #[test]
    fn profile_matches_dirichlet_mode_away_from_boundary() {
        let q = interval_quasimode(0.05, 0, 8);
        let u0 = dirichlet_mode(&q.domain, &q.mode).unwrap();
        for &x in &[0.0, 0.4, 1.0, 1.4] {
            assert!((q.eval(x).unwrap() - u0.eval(x).unwrap()).abs() < 1e-12);
        }
        // In the layer the profile is below the Dirichlet mode by ~ h*g.
        let v = q.eval(2.0).unwrap();
        assert!((v - (-0.05 * q.g_hat)).abs() < 1e-12);
        // Outside it decays exponentially.
        assert!(q.eval(2.2).unwrap().abs() < v.abs());
        assert_eq!(q.eval(2.0 + q.collar).unwrap(), 0.0);
    }

    #[test]
    fn profile_is_continuous_at_boundary() {
        for order in [0, 1] {
            let q = interval_quasimode(0.05, order, 32);
            let below = q.eval(2.0 - 1e-10).unwrap();
            let above = q.eval(2.0 + 1e-10).unwrap();
            assert!((below - above).abs() < 1e-8, "order {order}");
        }
    }

    #[test]
    fn norm_close_to_one() {
        for &h in &[0.1, 0.05, 0.025] {
            let q = interval_quasimode(h, 0, 8);
            let n = q.norm().unwrap();
            assert!((n - 1.0).abs() < 2.0 * h, "h={h}: norm {n}");
        }
        // The deviation from 1 shrinks with h.
        let n1 = (interval_quasimode(0.1, 0, 8).norm().unwrap() - 1.0).abs();
        let n2 = (interval_quasimode(0.025, 0, 8).norm().unwrap() - 1.0).abs();
        assert!(n2 < n1);
    }

    #[test]
    fn order0_residual_is_order_h() {
        let mut prev = f64::INFINITY;
        for &h in &[0.1, 0.05, 0.025] {
            let q = interval_quasimode(h, 0, 8);
            let res = q.residual_norms().unwrap();
            assert_eq!(res.delta_coeff, 0.0);
            // H^-1 residual decreases with h and stays O(h).
            assert!(res.hminus1 < prev, "h={h}");
            assert!(res.hminus1 < 10.0 * h, "h={h}: {}", res.hminus1);
            prev = res.hminus1;
        }
    }

    #[test]
    fn order1_eigenvalue_guess_beats_order0() {
        let dom = WellDomain::interval(2.0).unwrap();
        let mode = Mode::interval_nth(1);
        for &h in &[0.1, 0.05] {
            let p = WellParams::new(h).unwrap();
            let exact = solve_mode(&dom, &p, &mode).unwrap();
            let q0 = build_quasimode(&dom, &mode, &p, 0, 8).unwrap();
            let q1 = build_quasimode(&dom, &mode, &p, 1, 64).unwrap();
            let d0 = (q0.lambda_tilde - exact).abs();
            let d1 = (q1.lambda_tilde - exact).abs();
            assert!(d1 < 0.2 * d0, "h={h}: order1 {d1} vs order0 {d0}");
        }
    }

    #[test]
    fn order1_distance_is_second_order() {
        let dom = WellDomain::interval(2.0).unwrap();
        let mode = Mode::interval_nth(1);
        let mut dists = Vec::new();
        for &h in &[0.1, 0.05, 0.025] {
            let p = WellParams::new(h).unwrap();
            let exact = solve_mode(&dom, &p, &mode).unwrap();
            let q1 = build_quasimode(&dom, &mode, &p, 1, 64).unwrap();
            dists.push((q1.lambda_tilde - exact).abs());
        }
        // Log-log slope between successive halvings is ~2.
        for w in dists.windows(2) {
            let slope = (w[0] / w[1]).log2();
            assert!(slope > 1.7 && slope < 2.4, "slope {slope} from {dists:?}");
        }
    }

    #[test]
    fn ball_quasimode_residual_shrinks() {
        let dom = WellDomain::ball(2.0, 2).unwrap();
        let mode = Mode::ball(0, 1);
        let mut prev = f64::INFINITY;
        for &h in &[0.1, 0.05] {
            let p = WellParams::new(h).unwrap();
            let q = build_quasimode(&dom, &mode, &p, 0, 8).unwrap();
            let res = q.residual_norms().unwrap();
            assert!(res.hminus1 < prev, "h={h}: {}", res.hminus1);
            assert!((res.norm - 1.0).abs() < 2.0 * h);
            prev = res.hminus1;
        }
    }

    #[test]
    fn preconditions_enforced() {
        let dom = WellDomain::interval(2.0).unwrap();
        let p = WellParams::new(0.3).unwrap();
        // 2h = 0.6 exceeds the collar 0.5.
        assert!(build_quasimode(&dom, &Mode::interval_nth(1), &p, 0, 8).is_err());
        let disk = WellDomain::ball(2.0, 2).unwrap();
        let p = WellParams::new(0.05).unwrap();
        assert!(matches!(
            build_quasimode(&disk, &Mode::ball(1, 1), &p, 0, 8),
            Err(Error::Degenerate(_))
        ));
        assert!(build_quasimode(&disk, &Mode::ball(0, 1), &p, 2, 8).is_err());
    }
}
