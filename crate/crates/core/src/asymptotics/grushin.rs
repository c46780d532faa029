//! Rank-one bordered (Grushin) reduction of the eigenvalue perturbation
//! problem in a fixed angular/parity sector.
//!
//! Given a simple Dirichlet eigenpair (lambda_0, u_0) of a sector and a
//! source f in that sector, the bordered system
//!     (-Delta_D - lambda_0) w + gamma u_0 = f,   <w, u_0> = 0
//! has the unique solution gamma = <f, u_0>, w_k = f_k / (lambda_k -
//! lambda_0) in the sector eigenbasis. The first-order eigenvalue shift of
//! the finite well is -||du_0/dn||^2 on the boundary, which the bordered
//! system reproduces when f is the image of the cut-off boundary data.

use crate::asymptotics::cutoff::{
    collar_width, cutoff, cutoff_breakpoints, cutoff_derivative, cutoff_second_derivative,
};
use crate::dirichlet::{dirichlet_mode, normal_derivative_norm, DirichletMode};
use crate::domain::{Mode, Sector, WellDomain};
use crate::error::{Error, Result};
use crate::quadrature::GaussRule;

/// Relative gap below which two sector eigenvalues are treated as degenerate
/// and the bordered reduction refuses to divide.
const DEGENERACY_TOL: f64 = 1e-8;

/// A truncated Dirichlet eigenbasis of one angular/parity sector.
pub struct SectorBasis {
    pub domain: WellDomain,
    pub sector: Sector,
    pub modes: Vec<DirichletMode>,
}

impl SectorBasis {
    /// The first `count` modes (l = 1..=count) of the sector.
    pub fn new(domain: &WellDomain, sector: Sector, count: usize) -> Result<Self> {
        let modes = (1..=count as u32)
            .map(|l| dirichlet_mode(domain, &Mode { sector, l }))
            .collect::<Result<Vec<_>>>()?;
        Ok(SectorBasis { domain: *domain, sector, modes })
    }

    /// Sector inner product <f, g> of radial profiles: 2 int_0^a f g dx on
    /// intervals (parity doubles the half-line integral), int_0^a f g
    /// r^{d-1} dr on balls. Split at the given breakpoints.
    pub fn inner_product(
        &self,
        f: &dyn Fn(f64) -> f64,
        g: &dyn Fn(f64) -> f64,
        breakpoints: &[f64],
    ) -> f64 {
        let a = self.domain.radius();
        let rule = GaussRule::n512();
        match self.domain {
            WellDomain::Interval { .. } => {
                2.0 * rule.integrate_piecewise(0.0, a, breakpoints, |x| f(x) * g(x))
            }
            WellDomain::Ball { dim, .. } => {
                let p = (dim - 1) as i32;
                rule.integrate_piecewise(0.0, a, breakpoints, |r| f(r) * g(r) * r.powi(p))
            }
        }
    }

    /// Coefficients <f, u_l> for every retained mode.
    pub fn expand(&self, f: &dyn Fn(f64) -> f64, breakpoints: &[f64]) -> Vec<f64> {
        self.modes
            .iter()
            .map(|m| self.inner_product(f, &|r| m.eval(r).unwrap(), breakpoints))
            .collect()
    }

    /// Evaluate sum_l c_l u_l at r.
    pub fn eval_sum(&self, coeffs: &[f64], r: f64) -> Result<f64> {
        let mut s = 0.0;
        for (c, m) in coeffs.iter().zip(&self.modes) {
            if *c != 0.0 {
                s += c * m.eval(r)?;
            }
        }
        Ok(s)
    }

    /// Radial derivative of sum_l c_l u_l at the boundary r = a.
    pub fn boundary_derivative_sum(&self, coeffs: &[f64]) -> Result<f64> {
        let a = self.domain.radius();
        let mut s = 0.0;
        for (c, m) in coeffs.iter().zip(&self.modes) {
            if *c != 0.0 {
                s += c * m.eval_derivative(a)?;
            }
        }
        Ok(s)
    }
}

/// The solution of the bordered system in the truncated basis.
pub struct GrushinSolution {
    /// <f, u_0>: the scalar unknown of the bordered system.
    pub gamma: f64,
    /// Coefficients of w in the sector basis (entry of the distinguished
    /// mode is 0).
    pub w_coeffs: Vec<f64>,
    /// Index (0-based) of the distinguished mode in the basis.
    pub mode_index: usize,
}

/// Solve the bordered system for the distinguished mode l = mode_l given the
/// expansion coefficients of f in the same basis.
pub fn grushin_solve(
    basis: &SectorBasis,
    mode_l: u32,
    f_coeffs: &[f64],
) -> Result<GrushinSolution> {
    if mode_l == 0 || mode_l as usize > basis.modes.len() {
        return Err(Error::Config(format!(
            "distinguished mode l={mode_l} outside the retained basis of {} modes",
            basis.modes.len()
        )));
    }
    if f_coeffs.len() != basis.modes.len() {
        return Err(Error::Config("coefficient/basis length mismatch".into()));
    }
    let idx = (mode_l - 1) as usize;
    let lambda0 = basis.modes[idx].lambda;
    let mut w = vec![0.0; f_coeffs.len()];
    for (k, (fk, m)) in f_coeffs.iter().zip(&basis.modes).enumerate() {
        if k == idx {
            continue;
        }
        let gap = m.lambda - lambda0;
        if gap.abs() < DEGENERACY_TOL * lambda0 {
            return Err(Error::Degenerate(format!(
                "sector eigenvalue {} is degenerate with the distinguished mode {}",
                m.lambda, lambda0
            )));
        }
        w[k] = fk / gap;
    }
    Ok(GrushinSolution { gamma: f_coeffs[idx], w_coeffs: w, mode_index: idx })
}

/// The first-order coefficient of the eigenvalue expansion
/// lambda^h = lambda^D - h ||du/dn||^2 + O(h^2) for a simple mode:
/// -||du/dn||^2. Degenerate sectors (ball nu with multiplicity > 1) are
/// refused; use the splitting matrix there.
pub fn first_order_coefficient(domain: &WellDomain, mode: &Mode) -> Result<f64> {
    if let Some(nu) = mode.sector.nu() {
        let m = domain.sector_multiplicity(nu);
        if m > 1 {
            return Err(Error::Degenerate(format!(
                "angular sector nu={nu} carries multiplicity {m}; use the splitting matrix"
            )));
        }
    }
    Ok(-normal_derivative_norm(domain, mode)?.normal_derivative_norm_sq)
}

/// The cut-off boundary source of a mode: f = (-Delta_sector - lambda_0) g
/// with g(r) = g_hat * chi(r - a) and g_hat the boundary radial derivative of
/// the mode. Pairing f against u_0 recovers ||du_0/dn||^2 exactly (Green's
/// identity), so this is an end-to-end consistency input for the bordered
/// system.
pub struct BoundarySource {
    pub mode: DirichletMode,
    pub g_hat: f64,
    pub collar: f64,
}

impl BoundarySource {
    pub fn new(domain: &WellDomain, mode: &Mode) -> Result<Self> {
        let dm = dirichlet_mode(domain, mode)?;
        let a = domain.radius();
        let g_hat = dm.eval_derivative(a)?;
        Ok(BoundarySource { mode: dm, g_hat, collar: collar_width(a) })
    }

    /// The cut-off extension g(r) = g_hat chi(r - a) (supported in the
    /// collar, smooth across the parity axis).
    pub fn g(&self, r: f64) -> f64 {
        self.g_hat * cutoff(r - self.mode.domain.radius(), self.collar)
    }

    /// f(r) = (-Delta_sector - lambda_0) g in closed form.
    pub fn eval(&self, r: f64) -> f64 {
        let a = self.mode.domain.radius();
        let rho = r - a;
        let x0 = cutoff(rho, self.collar);
        let x1 = cutoff_derivative(rho, self.collar);
        let x2 = cutoff_second_derivative(rho, self.collar);
        let (curv, ang) = match self.mode.domain {
            WellDomain::Interval { .. } => (0.0, 0.0),
            WellDomain::Ball { dim, .. } => {
                let nu = self.mode.mode.sector.nu().unwrap() as f64;
                let d = dim as f64;
                ((d - 1.0) / r, nu * (nu + d - 2.0) / (r * r))
            }
        };
        self.g_hat * (-x2 - curv * x1 + (ang - self.mode.lambda) * x0)
    }

    /// Radii where the integrand loses analyticity.
    pub fn breakpoints(&self) -> Vec<f64> {
        cutoff_breakpoints(self.mode.domain.radius(), self.collar).to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Parity;

    #[test]
    fn expand_recovers_finite_combination() {
        let dom = WellDomain::interval(2.0).unwrap();
        let basis = SectorBasis::new(&dom, Sector::Parity(Parity::Even), 8).unwrap();
        let b: Vec<f64> = vec![0.3, 0.0, -1.2, 0.0, 0.5, 0.0, 0.0, 0.0];
        let bc = b.clone();
        let modes: Vec<DirichletMode> = basis.modes.clone();
        let f = move |x: f64| {
            bc.iter().zip(&modes).map(|(c, m)| c * m.eval(x).unwrap()).sum::<f64>()
        };
        let got = basis.expand(&f, &[]);
        for (g, want) in got.iter().zip(&b) {
            assert!((g - want).abs() < 1e-12, "{g} vs {want}");
        }
    }

    #[test]
    fn expand_recovers_finite_combination_on_ball() {
        let dom = WellDomain::ball(1.5, 3).unwrap();
        let basis = SectorBasis::new(&dom, Sector::Angular(1), 6).unwrap();
        let b: Vec<f64> = vec![1.0, -0.4, 0.0, 0.25, 0.0, 0.0];
        let bc = b.clone();
        let modes = basis.modes.clone();
        let f = move |r: f64| {
            bc.iter().zip(&modes).map(|(c, m)| c * m.eval(r).unwrap()).sum::<f64>()
        };
        let got = basis.expand(&f, &[]);
        for (g, want) in got.iter().zip(&b) {
            assert!((g - want).abs() < 1e-10, "{g} vs {want}");
        }
    }

    #[test]
    fn bordered_system_inverts_shifted_operator() {
        // f = (-Delta - lambda_0) g for g in the orthogonal complement gives
        // gamma = 0 and w = g.
        let dom = WellDomain::interval(2.0).unwrap();
        let basis = SectorBasis::new(&dom, Sector::Parity(Parity::Odd), 6).unwrap();
        let lambda0 = basis.modes[0].lambda;
        let g = vec![0.0, 0.7, 0.0, -0.2, 0.0, 0.0];
        let f: Vec<f64> = g
            .iter()
            .zip(&basis.modes)
            .map(|(c, m)| c * (m.lambda - lambda0))
            .collect();
        let sol = grushin_solve(&basis, 1, &f).unwrap();
        assert_eq!(sol.gamma, 0.0);
        for (w, want) in sol.w_coeffs.iter().zip(&g) {
            assert!((w - want).abs() < 1e-13);
        }
    }

    #[test]
    fn boundary_source_pairing_matches_normal_derivative_norm() {
        // <f, u_0> = ||du_0/dn||^2 = 2 lambda_0 / a, by Green's identity.
        let cases: Vec<(WellDomain, Mode)> = vec![
            (WellDomain::interval(2.0).unwrap(), Mode::interval_nth(1)),
            (WellDomain::interval(2.0).unwrap(), Mode::interval_nth(2)),
            (WellDomain::interval(1.0).unwrap(), Mode::interval_nth(3)),
            (WellDomain::ball(2.0, 2).unwrap(), Mode::ball(0, 1)),
            (WellDomain::ball(1.0, 3).unwrap(), Mode::ball(0, 1)),
            (WellDomain::ball(1.0, 3).unwrap(), Mode::ball(0, 2)),
        ];
        for (dom, mode) in cases {
            let src = BoundarySource::new(&dom, &mode).unwrap();
            let basis = SectorBasis::new(&dom, mode.sector, mode.l as usize).unwrap();
            let u0 = basis.modes[(mode.l - 1) as usize];
            let gamma = basis.inner_product(
                &|r| src.eval(r),
                &|r| u0.eval(r).unwrap(),
                &src.breakpoints(),
            );
            let want = normal_derivative_norm(&dom, &mode).unwrap().normal_derivative_norm_sq;
            assert!(
                ((gamma - want) / want).abs() < 1e-8,
                "{dom:?} {mode:?}: {gamma} vs {want}"
            );
        }
    }

    #[test]
    fn bordered_residual_vanishes_in_retained_basis() {
        // (-Delta_D - lambda_0) w + gamma u_0 reproduces f coefficient-wise.
        let dom = WellDomain::ball(2.0, 2).unwrap();
        let mode = Mode::ball(0, 1);
        let src = BoundarySource::new(&dom, &mode).unwrap();
        let basis = SectorBasis::new(&dom, mode.sector, 32).unwrap();
        let f = basis.expand(&|r| src.eval(r), &src.breakpoints());
        let sol = grushin_solve(&basis, mode.l, &f).unwrap();
        let lambda0 = basis.modes[sol.mode_index].lambda;
        let fnorm = f.iter().map(|c| c * c).sum::<f64>().sqrt();
        for (k, m) in basis.modes.iter().enumerate() {
            let lhs = (m.lambda - lambda0) * sol.w_coeffs[k]
                + if k == sol.mode_index { sol.gamma } else { 0.0 };
            assert!((lhs - f[k]).abs() <= 1e-10 * fnorm, "k={k}");
        }
    }

    #[test]
    fn first_order_matches_boundary_norm_and_rejects_degenerate() {
        let dom = WellDomain::interval(2.0).unwrap();
        let mode = Mode::interval_nth(1);
        let lam = basis_lambda(&dom, &mode);
        let c = first_order_coefficient(&dom, &mode).unwrap();
        assert!((c + 2.0 * lam / 2.0).abs() < 1e-10);
        let disk = WellDomain::ball(2.0, 2).unwrap();
        assert!(matches!(
            first_order_coefficient(&disk, &Mode::ball(1, 1)),
            Err(Error::Degenerate(_))
        ));
        assert!(first_order_coefficient(&disk, &Mode::ball(0, 1)).is_ok());
    }

    fn basis_lambda(dom: &WellDomain, mode: &Mode) -> f64 {
        dirichlet_mode(dom, mode).unwrap().lambda
    }

    #[test]
    fn solve_input_validation() {
        let dom = WellDomain::interval(1.0).unwrap();
        let basis = SectorBasis::new(&dom, Sector::Parity(Parity::Even), 3).unwrap();
        assert!(grushin_solve(&basis, 0, &[0.0; 3]).is_err());
        assert!(grushin_solve(&basis, 4, &[0.0; 3]).is_err());
        assert!(grushin_solve(&basis, 1, &[0.0; 2]).is_err());
    }
}
