//! Dirichlet spectra and eigenfunctions on intervals and balls: the h -> 0
//! reference limit of the finite well, with boundary normal-derivative norms
//! and the Rellich identity check.

use crate::domain::{Mode, Parity, Sector, WellDomain};
use crate::error::{Error, Result};
use crate::quadrature::GaussRule;
use crate::special::{bessel_j, bessel_j_derivative, bessel_j_zero};

/// A Dirichlet eigenpair in closed form: eigenvalue plus the normalized
/// radial profile coefficient.
#[derive(Debug, Clone, Copy)]
pub struct DirichletMode {
    pub domain: WellDomain,
    pub mode: Mode,
    pub lambda: f64,
    /// Multiplies the raw profile so that the L^2 norm (with measure r^{d-1},
    /// angular factor normalized separately) is exactly 1.
    pub radial_coeff: f64,
}

/// The Dirichlet eigenvalue of the given mode.
///
/// Interval of radius a: (pi k / 2a)^2 with k odd for even-parity (cosine)
/// modes and k even for odd-parity (sine) modes. Ball of radius a: the
/// l-th zero of J_sigma, sigma = nu + d/2 - 1, squared over a^2.
pub fn dirichlet_eigenvalue(domain: &WellDomain, mode: &Mode) -> Result<f64> {
    if mode.l == 0 {
        return Err(Error::Config("mode index l must be >= 1".into()));
    }
    let a = domain.radius();
    match (domain, mode.sector) {
        (WellDomain::Interval { .. }, Sector::Parity(parity)) => {
            let k = match parity {
                Parity::Even => 2 * mode.l - 1,
                Parity::Odd => 2 * mode.l,
            } as f64;
            Ok((std::f64::consts::PI * k / (2.0 * a)).powi(2))
        }
        (WellDomain::Ball { .. }, Sector::Angular(nu)) => {
            let sigma = domain.effective_order(nu)?;
            let j = bessel_j_zero(sigma, mode.l as usize)?;
            Ok((j / a).powi(2))
        }
        _ => Err(Error::Config("mode sector does not match domain kind".into())),
    }
}

/// Construct the normalized eigenpair.
pub fn dirichlet_mode(domain: &WellDomain, mode: &Mode) -> Result<DirichletMode> {
    let lambda = dirichlet_eigenvalue(domain, mode)?;
    let a = domain.radius();
    let radial_coeff = match domain {
        // cos/sin(sqrt(lambda) x) has L^2 norm sqrt(a) on (-a, a).
        WellDomain::Interval { .. } => 1.0 / a.sqrt(),
        WellDomain::Ball { .. } => {
            // integral_0^a J_sigma(j r/a)^2 r dr = (a^2/2) J_sigma'(j)^2
            let sigma = domain.effective_order(mode.sector.nu().unwrap())?;
            let j = lambda.sqrt() * a;
            let dj = bessel_j_derivative(sigma, j)?;
            std::f64::consts::SQRT_2 / (a * dj.abs())
        }
    };
    Ok(DirichletMode { domain: *domain, mode: *mode, lambda, radial_coeff })
}

impl DirichletMode {
    /// The normalized radial profile at r (interval: the profile at x = r,
    /// with negative r allowed since parity determines the extension).
    pub fn eval(&self, r: f64) -> Result<f64> {
        let a = self.domain.radius();
        if r.abs() > a * (1.0 + 1e-12) {
            return Err(Error::Domain(format!("r={r} outside the domain of radius {a}")));
        }
        let s = self.lambda.sqrt();
        match (&self.domain, self.mode.sector) {
            (WellDomain::Interval { .. }, Sector::Parity(Parity::Even)) => {
                Ok(self.radial_coeff * (s * r).cos())
            }
            (WellDomain::Interval { .. }, Sector::Parity(Parity::Odd)) => {
                Ok(self.radial_coeff * (s * r).sin())
            }
            (WellDomain::Ball { dim, .. }, Sector::Angular(nu)) => {
                let sigma = self.domain.effective_order(nu)?;
                let half = *dim as f64 / 2.0 - 1.0;
                // r^{1-d/2} J_sigma(s r); at r = 0 the product behaves like
                // r^nu: for nu = 0 the limit is (s/2)^sigma / Gamma(sigma+1).
                if r == 0.0 {
                    return Ok(if nu == 0 {
                        self.radial_coeff * (0.5 * s).powf(sigma)
                            / libm::tgamma(sigma + 1.0)
                    } else {
                        0.0
                    });
                }
                Ok(self.radial_coeff * r.powf(-half) * bessel_j(sigma, s * r)?)
            }
            _ => unreachable!("constructor enforces sector/domain consistency"),
        }
    }

    /// d/dr of the normalized radial profile.
    pub fn eval_derivative(&self, r: f64) -> Result<f64> {
        let a = self.domain.radius();
        if r.abs() > a * (1.0 + 1e-12) {
            return Err(Error::Domain(format!("r={r} outside the domain of radius {a}")));
        }
        let s = self.lambda.sqrt();
        match (&self.domain, self.mode.sector) {
            (WellDomain::Interval { .. }, Sector::Parity(Parity::Even)) => {
                Ok(-self.radial_coeff * s * (s * r).sin())
            }
            (WellDomain::Interval { .. }, Sector::Parity(Parity::Odd)) => {
                Ok(self.radial_coeff * s * (s * r).cos())
            }
            (WellDomain::Ball { dim, .. }, Sector::Angular(nu)) => {
                let sigma = self.domain.effective_order(nu)?;
                let half = *dim as f64 / 2.0 - 1.0;
                if r == 0.0 {
                    // Only the nu=1 profiles have a nonzero slope at 0; it is
                    // never needed, so 0/derivative-free handling suffices.
                    return Err(Error::Domain("derivative at r=0 not supported".into()));
                }
                let jv = bessel_j(sigma, s * r)?;
                let djv = bessel_j_derivative(sigma, s * r)?;
                Ok(self.radial_coeff
                    * (-half * r.powf(-half - 1.0) * jv + r.powf(-half) * s * djv))
            }
            _ => unreachable!(),
        }
    }

    /// L^2 norm squared of the profile by quadrature (should be 1).
    pub fn norm_sq_quadrature(&self) -> Result<f64> {
        let a = self.domain.radius();
        let rule = GaussRule::n256();
        match &self.domain {
            WellDomain::Interval { .. } => {
                let mut err = None;
                let v = rule.integrate(-a, a, |x| match self.eval(x) {
                    Ok(u) => u * u,
                    Err(e) => {
                        err = Some(e);
                        0.0
                    }
                });
                err.map_or(Ok(v), Err)
            }
            WellDomain::Ball { dim, .. } => {
                let dm1 = (*dim - 1) as i32;
                let mut err = None;
                let v = rule.integrate(0.0, a, |r| match self.eval(r) {
                    Ok(u) => u * u * r.powi(dm1),
                    Err(e) => {
                        err = Some(e);
                        0.0
                    }
                });
                err.map_or(Ok(v), Err)
            }
        }
    }
}

/// Boundary pairing data of a Dirichlet mode.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryData {
    /// The squared L^2(boundary) norm of the outward normal derivative.
    pub normal_derivative_norm_sq: f64,
}

/// ||du/dn||^2 over the boundary: closed form 2*lambda/a for both intervals
/// (two endpoints, lambda/a each) and balls (surface measure a^{d-1} times
/// the squared radial derivative, with the angular factor normalized).
pub fn normal_derivative_norm(domain: &WellDomain, mode: &Mode) -> Result<BoundaryData> {
    let dm = dirichlet_mode(domain, mode)?;
    let a = domain.radius();
    let norm_sq = match domain {
        WellDomain::Interval { .. } => {
            let d = dm.eval_derivative(a)?;
            2.0 * d * d
        }
        WellDomain::Ball { dim, .. } => {
            let d = dm.eval_derivative(a)?;
            d * d * a.powi((*dim - 1) as i32)
        }
    };
    Ok(BoundaryData { normal_derivative_norm_sq: norm_sq })
}

/// Relative error in the boundary identity
/// lambda = (1/4) * integral_dB (du/dn)^2 d/dn(|x|^2) dS / ||u||^2
/// with ||u||^2 from quadrature; balls only.
pub fn rellich_check(domain: &WellDomain, mode: &Mode) -> Result<f64> {
    let dim = match domain {
        WellDomain::Ball { dim, .. } => *dim,
        WellDomain::Interval { .. } => {
            return Err(Error::Config("the boundary identity check applies to balls".into()))
        }
    };
    let dm = dirichlet_mode(domain, mode)?;
    let a = domain.radius();
    let deriv = dm.eval_derivative(a)?;
    // d/dn(|x|^2) = 2a on the sphere of radius a; the boundary integral of
    // (du/dn)^2 is deriv^2 * a^{d-1} (normalized angular factor).
    let boundary_integral = deriv * deriv * a.powi((dim - 1) as i32) * (2.0 * a);
    let norm_sq = dm.norm_sq_quadrature()?;
    let rhs = 0.25 * boundary_integral / norm_sq;
    Ok((dm.lambda - rhs).abs() / dm.lambda)
}
