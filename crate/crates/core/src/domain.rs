//! Geometry and mode bookkeeping for the finite-depth well problem.

use crate::error::{Error, Result};

/// The well region: a symmetric interval (-a, a) or a ball of radius a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WellDomain {
    /// (-a, a) in one dimension.
    Interval { radius: f64 },
    /// Ball of radius a in dimension dim >= 2.
    Ball { radius: f64, dim: u32 },
}

impl WellDomain {
    pub fn interval(radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Config(format!("radius must be positive, got {radius}")));
        }
        Ok(WellDomain::Interval { radius })
    }

    pub fn ball(radius: f64, dim: u32) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Config(format!("radius must be positive, got {radius}")));
        }
        if dim < 2 {
            return Err(Error::Config(format!("ball dimension must be >= 2, got {dim}")));
        }
        Ok(WellDomain::Ball { radius, dim })
    }

    pub fn radius(&self) -> f64 {
        match *self {
            WellDomain::Interval { radius } | WellDomain::Ball { radius, .. } => radius,
        }
    }

    pub fn dim(&self) -> u32 {
        match *self {
            WellDomain::Interval { .. } => 1,
            WellDomain::Ball { dim, .. } => dim,
        }
    }

    /// Effective Bessel order sigma = nu + d/2 - 1 of the angular sector nu.
    ///
    /// The radial profile of a ball mode is r^{1-d/2} J_sigma(lambda^{1/2} r),
    /// so all sectors reduce to one Bessel order.
    pub fn effective_order(&self, nu: u32) -> Result<f64> {
        match *self {
            WellDomain::Interval { .. } => {
                Err(Error::Config("effective_order applies to balls only".into()))
            }
            WellDomain::Ball { dim, .. } => Ok(nu as f64 + dim as f64 / 2.0 - 1.0),
        }
    }

    /// Dimension of the space of spherical harmonics of degree nu on the
    /// (d-1)-sphere: the eigenvalue multiplicity contributed by sector nu.
    pub fn sector_multiplicity(&self, nu: u32) -> u32 {
        match *self {
            WellDomain::Interval { .. } => 1,
            WellDomain::Ball { dim, .. } => harmonic_dimension(dim, nu),
        }
    }
}

/// Dimension of degree-nu spherical harmonics on S^{d-1}:
/// 1 for nu = 0; otherwise C(nu+d-1, nu) - C(nu+d-3, nu-2).
fn harmonic_dimension(dim: u32, nu: u32) -> u32 {
    if nu == 0 {
        return 1;
    }
    if dim == 2 {
        return 2; // cos and sin of nu*phi
    }
    let d = dim as u64;
    let n = nu as u64;
    let a = binomial(n + d - 1, n);
    let b = if n >= 2 { binomial(n + d - 3, n - 2) } else { 0 };
    (a - b) as u32
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The semiclassical parameter; the well depth is h^-2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellParams {
    pub h: f64,
}

impl WellParams {
    pub fn new(h: f64) -> Result<Self> {
        if !(h > 0.0 && h < 1.0) {
            return Err(Error::Config(format!("h must lie in (0,1), got {h}")));
        }
        Ok(WellParams { h })
    }

    /// The well depth h^-2.
    pub fn depth(&self) -> f64 {
        1.0 / (self.h * self.h)
    }
}

/// Parity of an interval mode about the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Which reduced one-dimensional problem a mode solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    /// Interval modes split by parity.
    Parity(Parity),
    /// Ball modes split by angular degree nu.
    Angular(u32),
}

impl Sector {
    /// The angular degree for ball sectors, if any.
    pub fn nu(&self) -> Option<u32> {
        match *self {
            Sector::Parity(_) => None,
            Sector::Angular(nu) => Some(nu),
        }
    }
}

/// A single mode: a sector together with the 1-based ordinal of the root
/// within that sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mode {
    pub sector: Sector,
    pub l: u32,
}

impl Mode {
    pub fn interval(parity: Parity, l: u32) -> Self {
        Mode { sector: Sector::Parity(parity), l }
    }

    pub fn ball(nu: u32, l: u32) -> Self {
        Mode { sector: Sector::Angular(nu), l }
    }

    /// The n-th interval mode ordered by energy: odd n are even-parity
    /// (cosine) modes, even n odd-parity (sine) modes.
    pub fn interval_nth(n: u32) -> Self {
        if n % 2 == 1 {
            Mode::interval(Parity::Even, n / 2 + 1)
        } else {
            Mode::interval(Parity::Odd, n / 2)
        }
    }
}

/// An eigenvalue of the finite-well operator located by a secular equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub lambda: f64,
    pub multiplicity: u32,
    pub mode: Mode,
    /// |secular(lambda)| after refinement, relative to the local scale.
    pub residual: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_enforce_invariants() {
        assert!(WellDomain::interval(2.0).is_ok());
        assert!(WellDomain::interval(0.0).is_err());
        assert!(WellDomain::ball(1.0, 1).is_err());
        assert!(WellDomain::ball(1.0, 3).is_ok());
        assert!(WellParams::new(0.5).is_ok());
        assert!(WellParams::new(1.0).is_err());
        assert!(WellParams::new(0.0).is_err());
    }

    #[test]
    fn effective_orders() {
        let disk = WellDomain::ball(2.0, 2).unwrap();
        let ball3 = WellDomain::ball(1.0, 3).unwrap();
        assert_eq!(disk.effective_order(0).unwrap(), 0.0);
        assert_eq!(disk.effective_order(3).unwrap(), 3.0);
        assert_eq!(ball3.effective_order(0).unwrap(), 0.5);
        assert_eq!(ball3.effective_order(2).unwrap(), 2.5);
    }

    #[test]
    fn harmonic_dimensions() {
        let disk = WellDomain::ball(1.0, 2).unwrap();
        let b3 = WellDomain::ball(1.0, 3).unwrap();
        let b4 = WellDomain::ball(1.0, 4).unwrap();
        assert_eq!(disk.sector_multiplicity(0), 1);
        assert_eq!(disk.sector_multiplicity(5), 2);
        // d=3: 2nu+1
        for nu in 0..6 {
            assert_eq!(b3.sector_multiplicity(nu), 2 * nu + 1);
        }
        // d=4: (nu+1)^2
        for nu in 0..6 {
            assert_eq!(b4.sector_multiplicity(nu), (nu + 1) * (nu + 1));
        }
    }

    #[test]
    fn interval_mode_ordering() {
        let m1 = Mode::interval_nth(1);
        let m2 = Mode::interval_nth(2);
        let m3 = Mode::interval_nth(3);
        assert_eq!(m1, Mode::interval(Parity::Even, 1));
        assert_eq!(m2, Mode::interval(Parity::Odd, 1));
        assert_eq!(m3, Mode::interval(Parity::Even, 2));
    }
}
