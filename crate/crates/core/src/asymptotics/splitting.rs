//! First-order splitting matrix on degenerate Dirichlet eigenspaces.
//!
//! For a degenerate eigenvalue the first-order correction is governed by the
//! boundary pairing matrix A_ij = <d psi_i/dn, d psi_j/dn>_{L^2(boundary)}
//! on an orthonormal basis of the eigenspace; the candidate first-order
//! coefficients are the negatives of its eigenvalues. On the disk the nu >= 1
//! pair (cosine/sine angular factors) makes A a multiple of the identity, so
//! the pair does not split at first order.

use crate::dirichlet::{dirichlet_mode, normal_derivative_norm, DirichletMode};
use crate::domain::{Mode, WellDomain};
use crate::error::{Error, Result};
use crate::linalg::{sym_eigen, SymMatrix};

/// Number of trapezoid points for angular quadrature; exact for trigonometric
/// polynomials of frequency below half this.
const ANGULAR_POINTS: usize = 720;

/// The boundary pairing matrix of a (possibly degenerate) Dirichlet
/// eigenspace, with its eigendecomposition.
pub struct SplittingMatrix {
    pub matrix: SymMatrix,
    pub basis_labels: Vec<String>,
    /// Eigenvalues of the pairing matrix, ascending.
    pub pairing_eigenvalues: Vec<f64>,
    /// Eigenvectors (columns) matching `pairing_eigenvalues`.
    pub vectors: Vec<Vec<f64>>,
    pub dirichlet_eigenvalue: f64,
}

impl SplittingMatrix {
    /// Candidate first-order coefficients of the eigenvalue expansion:
    /// the negated pairing eigenvalues.
    pub fn first_order_candidates(&self) -> Vec<f64> {
        self.pairing_eigenvalues.iter().map(|v| -v).collect()
    }
}

/// Build the splitting matrix for the eigenspace of the given ball sector and
/// radial index, or the 1x1 matrix for a simple mode.
///
/// Supported degenerate case: the disk (d = 2) pair nu >= 1 with the
/// orthonormal basis R(r) cos(nu phi)/sqrt(pi), R(r) sin(nu phi)/sqrt(pi).
/// The basis orthonormality is verified by quadrature to 1e-8 before the
/// matrix is assembled.
pub fn splitting_matrix(domain: &WellDomain, mode: &Mode) -> Result<SplittingMatrix> {
    let nu = mode.sector.nu();
    let multiplicity = match nu {
        Some(nu) => domain.sector_multiplicity(nu),
        None => 1,
    };
    if multiplicity == 1 {
        let dm = dirichlet_mode(domain, mode)?;
        let n = normal_derivative_norm(domain, mode)?.normal_derivative_norm_sq;
        let mut m = SymMatrix::zeros(1);
        m.set(0, 0, n);
        return Ok(SplittingMatrix {
            matrix: m,
            basis_labels: vec!["simple".into()],
            pairing_eigenvalues: vec![n],
            vectors: vec![vec![1.0]],
            dirichlet_eigenvalue: dm.lambda,
        });
    }
    let nu = nu.unwrap();
    match domain {
        WellDomain::Ball { dim: 2, .. } => disk_pair(domain, nu, mode.l),
        _ => Err(Error::Config(format!(
            "splitting matrix implemented for disk pairs only; sector nu={nu} of {domain:?} \
             has multiplicity {multiplicity}"
        ))),
    }
}

fn disk_pair(domain: &WellDomain, nu: u32, l: u32) -> Result<SplittingMatrix> {
    let dm = dirichlet_mode(domain, &Mode::ball(nu, l))?;
    let a = domain.radius();
    let deriv = dm.eval_derivative(a)?;
    let angular: [Box<dyn Fn(f64) -> f64>; 2] = [
        Box::new(move |phi: f64| (nu as f64 * phi).cos()),
        Box::new(move |phi: f64| (nu as f64 * phi).sin()),
    ];
    check_orthonormal(&dm, &angular)?;
    // A_ij = R'(a)^2 * a * (1/pi) int_0^{2pi} ang_i ang_j d phi.
    let mut m = SymMatrix::zeros(2);
    for i in 0..2 {
        for j in i..2 {
            let ang = trapezoid_circle(|phi| angular[i](phi) * angular[j](phi));
            m.set(i, j, deriv * deriv * a * ang / std::f64::consts::PI);
        }
    }
    let (values, vectors) = sym_eigen(&m);
    Ok(SplittingMatrix {
        matrix: m,
        basis_labels: vec![format!("cos({nu} phi)"), format!("sin({nu} phi)")],
        pairing_eigenvalues: values,
        vectors,
        dirichlet_eigenvalue: dm.lambda,
    })
}

/// Verify <psi_i, psi_j> = delta_ij to 1e-8 by radial quadrature times
/// angular trapezoid (with the 1/pi normalization).
fn check_orthonormal(dm: &DirichletMode, angular: &[Box<dyn Fn(f64) -> f64>]) -> Result<()> {
    let radial = dm.norm_sq_quadrature()?;
    for i in 0..angular.len() {
        for j in i..angular.len() {
            let ang = trapezoid_circle(|phi| angular[i](phi) * angular[j](phi))
                / std::f64::consts::PI;
            let got = radial * ang;
            let want = if i == j { 1.0 } else { 0.0 };
            if (got - want).abs() > 1e-8 {
                return Err(Error::Config(format!(
                    "eigenspace basis is not orthonormal: <psi_{i}, psi_{j}> = {got}"
                )));
            }
        }
    }
    Ok(())
}

fn trapezoid_circle(f: impl Fn(f64) -> f64) -> f64 {
    let n = ANGULAR_POINTS;
    let step = 2.0 * std::f64::consts::PI / n as f64;
    (0..n).map(|k| f(k as f64 * step)).sum::<f64>() * step
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_pair_is_scalar() {
        // The cos/sin pair has A = (2 lambda / a) I: no first-order split.
        let disk = WellDomain::ball(2.0, 2).unwrap();
        for &(nu, l) in &[(1u32, 1u32), (2, 1), (3, 1), (1, 2)] {
            let s = splitting_matrix(&disk, &Mode::ball(nu, l)).unwrap();
            let lam = s.dirichlet_eigenvalue;
            let want = 2.0 * lam / 2.0;
            assert!(s.matrix.get(0, 1).abs() < 1e-10, "nu={nu}");
            assert!((s.matrix.get(0, 0) - s.matrix.get(1, 1)).abs() < 1e-10);
            assert!(((s.matrix.get(0, 0) - want) / want).abs() < 1e-8, "nu={nu} l={l}");
            let cands = s.first_order_candidates();
            assert_eq!(cands.len(), 2);
            assert!(((cands[0] + want) / want).abs() < 1e-8);
            assert!((cands[0] - cands[1]).abs() < 1e-8 * want);
        }
    }

    #[test]
    fn simple_mode_reduces_to_boundary_norm() {
        let dom = WellDomain::interval(2.0).unwrap();
        let mode = Mode::interval_nth(2);
        let s = splitting_matrix(&dom, &mode).unwrap();
        let want = normal_derivative_norm(&dom, &mode).unwrap().normal_derivative_norm_sq;
        assert_eq!(s.matrix.n, 1);
        assert!((s.matrix.get(0, 0) - want).abs() < 1e-14);
        assert!((s.first_order_candidates()[0] + want).abs() < 1e-14);
        let ball = WellDomain::ball(1.0, 3).unwrap();
        let s = splitting_matrix(&ball, &Mode::ball(0, 1)).unwrap();
        assert_eq!(s.basis_labels, vec!["simple".to_string()]);
    }

    #[test]
    fn higher_dimensional_degenerate_sectors_rejected() {
        let b3 = WellDomain::ball(1.0, 3).unwrap();
        assert!(splitting_matrix(&b3, &Mode::ball(1, 1)).is_err());
    }

    #[test]
    fn angular_quadrature_is_exact_for_trig() {
        let got = trapezoid_circle(|phi| (3.0 * phi).cos().powi(2));
        assert!((got - std::f64::consts::PI).abs() < 1e-12);
        let got = trapezoid_circle(|phi| (2.0 * phi).cos() * (5.0 * phi).sin());
        assert!(got.abs() < 1e-12);
    }
}
