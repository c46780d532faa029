//! Discrete H^-1 norms of residuals that may carry a boundary delta term.
//!
//! The norm is ||F||^2 = <F, (L+I)^-1 F> with L the Dirichlet FD Laplacian
//! on the grid. A delta at a node enters as the exact functional v -> g v(a)
//! (vector representation g e_a / D in the D-weighted inner product), never
//! sampled onto the grid.

use crate::error::{Error, Result};
use crate::linalg::tridiag_solve_spd;

/// Discrete H^-1 norm of `residual + delta_coeff * delta_{node}` on a uniform
/// Dirichlet grid with spacing `delta`.
pub fn discrete_hminus1_norm(
    residual: &[f64],
    delta_coeff: f64,
    delta_node: usize,
    delta: f64,
) -> Result<f64> {
    let n = residual.len();
    if n == 0 {
        return Err(Error::Config("empty residual vector".into()));
    }
    if delta_node >= n {
        return Err(Error::Config(format!(
            "delta node {delta_node} outside grid of {n} points"
        )));
    }
    if delta <= 0.0 {
        return Err(Error::Config(format!("grid spacing must be positive, got {delta}")));
    }
    // A = L + I with L the three-point Dirichlet Laplacian.
    let inv2 = 1.0 / (delta * delta);
    let diag = vec![2.0 * inv2 + 1.0; n];
    let off = vec![-inv2; n.saturating_sub(1)];

    // x = A^-1 r.
    let x = tridiag_solve_spd(&diag, &off, residual);
    let mut norm_sq = delta * residual.iter().zip(&x).map(|(r, x)| r * x).sum::<f64>();

    if delta_coeff != 0.0 {
        // y = A^-1 e_a for the rank-one delta pairing.
        let mut e = vec![0.0; n];
        e[delta_node] = 1.0;
        let y = tridiag_solve_spd(&diag, &off, &e);
        // Cross term 2 g x(a); pure delta term g^2 (A^-1)_{aa} / D.
        norm_sq += 2.0 * delta_coeff * x[delta_node]
            + delta_coeff * delta_coeff * y[delta_node] / delta;
    }
    // Roundoff can push a tiny positive form negative.
    Ok(norm_sq.max(0.0).sqrt())
}
