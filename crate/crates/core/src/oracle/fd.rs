//! Finite-difference / finite-volume discretizations of the well operator,
//! used as an independent brute-force oracle for the secular solver.
//!
//! Line (interval wells): standard second-order three-point stencil on a
//! uniform grid with the jump point x = a placed exactly on a node, where the
//! potential takes the averaged value h^-2/2; this keeps the scheme O(D^2)
//! across the discontinuity.
//!
//! Radial (ball wells): a staggered finite-volume scheme with cell centers
//! r_i = (i - 1/2) D and fluxes through the faces j D weighted by the face
//! area r^{d-1}. The interface r = a lies on a face, so every cell sees a
//! single potential value and second-order accuracy survives the jump. The
//! generalized problem M u = lambda W u is symmetrized by W^{1/2} so the
//! Sturm bisection solver applies.

use super::tridiag::tridiag_eigs;
use crate::error::{Error, Result};

/// A one-dimensional discretization grid plus its symmetric tridiagonal
/// operator.
#[derive(Debug, Clone)]
pub struct FDGrid {
    /// Sample points (line nodes or radial cell centers).
    pub nodes: Vec<f64>,
    pub delta: f64,
    pub r_max: f64,
    /// Index of the node at (line) or nearest below (radial) the interface a.
    pub boundary_index: usize,
    /// L^2 weight of each node (1 on the line, r^{d-1} radially); the
    /// symmetrized eigenvector v relates to the physical one by v = W^{1/2} u.
    pub weights: Vec<f64>,
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

/// Eigenvalues from one grid and its half-spacing refinement, with the
/// Richardson extrapolation (4 L_{D/2} - L_D)/3 that cancels the O(D^2) term.
#[derive(Debug, Clone)]
pub struct FDSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvalues_half: Vec<f64>,
    pub richardson: Vec<f64>,
    pub delta: f64,
}

const MAX_NODES: usize = 200_000;

fn resolve_delta(a: f64, h: f64, delta_target: Option<f64>) -> f64 {
    // Default D = min(a, h)/32, then snapped so that a is an exact multiple.
    let target = delta_target.unwrap_or_else(|| a.min(h) / 32.0);
    let k = (a / target).ceil().max(1.0);
    a / k
}

fn exterior_extent(h: f64) -> f64 {
    // The exterior tail decays like e^{-rho/h}; 40h + 1 of margin makes the
    // truncation error far below the discretization error.
    40.0 * h + 1.0
}

/// Build the full-line grid for the interval well of radius a.
pub fn line_grid(a: f64, h: f64, delta_target: Option<f64>) -> Result<FDGrid> {
    if a <= 0.0 || h <= 0.0 || h >= 1.0 {
        return Err(Error::Config(format!("invalid line grid parameters a={a} h={h}")));
    }
    let delta = resolve_delta(a, h, delta_target);
    let half_cells = ((a + exterior_extent(h)) / delta).ceil() as usize;
    let r_max = half_cells as f64 * delta;
    let n = 2 * half_cells - 1; // interior nodes of (-r_max, r_max)
    if n > MAX_NODES {
        return Err(Error::Config(format!("grid of {n} nodes exceeds the cap {MAX_NODES}")));
    }
    let depth = 1.0 / (h * h);
    let inv2 = 1.0 / (delta * delta);
    let mut nodes = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    let mut boundary_index = 0;
    for i in 1..=n {
        let x = -r_max + i as f64 * delta;
        let ax = x.abs();
        // a is an exact multiple of delta, so the comparison is safe with a
        // half-spacing tolerance.
        let pot = if (ax - a).abs() < 0.5 * delta {
            0.5 * depth
        } else if ax > a {
            depth
        } else {
            0.0
        };
        if (x - a).abs() < 0.5 * delta {
            boundary_index = i - 1;
        }
        nodes.push(x);
        diag.push(2.0 * inv2 + pot);
    }
    let offdiag = vec![-inv2; n - 1];
    Ok(FDGrid {
        nodes,
        delta,
        r_max,
        boundary_index,
        weights: vec![1.0; n],
        diag,
        offdiag,
    })
}

/// Build the radial finite-volume grid for sector nu of the d-ball well.
pub fn radial_grid(d: u32, nu: u32, a: f64, h: f64, delta_target: Option<f64>) -> Result<FDGrid> {
    if d < 2 || a <= 0.0 || h <= 0.0 || h >= 1.0 {
        return Err(Error::Config(format!("invalid radial grid parameters d={d} a={a} h={h}")));
    }
    let delta = resolve_delta(a, h, delta_target);
    let n = ((a + exterior_extent(h)) / delta).ceil() as usize;
    if n > MAX_NODES {
        return Err(Error::Config(format!("grid of {n} cells exceeds the cap {MAX_NODES}")));
    }
    let r_max = n as f64 * delta;
    let depth = 1.0 / (h * h);
    let dm1 = (d - 1) as i32;
    let angular = (nu * (nu + d - 2)) as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n - 1);
    let mut boundary_index = 0;
    for i in 1..=n {
        let r = (i as f64 - 0.5) * delta;
        let w = r.powi(dm1);
        let face_lo = ((i - 1) as f64 * delta).powi(dm1); // zero at the origin
        let face_hi = (i as f64 * delta).powi(dm1);
        let pot = if r < a { 0.0 } else { depth };
        if r < a {
            boundary_index = i - 1;
        }
        nodes.push(r);
        weights.push(w);
        diag.push((face_lo + face_hi) / (delta * delta * w) + angular / (r * r) + pot);
        if i < n {
            let r_next = (i as f64 + 0.5) * delta;
            let w_next = r_next.powi(dm1);
            offdiag.push(-face_hi / (delta * delta * (w * w_next).sqrt()));
        }
    }
    Ok(FDGrid {
        nodes,
        delta,
        r_max,
        boundary_index,
        weights,
        diag,
        offdiag,
    })
}

fn spectrum_from(
    build: impl Fn(Option<f64>) -> Result<FDGrid>,
    delta: f64,
    count: usize,
) -> Result<FDSpectrum> {
    let coarse = build(Some(delta))?;
    let fine = build(Some(delta / 2.0))?;
    let eigs = tridiag_eigs(&coarse.diag, &coarse.offdiag, count)?;
    let eigs_half = tridiag_eigs(&fine.diag, &fine.offdiag, count)?;
    let richardson = eigs
        .iter()
        .zip(&eigs_half)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect();
    Ok(FDSpectrum {
        eigenvalues: eigs,
        eigenvalues_half: eigs_half,
        richardson,
        delta: coarse.delta,
    })
}

/// Lowest `count` eigenvalues of the interval well by the line scheme,
/// Richardson-extrapolated from spacings (D, D/2).
pub fn fd_line_spectrum(
    a: f64,
    h: f64,
    count: usize,
    delta_target: Option<f64>,
) -> Result<FDSpectrum> {
    let delta = resolve_delta(a, h, delta_target);
    spectrum_from(|dt| line_grid(a, h, dt), delta, count)
}

/// Lowest `count` eigenvalues of sector nu of the d-ball well.
pub fn fd_radial_spectrum(
    d: u32,
    nu: u32,
    a: f64,
    h: f64,
    count: usize,
    delta_target: Option<f64>,
) -> Result<FDSpectrum> {
    let delta = resolve_delta(a, h, delta_target);
    spectrum_from(|dt| radial_grid(d, nu, a, h, dt), delta, count)
}
