//! Independent brute-force verification tools: finite-difference spectra,
//! a Sturm-bisection tridiagonal eigensolver, discrete H^-1 norms, and
//! Rayleigh-quotient upper bounds.

pub mod fd;
pub mod hminus1;
pub mod rayleigh;
pub mod tridiag;

pub use fd::{fd_line_spectrum, fd_radial_spectrum, line_grid, radial_grid, FDGrid, FDSpectrum};
pub use hminus1::discrete_hminus1_norm;
pub use rayleigh::rayleigh_upper_bounds;
pub use tridiag::{sturm_count, tridiag_eigs};
