//! Special functions needed for radial spectral problems: Bessel J (first
//! kind), exponentially scaled modified Bessel K, and zeros of J.

mod bessel_j;
mod bessel_k;
mod gamma;
mod zeros;

pub use bessel_j::{bessel_j, bessel_j_derivative};
pub use bessel_k::{bessel_k_derivative_scaled, bessel_k_pair, bessel_k_scaled};
pub use zeros::{bessel_j_zero, bessel_j_zeros};
