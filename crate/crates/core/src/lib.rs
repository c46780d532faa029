//! Spectral analysis of finite-depth particle-in-well Schrodinger operators
//! on symmetric intervals and balls.

pub mod asymptotics;
pub mod dirichlet;
pub mod domain;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod quadrature;
pub mod scaled;
pub mod secular;
pub mod special;

pub use error::{Error, Result};
pub use scaled::ScaledValue;
