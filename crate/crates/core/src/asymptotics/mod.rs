//! Matched-asymptotics machinery for the shallow-layer limit h -> 0: the
//! boundary-layer model operator, the bordered (Grushin) reduction giving the
//! first-order eigenvalue shift, the splitting matrix for degenerate
//! eigenspaces, and explicit quasimodes with certified residual norms.

pub mod cutoff;
pub mod grushin;
pub mod model;
pub mod quasimode;
pub mod splitting;

pub use cutoff::{collar_width, cutoff};
pub use grushin::{
    first_order_coefficient, grushin_solve, BoundarySource, GrushinSolution, SectorBasis,
};
pub use model::{model_green, model_solve, LayerFunction, LayerRHS};
pub use quasimode::{build_quasimode, Quasimode, QuasimodeResidual, DEFAULT_BASIS_SIZE};
pub use splitting::{splitting_matrix, SplittingMatrix};
