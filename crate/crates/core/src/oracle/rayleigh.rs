//! Variational upper bounds from trial subspaces.
//!
//! By the min-max principle, the k-th generalized eigenvalue of the pair
//! (X^T M X, X^T X) over an n-dimensional trial subspace X (columns sampled
//! on the discretization grid, symmetrized weighting already applied) is an
//! upper bound for the k-th eigenvalue of the discrete operator M.

use crate::error::{Error, Result};
use crate::linalg::{generalized_sym_eigen, SymMatrix};

/// Upper bounds lambda_1 <= ... <= lambda_n from n trial vectors on the grid
/// of the given symmetric tridiagonal operator.
pub fn rayleigh_upper_bounds(
    diag: &[f64],
    offdiag: &[f64],
    trials: &[Vec<f64>],
) -> Result<Vec<f64>> {
    let m = trials.len();
    let n = diag.len();
    if m == 0 {
        return Err(Error::Config("no trial vectors supplied".into()));
    }
    for t in trials {
        if t.len() != n {
            return Err(Error::Config(format!(
                "trial vector length {} does not match grid size {n}",
                t.len()
            )));
        }
    }
    // M x for each trial.
    let apply = |x: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; n];
        for i in 0..n {
            y[i] = diag[i] * x[i];
            if i > 0 {
                y[i] += offdiag[i - 1] * x[i - 1];
            }
            if i < n - 1 {
                y[i] += offdiag[i] * x[i + 1];
            }
        }
        y
    };
    let images: Vec<Vec<f64>> = trials.iter().map(|t| apply(t)).collect();
    let mut a = SymMatrix::zeros(m);
    let mut b = SymMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            let aij = trials[i].iter().zip(&images[j]).map(|(x, y)| x * y).sum();
            let bij = trials[i].iter().zip(&trials[j]).map(|(x, y)| x * y).sum();
            a.set(i, j, aij);
            b.set(i, j, bij);
        }
    }
    let (values, _) = generalized_sym_eigen(&a, &b)?;
    Ok(values)
}
