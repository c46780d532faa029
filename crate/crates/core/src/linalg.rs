//! Small dense and tridiagonal linear algebra helpers.
//!
//! Everything here operates on problems of modest size (splitting matrices,
//! Rayleigh-quotient Gram pairs, FD tridiagonal solves); no external solver
//! dependency is warranted.

use crate::error::{Error, Result};

/// A dense symmetric matrix stored row-major.
#[derive(Debug, Clone)]
pub struct SymMatrix {
    pub n: usize,
    pub data: Vec<f64>, // n*n entries
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    /// Maximum absolute off-diagonal entry.
    fn off_diagonal_norm(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                m = m.max(self.get(i, j).abs());
            }
        }
        m
    }
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors (columns)
/// of a symmetric matrix, by cyclic Jacobi rotations.
pub fn sym_eigen(a: &SymMatrix) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.n;
    let mut m = a.clone();
    // v holds the accumulated rotations; column k will be the k-th eigenvector.
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let scale = (0..n).map(|i| m.get(i, i).abs()).fold(1e-300, f64::max);
    for _sweep in 0..100 {
        if m.off_diagonal_norm() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                // Rotation angle chosen to annihilate a_pq exactly.
                let theta = 0.5 * (m.get(q, q) - m.get(p, p)) / apq;
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                m.data[p * n + p] -= t * apq;
                m.data[q * n + q] += t * apq;
                m.set(p, q, 0.0);
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    m.set(k, p, akp - s * (akq + tau * akp));
                    m.set(k, q, akq + s * (akp - tau * akq));
                }
                for row in v.iter_mut() {
                    let rp = row[p];
                    let rq = row[q];
                    row[p] = rp - s * (rq + tau * rp);
                    row[q] = rq + s * (rp - tau * rq);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).partial_cmp(&m.get(j, j)).unwrap());
    let values = order.iter().map(|&i| m.get(i, i)).collect();
    let vectors = order
        .iter()
        .map(|&k| v.iter().map(|row| row[k]).collect())
        .collect();
    (values, vectors)
}

/// Cholesky factor L (lower-triangular, row-major dense) of an SPD matrix.
pub fn cholesky(a: &SymMatrix) -> Result<Vec<f64>> {
    let n = a.n;
    let scale = (0..n).map(|i| a.get(i, i).abs()).fold(0.0f64, f64::max);
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                // A pivot at roundoff level means numerical rank deficiency.
                if s <= 1e-13 * scale {
                    return Err(Error::Degenerate(
                        "matrix not positive definite (rank-deficient basis?)".into(),
                    ));
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Ok(l)
}

/// Solve L x = b with L lower-triangular from `cholesky`.
pub fn forward_solve(l: &[f64], n: usize, b: &[f64]) -> Vec<f64> {
    let mut x = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            x[i] -= l[i * n + k] * x[k];
        }
        x[i] /= l[i * n + i];
    }
    x
}

/// Solve L^T x = b.
pub fn backward_solve_transposed(l: &[f64], n: usize, b: &[f64]) -> Vec<f64> {
    let mut x = b.to_vec();
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            x[i] -= l[k * n + i] * x[k];
        }
        x[i] /= l[i * n + i];
    }
    x
}

/// Generalized symmetric eigenproblem A z = mu B z with B SPD: reduce via
/// B = L L^T to the standard problem for L^-1 A L^-T.
pub fn generalized_sym_eigen(a: &SymMatrix, b: &SymMatrix) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = a.n;
    if b.n != n {
        return Err(Error::Config("dimension mismatch in generalized eigenproblem".into()));
    }
    let l = cholesky(b)?;
    // C = L^-1 A L^-T, built column by column.
    let mut c = SymMatrix::zeros(n);
    for j in 0..n {
        // Column j of A.
        let col: Vec<f64> = (0..n).map(|i| a.get(i, j)).collect();
        let y = forward_solve(&l, n, &col); // y = L^-1 A e_j
        for i in 0..n {
            c.data[i * n + j] = y[i];
        }
    }
    // Now apply L^-1 from the right via transposed rows: C <- C L^-T means
    // solving L c_row^T for each row.
    let mut c2 = SymMatrix::zeros(n);
    for i in 0..n {
        let row: Vec<f64> = (0..n).map(|j| c.get(i, j)).collect();
        let y = forward_solve(&l, n, &row);
        for j in 0..n {
            c2.data[i * n + j] = y[j];
        }
    }
    // Symmetrize against roundoff.
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (c2.get(i, j) + c2.get(j, i));
            c2.data[i * n + j] = avg;
            c2.data[j * n + i] = avg;
        }
    }
    let (values, w) = sym_eigen(&c2);
    // Back-transform eigenvectors: z = L^-T w.
    let vectors = w
        .into_iter()
        .map(|wk| backward_solve_transposed(&l, n, &wk))
        .collect();
    Ok((values, vectors))
}

/// Solve the SPD tridiagonal system (diag, offdiag) x = b by LDL^T without
/// pivoting (valid for diagonally dominant / SPD matrices).
pub fn tridiag_solve_spd(diag: &[f64], offdiag: &[f64], b: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert_eq!(offdiag.len() + 1, n);
    assert_eq!(b.len(), n);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n.saturating_sub(1)];
    d[0] = diag[0];
    for i in 1..n {
        e[i - 1] = offdiag[i - 1] / d[i - 1];
        d[i] = diag[i] - e[i - 1] * offdiag[i - 1];
    }
    // Forward substitution L y = b.
    let mut x = b.to_vec();
    for i in 1..n {
        x[i] -= e[i - 1] * x[i - 1];
    }
    // Diagonal and backward L^T.
    for i in 0..n {
        x[i] /= d[i];
    }
    for i in (0..n - 1).rev() {
        x[i] -= e[i] * x[i + 1];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(entries: &[&[f64]]) -> SymMatrix {
        let n = entries.len();
        let mut m = SymMatrix::zeros(n);
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.data[i * n + j] = v;
            }
        }
        m
    }

    #[test]
    fn jacobi_on_known_2x2() {
        // [[2,1],[1,2]] has eigenvalues 1, 3.
        let (vals, vecs) = sym_eigen(&mat(&[&[2.0, 1.0], &[1.0, 2.0]]));
        assert!((vals[0] - 1.0).abs() < 1e-13);
        assert!((vals[1] - 3.0).abs() < 1e-13);
        // Eigenvector for 1 is (1,-1)/sqrt(2) up to sign.
        assert!((vecs[0][0] + vecs[0][1]).abs() < 1e-12);
    }

    #[test]
    fn jacobi_on_known_3x3() {
        // Tridiagonal [2,-1] 3x3: eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2).
        let m = mat(&[&[2.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 2.0]]);
        let (vals, vecs) = sym_eigen(&m);
        let s = 2.0f64.sqrt();
        assert!((vals[0] - (2.0 - s)).abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
        assert!((vals[2] - (2.0 + s)).abs() < 1e-12);
        // Residual check A v = lambda v.
        for (k, v) in vecs.iter().enumerate() {
            for i in 0..3 {
                let av: f64 = (0..3).map(|j| m.get(i, j) * v[j]).sum();
                assert!((av - vals[k] * v[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cholesky_round_trip() {
        let a = mat(&[&[4.0, 2.0, 0.6], &[2.0, 5.0, 1.0], &[0.6, 1.0, 3.0]]);
        let l = cholesky(&a).unwrap();
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for k in 0..n {
                    s += l[i * n + k] * l[j * n + k];
                }
                assert!((s - a.get(i, j)).abs() < 1e-13);
            }
        }
        // Not SPD -> error.
        assert!(cholesky(&mat(&[&[1.0, 2.0], &[2.0, 1.0]])).is_err());
    }

    #[test]
    fn generalized_reduces_to_standard_for_identity_b() {
        let a = mat(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let b = mat(&[&[1.0, 0.0], &[0.0, 1.0]]);
        let (vals, _) = generalized_sym_eigen(&a, &b).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12 && (vals[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn generalized_with_scaled_b() {
        // A z = mu B z with B = 4 I gives mu = eig(A)/4.
        let a = mat(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let b = mat(&[&[4.0, 0.0], &[0.0, 4.0]]);
        let (vals, vecs) = generalized_sym_eigen(&a, &b).unwrap();
        assert!((vals[0] - 0.25).abs() < 1e-12 && (vals[1] - 0.75).abs() < 1e-12);
        // B-normalization: z^T B z = 1.
        for v in &vecs {
            let norm: f64 = 4.0 * (v[0] * v[0] + v[1] * v[1]);
            assert!((norm - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn tridiag_solver_matches_dense() {
        let diag = [4.0, 5.0, 6.0, 5.0];
        let off = [-1.0, -2.0, -1.5];
        let b = [1.0, 2.0, 3.0, 4.0];
        let x = tridiag_solve_spd(&diag, &off, &b);
        // Verify A x = b.
        let ax0 = diag[0] * x[0] + off[0] * x[1];
        let ax1 = off[0] * x[0] + diag[1] * x[1] + off[1] * x[2];
        let ax2 = off[1] * x[1] + diag[2] * x[2] + off[2] * x[3];
        let ax3 = off[2] * x[2] + diag[3] * x[3];
        for (got, want) in [ax0, ax1, ax2, ax3].iter().zip(&b) {
            assert!((got - want).abs() < 1e-12);
        }
    }
}
