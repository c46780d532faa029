//! Eigenvalues of symmetric tridiagonal matrices by Sturm-sequence bisection.

use crate::error::{Error, Result};

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, offdiag)
/// that are strictly less than x, via the sign count of the LDL^T pivots.
pub fn sturm_count(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let n = diag.len();
    let mut count = 0;
    let mut d = diag[0] - x;
    if d < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let e = offdiag[i - 1];
        // Guard exact zero pivots: nudge by the smallest representable amount
        // so the recurrence continues; the count is unaffected in the limit.
        if d == 0.0 {
            d = 1e-300;
        }
        d = (diag[i] - x) - e * e / d;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// The lowest `count` eigenvalues, ascending, each bisected to machine
/// precision (the interval can no longer be split).
pub fn tridiag_eigs(diag: &[f64], offdiag: &[f64], count: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || count == 0 {
        return Err(Error::Config("empty matrix or zero eigenvalue count".into()));
    }
    if offdiag.len() + 1 != n {
        return Err(Error::Config(format!(
            "offdiagonal length {} does not match size {n}",
            offdiag.len()
        )));
    }
    let count = count.min(n);
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += offdiag[i - 1].abs();
        }
        if i < n - 1 {
            r += offdiag[i].abs();
        }
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let mut out = Vec::with_capacity(count);
    let mut lower = lo;
    for k in 0..count {
        // Bisect for the k-th eigenvalue: smallest x with count(x) >= k+1.
        let (mut a, mut b) = (lower, hi);
        loop {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diag, offdiag, mid) >= k + 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(0.5 * (a + b));
        // Later eigenvalues cannot be below this one.
        lower = a;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_3x3() {
        let eigs = tridiag_eigs(&[2.0, 2.0, 2.0], &[-1.0, -1.0], 3).unwrap();
        let s = 2.0f64.sqrt();
        assert!((eigs[0] - (2.0 - s)).abs() < 1e-13);
        assert!((eigs[1] - 2.0).abs() < 1e-13);
        assert!((eigs[2] - (2.0 + s)).abs() < 1e-13);
    }

    #[test]
    fn identity_diagonal() {
        let eigs = tridiag_eigs(&[1.0; 5], &[0.0; 4], 5).unwrap();
        for e in eigs {
            assert!((e - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn discrete_laplacian_closed_form() {
        // -u'' on (0,1) with n interior points: lambda_k = (2/D^2)(1 - cos(k pi / (n+1))).
        let n = 1000;
        let delta = 1.0 / (n as f64 + 1.0);
        let diag = vec![2.0 / (delta * delta); n];
        let off = vec![-1.0 / (delta * delta); n - 1];
        let eigs = tridiag_eigs(&diag, &off, 5).unwrap();
        for (k0, e) in eigs.iter().enumerate() {
            let k = (k0 + 1) as f64;
            let want =
                2.0 / (delta * delta) * (1.0 - (k * std::f64::consts::PI * delta).cos());
            assert!((e - want).abs() < 1e-9 * want, "k={k}: {e} vs {want}");
        }
    }

    #[test]
    fn sturm_count_is_monotone() {
        let diag = [1.0, 3.0, 2.0, 5.0];
        let off = [0.5, -0.7, 0.2];
        let mut prev = 0;
        for i in 0..=60 {
            let x = i as f64 / 10.0;
            let c = sturm_count(&diag, &off, x);
            assert!(c >= prev);
            prev = c;
        }
        assert_eq!(prev, 4);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(tridiag_eigs(&[], &[], 1).is_err());
        assert!(tridiag_eigs(&[1.0, 2.0], &[], 1).is_err());
    }
}
