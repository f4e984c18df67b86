//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use crate::error::{Error, Result};

pub(crate) const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the symmetric row-major `n x n` matrix `a` (unsorted),
/// the number of sweeps performed and the final off-diagonal Frobenius norm.
///
/// Stops once the off-diagonal norm is at most `1e-12 * n`.
pub(crate) fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, usize, f64)> {
    debug_assert_eq!(a.len(), n * n);
    let tol = 1e-12 * n.max(1) as f64;
    let mut sweeps = 0;
    let mut off = off_norm(&a, n);
    while off > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                rotate(&mut a, n, p, q, apq);
            }
        }
        sweeps += 1;
        off = off_norm(&a, n);
    }
    let eig = (0..n).map(|i| a[i * n + i]).collect();
    Ok((eig, sweeps, off))
}

fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, apq: f64) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.is_infinite() {
        // apq is negligible against the diagonal gap
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}
