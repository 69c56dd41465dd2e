//! Cyclic Jacobi eigenvalue solver for small Hermitian matrices.
//!
//! An `n×n` Hermitian `H = A + iB` is embedded as the real symmetric
//! `2n×2n` matrix `[[A, -B], [B, A]]`, whose spectrum is that of `H` with
//! every eigenvalue doubled. The real matrix is diagonalized by cyclic Jacobi
//! rotations and every second eigenvalue of the sorted result is kept.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::state::Complex;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix in descending order.
pub fn hermitian_eigenvalues(h: &DMatrix<Complex>) -> Result<Vec<f64>> {
    let n = h.nrows();
    if n != h.ncols() {
        return Err(Error::InvalidArgument(format!(
            "expected a square matrix, got {}x{}",
            n,
            h.ncols()
        )));
    }
    let mut a = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            a[(i, j)] = z.re;
            a[(i + n, j + n)] = z.re;
            a[(i, j + n)] = -z.im;
            a[(i + n, j)] = z.im;
        }
    }
    let mut values = symmetric_eigenvalues(a)?;
    values.sort_by(|p, q| q.total_cmp(p));
    Ok(values.into_iter().step_by(2).collect())
}

/// Eigenvalues of a real symmetric matrix, unordered.
pub fn symmetric_eigenvalues(mut a: DMatrix<f64>) -> Result<Vec<f64>> {
    let n = a.nrows();
    let total: f64 = a.iter().map(|v| v * v).sum();
    if total == 0.0 {
        return Ok(vec![0.0; n]);
    }
    // Off-diagonal mass at the roundoff level of n rotations per entry.
    let threshold = total * (n as f64 * f64::EPSILON).powi(2);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        if off <= threshold {
            return Ok((0..n).map(|i| a[(i, i)]).collect());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::Numerical(format!(
        "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
    )))
}
