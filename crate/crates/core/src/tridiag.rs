//! Thomas algorithm for tridiagonal systems with complex coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Solves `A x = rhs` where `A` has sub-diagonal `lower`, diagonal `diag`
/// and super-diagonal `upper`. `lower[0]` and `upper[n-1]` are ignored.
///
/// No pivoting; fails with [`Error::SingularSystem`] on a zero pivot.
pub fn solve(
    lower: &[Complex64],
    diag: &[Complex64],
    upper: &[Complex64],
    rhs: &[Complex64],
) -> Result<Vec<Complex64>> {
    let n = diag.len();
    assert!(lower.len() == n && upper.len() == n && rhs.len() == n, "tridiagonal bands must all have length {n}");
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut c = vec![Complex64::default(); n];
    let mut d = vec![Complex64::default(); n];

    let pivot = diag[0];
    if pivot == Complex64::default() {
        return Err(Error::SingularSystem { row: 0 });
    }
    c[0] = upper[0] / pivot;
    d[0] = rhs[0] / pivot;
    for i in 1..n {
        let pivot = diag[i] - lower[i] * c[i - 1];
        if pivot == Complex64::default() || !pivot.is_finite() {
            return Err(Error::SingularSystem { row: i });
        }
        c[i] = upper[i] / pivot;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / pivot;
    }

    // back substitution in place
    for i in (0..n - 1).rev() {
        let next = d[i + 1];
        d[i] -= c[i] * next;
    }
    Ok(d)
}

/// Tridiagonal matrix with constant off-diagonals and a per-row diagonal,
/// as produced by the Crank–Nicolson discretisation.
#[derive(Debug, Clone)]
pub struct Tridiagonal {
    pub lower: Vec<Complex64>,
    pub diag: Vec<Complex64>,
    pub upper: Vec<Complex64>,
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut y = self.diag[i] * x[i];
                if i > 0 {
                    y += self.lower[i] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.upper[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    pub fn solve(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        solve(&self.lower, &self.diag, &self.upper, rhs)
    }
}
