//! Real symmetric 3×3 matrices: the shape of the two L-criteria.

use crate::linalg;
use serde::Serialize;

/// A 3×3 real symmetric matrix, symmetric by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymMat3 {
    entries: [[f64; 3]; 3],
}

impl SymMat3 {
    /// Build from the upper triangle; the lower triangle is mirrored so
    /// `m[i][j] == m[j][i]` holds exactly.
    pub fn from_upper(d0: f64, d1: f64, d2: f64, o01: f64, o02: f64, o12: f64) -> Self {
        SymMat3 {
            entries: [[d0, o01, o02], [o01, d1, o12], [o02, o12, d2]],
        }
    }

    pub fn diag(d0: f64, d1: f64, d2: f64) -> Self {
        Self::from_upper(d0, d1, d2, 0.0, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        Self::diag(1.0, 1.0, 1.0)
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.entries
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Eigenvalues ascending with orthonormal eigenvectors.
    pub fn eigen(&self) -> ([f64; 3], [[f64; 3]; 3]) {
        linalg::sym_eigen(&self.entries)
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        self.eigen().0
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn norm_fro(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    pub fn mul_vec(&self, v: &[f64; 3]) -> [f64; 3] {
        let m = &self.entries;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn det_of_scaled_identity() {
        let m = SymMat3::diag(2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0);
        assert_abs_diff_eq!(m.det(), 8.0 / 729.0, epsilon = 1e-18);
    }

    #[test]
    fn min_eigenvalue_examples() {
        assert_abs_diff_eq!(SymMat3::identity().min_eigenvalue(), 1.0, epsilon = 1e-14);
        let m = SymMat3::diag(0.0, 0.25, 0.25);
        assert_abs_diff_eq!(m.min_eigenvalue(), 0.0, epsilon = 1e-16);
    }

    #[test]
    fn symmetric_exactly() {
        let m = SymMat3::from_upper(1.0, 2.0, 3.0, 0.1, 0.2, 0.3);
        let e = m.entries();
        for (i, row) in e.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, e[j][i]);
            }
        }
    }
}
