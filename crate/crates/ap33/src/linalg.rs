//! Small dense eigen/SVD kernels used by the spectral criteria.
//!
//! Everything here is sized for this crate's needs: symmetric 3×3 matrices
//! (the L-matrices), the M×9 constraint systems of the extremality test, and
//! 9×9 Hermitian partial transposes. Cyclic Jacobi iterations are used
//! throughout; they are deterministic and deliver eigenvalues accurate to a
//! few ulps of the matrix norm, which the rank thresholds downstream rely on.

// dense index kernels: explicit loops over (i, j, k) read better here
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition of a real symmetric N×N matrix by cyclic Jacobi.
///
/// Returns `(eigenvalues ascending, eigenvectors)` with `vectors[k]` the unit
/// eigenvector for `values[k]`.
pub fn sym_eigen<const N: usize>(m: &[[f64; N]; N]) -> ([f64; N], [[f64; N]; N]) {
    let mut a = *m;
    // v accumulates rotations; rows of the final transpose are eigenvectors
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..N {
            for q in (p + 1)..N {
                off += a[p][q] * a[p][q];
            }
        }
        if off <= f64::EPSILON * f64::EPSILON {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p][p];
                let aqq = a[q][q];
                // skip rotations that cannot change anything at working precision
                if apq.abs() <= f64::EPSILON * 0.5 * (app.abs() + aqq.abs()) && off < 1e-60 {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: [usize; N] = [0; N];
    for (i, o) in order.iter_mut().enumerate() {
        *o = i;
    }
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());

    let mut values = [0.0; N];
    let mut vectors = [[0.0; N]; N];
    for (k, &i) in order.iter().enumerate() {
        values[k] = a[i][i];
        for r in 0..N {
            vectors[k][r] = v[r][i];
        }
    }
    (values, vectors)
}

/// Eigenvalues (ascending) of a complex Hermitian N×N matrix by cyclic Jacobi
/// with unitary two-sided rotations.
pub fn hermitian_eigenvalues<const N: usize>(m: &[[Complex64; N]; N]) -> [f64; N] {
    let mut a = *m;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..N {
            for q in (p + 1)..N {
                off += a[p][q].norm_sqr();
            }
        }
        if off <= f64::EPSILON * f64::EPSILON {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                // phase e^{iφ} turns the 2×2 pivot block real symmetric
                let phase = apq / mag;
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // columns: J = [[c, s*phase], [-s*conj(phase), c]] acting on (p, q)
                let sp = phase * s;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp * c - akq * sp.conj();
                    a[k][q] = akp * sp + akq * c;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = apk * c - aqk * sp;
                    a[q][k] = apk * sp.conj() + aqk * c;
                }
            }
        }
    }
    let mut values = [0.0; N];
    for (i, val) in values.iter_mut().enumerate() {
        *val = a[i][i].re;
    }
    values.sort_by(|x, y| x.partial_cmp(y).unwrap());
    values
}

/// Thin SVD of an M×9 row-stacked system by one-sided Jacobi on the columns.
///
/// Returns singular values (descending) and the matching right singular
/// vectors. Working directly on the rows avoids the Gram-matrix squaring
/// that would wash out singular values near `1e-9 * sigma_max`.
pub struct SvdRight9 {
    pub singular_values: [f64; 9],
    /// `right_vectors[k]` is the unit right singular vector for `singular_values[k]`.
    pub right_vectors: [[f64; 9]; 9],
}

pub fn svd_right_9(rows: &[[f64; 9]]) -> SvdRight9 {
    let m = rows.len();
    // column-major working copy: cols[j] holds A e_j
    let mut cols: Vec<Vec<f64>> = (0..9)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect();
    let mut v = [[0.0f64; 9]; 9];
    for (j, row) in v.iter_mut().enumerate() {
        row[j] = 1.0;
    }

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..9 {
            for q in (p + 1)..9 {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for k in 0..m {
                    alpha += cols[p][k] * cols[p][k];
                    beta += cols[q][k] * cols[q][k];
                    gamma += cols[p][k] * cols[q][k];
                }
                if gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..m {
                    let xp = cols[p][k];
                    let xq = cols[q][k];
                    cols[p][k] = c * xp - s * xq;
                    cols[q][k] = s * xp + c * xq;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sigma = [0.0f64; 9];
    for (j, s) in sigma.iter_mut().enumerate() {
        *s = cols[j].iter().map(|x| x * x).sum::<f64>().sqrt();
    }
    let mut order: [usize; 9] = [0, 1, 2, 3, 4, 5, 6, 7, 8];
    order.sort_by(|&i, &j| sigma[j].partial_cmp(&sigma[i]).unwrap());

    let mut out = SvdRight9 {
        singular_values: [0.0; 9],
        right_vectors: [[0.0; 9]; 9],
    };
    for (k, &j) in order.iter().enumerate() {
        out.singular_values[k] = sigma[j];
        for r in 0..9 {
            out.right_vectors[k][r] = v[r][j];
        }
    }
    out
}

/// Flip a vector in place so its first coordinate of magnitude above `1e-12`
/// is positive. Makes eigen/null bases reproducible across runs.
pub fn orient_sign(v: &mut [f64]) {
    for &x in v.iter() {
        if x.abs() > 1e-12 {
            if x < 0.0 {
                for y in v.iter_mut() {
                    *y = -*y;
                }
            }
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sym_eigen_diagonal() {
        let m = [[3.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 2.0]];
        let (vals, _) = sym_eigen(&m);
        assert_abs_diff_eq!(vals[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(vals[1], 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(vals[2], 3.0, epsilon = 1e-15);
    }

    #[test]
    fn sym_eigen_known_3x3() {
        // (1/12)*[[2,-1,-1],[-1,2,-1],[-1,-1,2]] has eigenvalues {0, 1/4, 1/4}
        let s = 1.0 / 12.0;
        let m = [[2.0 * s, -s, -s], [-s, 2.0 * s, -s], [-s, -s, 2.0 * s]];
        let (vals, vecs) = sym_eigen(&m);
        assert_abs_diff_eq!(vals[0], 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(vals[1], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(vals[2], 0.25, epsilon = 1e-15);
        // null vector is (1,1,1)/sqrt(3) up to sign
        let v = vecs[0];
        let r = 1.0 / 3f64.sqrt();
        assert!((v[0].abs() - r).abs() < 1e-13);
        assert!((v[1].abs() - r).abs() < 1e-13);
        // residual ||Mv||
        for i in 0..3 {
            let mv: f64 = (0..3).map(|j| m[i][j] * v[j]).sum();
            assert!(mv.abs() < 1e-15);
        }
    }

    #[test]
    fn sym_eigen_orthonormal_9x9() {
        // deterministic pseudo-random symmetric matrix
        let mut m = [[0.0f64; 9]; 9];
        let mut state = 0x9e3779b97f4a7c15u64;
        for i in 0..9 {
            for j in i..9 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let x = ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5;
                m[i][j] = x;
                m[j][i] = x;
            }
        }
        let (vals, vecs) = sym_eigen(&m);
        for k in 0..9 {
            for l in 0..9 {
                let dot: f64 = (0..9).map(|r| vecs[k][r] * vecs[l][r]).sum();
                let expect = if k == l { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(dot, expect, epsilon = 1e-13);
            }
            // eigen residual
            for i in 0..9 {
                let mv: f64 = (0..9).map(|j| m[i][j] * vecs[k][j]).sum();
                assert_abs_diff_eq!(mv, vals[k] * vecs[k][i], epsilon = 1e-12);
            }
        }
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn hermitian_eigenvalues_match_real_case() {
        let re = [[2.0, -1.0, 0.5], [-1.0, 1.0, 0.25], [0.5, 0.25, -0.5]];
        let mut h = [[Complex64::new(0.0, 0.0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                h[i][j] = Complex64::new(re[i][j], 0.0);
            }
        }
        let hv = hermitian_eigenvalues(&h);
        let (sv, _) = sym_eigen(&re);
        for k in 0..3 {
            assert_abs_diff_eq!(hv[k], sv[k], epsilon = 1e-13);
        }
    }

    #[test]
    fn hermitian_eigenvalues_complex_2x2() {
        // [[0, i],[-i, 0]] has eigenvalues ±1
        let z = Complex64::new(0.0, 0.0);
        let h = [
            [z, Complex64::new(0.0, 1.0)],
            [Complex64::new(0.0, -1.0), z],
        ];
        let vals = hermitian_eigenvalues(&h);
        assert_abs_diff_eq!(vals[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn svd_detects_exact_null_direction() {
        // rows all orthogonal to (1,1,...,1)/3
        let mut rows = Vec::new();
        for k in 0..8 {
            let mut r = [0.0; 9];
            r[k] = 1.0;
            r[k + 1] = -1.0;
            rows.push(r);
        }
        let svd = svd_right_9(&rows);
        assert!(svd.singular_values[7] > 0.1);
        assert!(svd.singular_values[8] < 1e-14);
        let v = svd.right_vectors[8];
        for w in v.windows(2) {
            assert_abs_diff_eq!(w[0], w[1], epsilon = 1e-13);
        }
    }

    #[test]
    fn svd_full_rank_when_sum_row_added() {
        let mut rows = Vec::new();
        for k in 0..8 {
            let mut r = [0.0; 9];
            r[k] = 1.0;
            r[k + 1] = -1.0;
            rows.push(r);
        }
        rows.push([1.0; 9]);
        let svd = svd_right_9(&rows);
        // smallest singular value of the difference chain is 2 sin(pi/18)
        assert!(svd.singular_values[8] > 0.3);
    }
}
