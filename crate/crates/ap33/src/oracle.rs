//! Independent randomized verification of the spectral criterion.
//!
//! Membership in the set quantifies over *all* global unitaries, which no
//! finite computation exhausts. This module provides the stochastic half of a
//! two-sided check: sampling Haar-random unitaries U and testing positivity
//! of the partial transpose of U·diag(λ)·U† can falsify membership (a
//! negative eigenvalue is a certificate) but never prove it. Agreement with
//! the exact criterion over many samples is the cross-check.
//!
//! Sampling is seeded and counter-based: sample i of a scan uses a stream
//! derived from (seed, i), so the report's `argmin_seed` reproduces the worst
//! unitary exactly and parallel or sequential evaluation yields identical
//! results.

// dense index kernels: explicit loops over (i, j, k) read better here
#![allow(clippy::needless_range_loop)]

use crate::ap::{self, MembershipKind};
use crate::linalg;
use crate::spectrum::Spectrum;
use crate::Tolerances;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

pub type CMat9 = [[Complex64; 9]; 9];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("matrix deviates from Hermitian symmetry by {0:e}")]
    NotHermitian(f64),
    #[error("direction violates the admissible-row constraints by {0:e}")]
    InvalidDirection(f64),
    #[error("spectrum does not classify as a boundary point (kind: {0:?})")]
    NotBoundary(MembershipKind),
}

/// A dense 9×9 complex Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenseHermitian9 {
    m: CMat9,
}

impl DenseHermitian9 {
    /// Validate Hermitian symmetry to 1e-13 and wrap.
    pub fn from_matrix(m: CMat9) -> Result<Self, OracleError> {
        let mut dev = 0.0f64;
        for i in 0..9 {
            for j in 0..9 {
                dev = dev.max((m[i][j] - m[j][i].conj()).norm());
            }
        }
        if dev > 1e-13 {
            return Err(OracleError::NotHermitian(dev));
        }
        Ok(DenseHermitian9 { m })
    }

    /// diag(λ) as a 9×9 Hermitian matrix.
    pub fn from_spectrum_diag(s: &Spectrum) -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 9]; 9];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Complex64::new(s.lam(i), 0.0);
        }
        DenseHermitian9 { m }
    }

    pub fn entries(&self) -> &CMat9 {
        &self.m
    }

    pub fn trace(&self) -> Complex64 {
        (0..9).map(|i| self.m[i][i]).sum()
    }

    /// U · self · U† (stays Hermitian; reconstructed symmetrically to kill
    /// rounding skew).
    pub fn conjugate_by(&self, u: &CMat9) -> Self {
        let mut tmp = [[Complex64::new(0.0, 0.0); 9]; 9];
        for i in 0..9 {
            for k in 0..9 {
                let uik = u[i][k];
                for j in 0..9 {
                    tmp[i][j] += uik * self.m[k][j];
                }
            }
        }
        let mut out = [[Complex64::new(0.0, 0.0); 9]; 9];
        for i in 0..9 {
            for j in 0..9 {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..9 {
                    s += tmp[i][k] * u[j][k].conj();
                }
                out[i][j] = s;
            }
        }
        for i in 0..9 {
            for j in (i + 1)..9 {
                let h = 0.5 * (out[i][j] + out[j][i].conj());
                out[i][j] = h;
                out[j][i] = h.conj();
            }
            out[i][i] = Complex64::new(out[i][i].re, 0.0);
        }
        DenseHermitian9 { m: out }
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 9] {
        linalg::hermitian_eigenvalues(&self.m)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }
}

/// Partial transpose on the second qutrit: each 3×3 block of the 3×3 block
/// grid is transposed in place. An involution; preserves hermiticity.
pub fn partial_transpose(m: &DenseHermitian9) -> DenseHermitian9 {
    let a = m.entries();
    let mut out = [[Complex64::new(0.0, 0.0); 9]; 9];
    for bi in 0..3 {
        for bj in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    out[3 * bi + i][3 * bj + j] = a[3 * bi + j][3 * bj + i];
                }
            }
        }
    }
    DenseHermitian9 { m: out }
}

// splitmix64: decorrelates per-sample stream seeds from (seed, index)
fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e3779b97f4a7c15);
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A Haar-distributed 9×9 unitary: QR of a complex Ginibre matrix via
/// modified Gram-Schmidt with reorthogonalization. The R diagonal is real
/// positive by construction, which is exactly the phase convention that makes
/// Q Haar. Deterministic in the seed.
pub fn haar_unitary(seed: u64) -> CMat9 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = [[Complex64::new(0.0, 0.0); 9]; 9];
    for row in g.iter_mut() {
        for z in row.iter_mut() {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            *z = Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2;
        }
    }
    // orthonormalize columns
    let mut q = g;
    for j in 0..9 {
        for _pass in 0..2 {
            for k in 0..j {
                let mut r = Complex64::new(0.0, 0.0);
                for i in 0..9 {
                    r += q[i][k].conj() * q[i][j];
                }
                for i in 0..9 {
                    let qik = q[i][k];
                    q[i][j] -= r * qik;
                }
            }
        }
        let norm: f64 = (0..9).map(|i| q[i][j].norm_sqr()).sum::<f64>().sqrt();
        for i in 0..9 {
            q[i][j] /= norm;
        }
    }
    q
}

/// Result of a Monte-Carlo partial-transpose scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct McReport {
    pub n_samples: usize,
    /// Minimum over all samples of the smallest PT eigenvalue.
    pub min_pt_eigenvalue: f64,
    /// Per-sample stream seed achieving the minimum; feed it back to
    /// [`haar_unitary`] to reproduce the worst unitary exactly.
    pub argmin_seed: u64,
    #[serde(serialize_with = "ser_duration_secs")]
    pub elapsed: Duration,
}

fn ser_duration_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Scan `n` Haar samples of U·diag(λ)·U† for partial-transpose negativity.
///
/// For a member spectrum the reported minimum must stay ≥ −1e−8 (it is a
/// stochastic upper bound on the true infimum ≥ 0); for a non-member a
/// negative minimum is a falsification certificate, a nonnegative one is
/// inconclusive.
pub fn mc_ppt_scan(s: &Spectrum, n: usize, seed: u64) -> McReport {
    assert!(n >= 1, "need at least one sample");
    let start = Instant::now();
    let diag = DenseHermitian9::from_spectrum_diag(s);
    let mut min_eig = f64::INFINITY;
    let mut argmin_seed = 0;
    for i in 0..n {
        let sample_seed = mix_seed(seed, i as u64);
        let u = haar_unitary(sample_seed);
        let rho = diag.conjugate_by(&u);
        let e = partial_transpose(&rho).min_eigenvalue();
        if e < min_eig {
            min_eig = e;
            argmin_seed = sample_seed;
        }
    }
    McReport {
        n_samples: n,
        min_pt_eigenvalue: min_eig,
        argmin_seed,
        elapsed: start.elapsed(),
    }
}

/// A constructive non-extremality witness: s = (α + β)/2 with both endpoints
/// inside the set.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Witness {
    pub alpha: Spectrum,
    pub beta: Spectrum,
    pub eps: f64,
}

/// Search the largest ε ≤ `eps_max` such that both s ± ε·t stay inside the
/// set (40 bisection steps); `None` when no ε ≥ 1e−12 works, i.e. the
/// direction certifies nothing.
///
/// `t` must satisfy the admissible-row constraints of the boundary point:
/// zero sum, and equal components wherever eigenvalues coincide.
pub fn perturbation_decompose(
    s: &Spectrum,
    t: &[f64; 9],
    eps_max: f64,
    tols: &Tolerances,
) -> Result<Option<Witness>, OracleError> {
    assert!(eps_max > 0.0, "eps_max must be positive");
    let verdict =
        ap::classify(s, tols.det).map_err(|_| OracleError::NotBoundary(MembershipKind::NotAp))?;
    if verdict.kind != MembershipKind::Boundary {
        return Err(OracleError::NotBoundary(verdict.kind));
    }

    let scale = t.iter().map(|x| x.abs()).fold(0.0, f64::max).max(1e-300);
    let sum: f64 = t.iter().sum();
    let mut violation = sum.abs() / scale;
    for k in 0..8 {
        if s.lam(k) - s.lam(k + 1) <= tols.group {
            violation = violation.max((t[k] - t[k + 1]).abs() / scale);
        }
    }
    if violation > 1e-10 {
        return Err(OracleError::InvalidDirection(violation));
    }

    let side = |eps: f64, sign: f64| -> Option<Spectrum> {
        let mut v = [0.0; 9];
        for i in 0..9 {
            v[i] = s.lam(i) + sign * eps * t[i];
        }
        // a decomposition endpoint must be a genuine state: exactly
        // nonnegative (the constructor's clamp would fake one), and still
        // ordered (beyond a level crossing the direction is meaningless)
        if v.iter().any(|x| *x < 0.0) {
            return None;
        }
        if v.windows(2).any(|w| w[0] < w[1] - 1e-14) {
            return None;
        }
        Spectrum::new_renormalized(v).ok()
    };
    // Membership here is tested at rounding precision, not at the
    // classification tolerance: a genuine segment endpoint is exactly PSD,
    // while boundary fuzz of size tol/slope would otherwise fake a witness.
    const WITNESS_PSD_TOL: f64 = 1e-13;
    let both_ap = |eps: f64| -> Option<(Spectrum, Spectrum)> {
        let alpha = side(eps, 1.0)?;
        let beta = side(eps, -1.0)?;
        let ok = |sp: &Spectrum| {
            ap::build_l1(sp).min_eigenvalue() >= -WITNESS_PSD_TOL
                && ap::build_l2(sp).min_eigenvalue() >= -WITNESS_PSD_TOL
        };
        (ok(&alpha) && ok(&beta)).then_some((alpha, beta))
    };

    if let Some((alpha, beta)) = both_ap(eps_max) {
        return Ok(Some(Witness {
            alpha,
            beta,
            eps: eps_max,
        }));
    }
    let mut lo = 0.0f64;
    let mut hi = eps_max;
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if both_ap(mid).is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if lo >= 1e-12 {
        let (alpha, beta) = both_ap(lo).expect("bisection keeps lo feasible");
        Ok(Some(Witness {
            alpha,
            beta,
            eps: lo,
        }))
    } else {
        Ok(None)
    }
}
