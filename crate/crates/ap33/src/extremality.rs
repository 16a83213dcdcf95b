//! Rank-nullity extremality certificate for boundary points.
//!
//! A boundary spectrum is an extreme point exactly when the linear system in
//! the perturbation coordinates t₁…t₉ admits only the trivial solution. The
//! system stacks a trace-zero row, equality rows for repeated eigenvalues,
//! and the L-pattern rows contracted against the null vectors of each
//! vanishing L-matrix.
//! When a zero eigenspace is degenerate, rows for an entire orthonormal null
//! basis are stacked: an escape direction must annihilate the full null space,
//! so stacking is the conservative closure of the single-vector test.

use crate::ap::{self, ActiveSet, MembershipKind, MembershipVerdict};
use crate::linalg::{self, orient_sign};
use crate::mat3::SymMat3;
use crate::spectrum::Spectrum;
use crate::Tolerances;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtremalityError {
    #[error("matrix is not positive semidefinite: eigenvalue {0:e} below -tol")]
    NotPsd(f64),
    #[error("spectrum does not classify as a boundary point (kind: {0:?})")]
    NotBoundary(MembershipKind),
    #[error(transparent)]
    Criterion(#[from] ap::ApError),
}

/// Provenance of one row of the t-system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowTag {
    /// Σ tᵢ = 0.
    SumZero,
    /// t_k = t_{k+1} (1-based k), emitted whenever λ_k = λ_{k+1}.
    Equality(usize),
    /// Row `row` of the L1 pattern contracted with null vector `null_index`.
    L1Row { row: usize, null_index: usize },
    /// Row `row` of the L2 pattern contracted with null vector `null_index`.
    L2Row { row: usize, null_index: usize },
}

/// The stacked constraint system over t₁…t₉.
#[derive(Debug, Clone, Serialize)]
pub struct TSystem {
    pub rows: Vec<[f64; 9]>,
    pub provenance: Vec<RowTag>,
}

impl TSystem {
    pub fn apply(&self, v: &[f64; 9]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn residual_inf(&self, v: &[f64; 9]) -> f64 {
        self.apply(v).iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalityKind {
    Extreme,
    NotExtreme,
    NotApplicable,
}

/// Outcome of the extremality test, with the t-null basis and row provenance
/// kept for audit.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalityVerdict {
    pub kind: ExtremalityKind,
    /// Orthonormal null directions; empty iff `Extreme` or `NotApplicable`.
    pub null_basis: Vec<[f64; 9]>,
    pub reason: String,
    pub provenance: Vec<RowTag>,
}

/// Orthonormal basis of the eigenspace of `m` with eigenvalues in [−tol, tol].
///
/// Vectors are oriented so their first nonzero coordinate is positive.
/// Fails with `NotPsd` when an eigenvalue lies below −tol.
pub fn null_space(m: &SymMat3, tol: f64) -> Result<Vec<[f64; 3]>, ExtremalityError> {
    let (vals, vecs) = m.eigen();
    if vals[0] < -tol {
        return Err(ExtremalityError::NotPsd(vals[0]));
    }
    let mut basis = Vec::new();
    for (k, &v) in vals.iter().enumerate() {
        if v.abs() <= tol {
            let mut w = vecs[k];
            orient_sign(&mut w);
            basis.push(w);
        }
    }
    Ok(basis)
}

// Null vectors for the active L-matrix of a boundary point: always the
// eigenvector of the smallest eigenvalue, plus any other eigenvector
// indistinguishable from zero at the PSD tolerance.
fn boundary_null_vectors(m: &SymMat3, psd_tol: f64) -> Vec<[f64; 3]> {
    let (vals, vecs) = m.eigen();
    let zero_tol = psd_tol * m.norm_fro().max(1.0);
    let mut basis = Vec::new();
    for (k, &v) in vals.iter().enumerate() {
        if k == 0 || v.abs() <= zero_tol {
            let mut w = vecs[k];
            orient_sign(&mut w);
            basis.push(w);
        }
    }
    basis
}

// L1 pattern [[2t9, t8-t1, t6-t2], [t8-t1, 2t7, t5-t3], [t6-t2, t5-t3, 2t4]]
// contracted against w, expanded as linear forms in (t1..t9).
fn l1_rows(w: &[f64; 3]) -> [[f64; 9]; 3] {
    [
        [-w[1], -w[2], 0.0, 0.0, 0.0, w[2], 0.0, w[1], 2.0 * w[0]],
        [-w[0], 0.0, -w[2], 0.0, w[2], 0.0, 2.0 * w[1], w[0], 0.0],
        [0.0, -w[0], -w[1], 2.0 * w[2], w[1], w[0], 0.0, 0.0, 0.0],
    ]
}

// L2 pattern [[2t9, t8-t1, t7-t2], [t8-t1, 2t6, t5-t3], [t7-t2, t5-t3, 2t4]].
fn l2_rows(w: &[f64; 3]) -> [[f64; 9]; 3] {
    [
        [-w[1], -w[2], 0.0, 0.0, 0.0, 0.0, w[2], w[1], 2.0 * w[0]],
        [-w[0], 0.0, -w[2], 0.0, w[2], 2.0 * w[1], 0.0, w[0], 0.0],
        [0.0, -w[0], -w[1], 2.0 * w[2], w[1], 0.0, w[0], 0.0, 0.0],
    ]
}

/// Build the t-system of a boundary spectrum.
pub fn build_t_system(s: &Spectrum, tols: &Tolerances) -> Result<TSystem, ExtremalityError> {
    let verdict = ap::classify(s, tols.det)?;
    build_t_system_for(s, &verdict, tols)
}

fn build_t_system_for(
    s: &Spectrum,
    verdict: &MembershipVerdict,
    tols: &Tolerances,
) -> Result<TSystem, ExtremalityError> {
    if verdict.kind != MembershipKind::Boundary {
        return Err(ExtremalityError::NotBoundary(verdict.kind));
    }
    let mut rows = vec![[1.0; 9]];
    let mut provenance = vec![RowTag::SumZero];

    let lambda = s.lambda();
    for k in 0..8 {
        if lambda[k] - lambda[k + 1] <= tols.group {
            let mut r = [0.0; 9];
            r[k] = 1.0;
            r[k + 1] = -1.0;
            rows.push(r);
            provenance.push(RowTag::Equality(k + 1));
        }
    }

    let l1_active = matches!(verdict.active, ActiveSet::L1Zero | ActiveSet::Both);
    let l2_active = matches!(verdict.active, ActiveSet::L2Zero | ActiveSet::Both);
    if l1_active {
        for (j, w) in boundary_null_vectors(&ap::build_l1(s), tols.psd)
            .iter()
            .enumerate()
        {
            for (i, r) in l1_rows(w).into_iter().enumerate() {
                rows.push(r);
                provenance.push(RowTag::L1Row {
                    row: i,
                    null_index: j,
                });
            }
        }
    }
    if l2_active {
        for (j, w) in boundary_null_vectors(&ap::build_l2(s), tols.psd)
            .iter()
            .enumerate()
        {
            for (i, r) in l2_rows(w).into_iter().enumerate() {
                rows.push(r);
                provenance.push(RowTag::L2Row {
                    row: i,
                    null_index: j,
                });
            }
        }
    }
    Ok(TSystem { rows, provenance })
}

/// Decide extremality of a spectrum.
///
/// `NotApplicable` for interior or non-member spectra; `Extreme` when the
/// t-system has numeric rank 9 (singular values below `tols.rank · σ_max`
/// treated as zero); otherwise `NotExtreme` with an orthonormal null basis.
pub fn extremality_test(s: &Spectrum, tols: &Tolerances) -> ExtremalityVerdict {
    let verdict = match ap::classify(s, tols.det) {
        Ok(v) => v,
        Err(e) => {
            return ExtremalityVerdict {
                kind: ExtremalityKind::NotApplicable,
                null_basis: Vec::new(),
                reason: format!("classification failed: {e}"),
                provenance: Vec::new(),
            }
        }
    };
    match verdict.kind {
        MembershipKind::NotAp => {
            return ExtremalityVerdict {
                kind: ExtremalityKind::NotApplicable,
                null_basis: Vec::new(),
                reason: "not absolutely PPT".to_string(),
                provenance: Vec::new(),
            }
        }
        MembershipKind::Interior => {
            return ExtremalityVerdict {
                kind: ExtremalityKind::NotApplicable,
                null_basis: Vec::new(),
                reason: "interior point".to_string(),
                provenance: Vec::new(),
            }
        }
        MembershipKind::Boundary => {}
    }
    let system = build_t_system_for(s, &verdict, tols)
        .expect("boundary verdict implies a constructible t-system");
    let svd = linalg::svd_right_9(&system.rows);
    let sigma_max = svd.singular_values[0];
    let threshold = tols.rank * sigma_max;
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&x| x > threshold)
        .count();
    if rank == 9 {
        ExtremalityVerdict {
            kind: ExtremalityKind::Extreme,
            null_basis: Vec::new(),
            reason: "t-system has full rank 9 (trivial solution only)".to_string(),
            provenance: system.provenance,
        }
    } else {
        let mut basis = Vec::new();
        for k in rank..9 {
            let mut v = svd.right_vectors[k];
            orient_sign(&mut v);
            basis.push(v);
        }
        ExtremalityVerdict {
            kind: ExtremalityKind::NotExtreme,
            null_basis: basis,
            reason: format!("t-system rank {rank} < 9"),
            provenance: system.provenance,
        }
    }
}

/// Two-sided line-segment probe: true iff both (s + δ·probe)/(1+δ) and
/// (s − δ·probe)/(1−δ) stay absolutely PPT at δ = eps. An interior point
/// passes for every probe; a boundary point fails for some.
pub fn interior_line_test(s: &Spectrum, probe: &Spectrum, eps: f64, tols: &Tolerances) -> bool {
    assert!(eps > 0.0 && eps < 0.1, "eps must lie in (0, 0.1)");
    let shifted = |sign: f64| -> Option<Spectrum> {
        let mut v = [0.0; 9];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = (s.lam(i) + sign * eps * probe.lam(i)) / (1.0 + sign * eps);
        }
        Spectrum::new_renormalized(v).ok()
    };
    let ap_side = |sp: Option<Spectrum>| -> bool {
        match sp {
            Some(sp) => ap::classify(&sp, tols.det)
                .map(|v| v.is_ap())
                .unwrap_or(false),
            None => false,
        }
    };
    ap_side(shifted(1.0)) && ap_side(shifted(-1.0))
}
