//! Membership criterion for the convex set of absolutely PPT two-qutrit
//! states.
//!
//! A spectrum λ₁ ≥ … ≥ λ₉ belongs to the set exactly when the two symmetric
//! difference matrices L₁(λ), L₂(λ) are both positive semidefinite; a boundary
//! point has at least one of the determinants l₁ = det L₁, l₂ = det L₂ equal
//! to zero, while an interior point has both matrices strictly definite.

use crate::mat3::SymMat3;
use crate::spectrum::Spectrum;
use serde::Serialize;
use thiserror::Error;

/// Default tolerance for boundary/PSD decisions.
pub const DEFAULT_DET_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ApError {
    /// The corner inequality 4λ₇λ₉ ≥ (λ₁−λ₈)² failed for a spectrum whose
    /// L-matrices test positive semidefinite. Mathematically impossible, so
    /// it signals a numerical bug or a misconfigured tolerance.
    #[error(
        "corner inequality violated ({corner:e}) on a PSD pair (l1={l1:e}, l2={l2:e}); \
         check tolerance configuration"
    )]
    InternalInconsistency { corner: f64, l1: f64, l2: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipKind {
    NotAp,
    Boundary,
    Interior,
}

/// Which determinant(s) vanish on a boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveSet {
    None,
    L1Zero,
    L2Zero,
    Both,
}

/// Classification outcome with all diagnostic scalars.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MembershipVerdict {
    pub kind: MembershipKind,
    pub active: ActiveSet,
    pub l1: f64,
    pub l2: f64,
    pub min_eig_l1: f64,
    pub min_eig_l2: f64,
    pub corner: f64,
    /// λ₉ = 0: the criterion is stated for full rank and applied verbatim.
    pub rank_deficient: bool,
}

impl MembershipVerdict {
    pub fn is_ap(&self) -> bool {
        self.kind != MembershipKind::NotAp
    }
}

/// L₁(λ) = [[2λ₉, λ₈−λ₁, λ₆−λ₂], [·, 2λ₇, λ₅−λ₃], [·, ·, 2λ₄]].
pub fn build_l1(s: &Spectrum) -> SymMat3 {
    let l = s.lambda();
    SymMat3::from_upper(
        2.0 * l[8],
        2.0 * l[6],
        2.0 * l[3],
        l[7] - l[0],
        l[5] - l[1],
        l[4] - l[2],
    )
}

/// L₂(λ) = [[2λ₉, λ₈−λ₁, λ₇−λ₂], [·, 2λ₆, λ₅−λ₃], [·, ·, 2λ₄]].
pub fn build_l2(s: &Spectrum) -> SymMat3 {
    let l = s.lambda();
    SymMat3::from_upper(
        2.0 * l[8],
        2.0 * l[5],
        2.0 * l[3],
        l[7] - l[0],
        l[6] - l[1],
        l[4] - l[2],
    )
}

/// 4λ₇λ₉ − (λ₁−λ₈)². Nonnegative on the whole set: it is the (1,2)-principal
/// minor of L₁, hence implied by positive semidefiniteness.
pub fn corner_inequality(s: &Spectrum) -> f64 {
    let l = s.lambda();
    4.0 * l[6] * l[8] - (l[0] - l[7]) * (l[0] - l[7])
}

/// Classify a spectrum as NotAp / Boundary / Interior.
///
/// `tol` drives both decisions: a matrix is accepted as PSD when its smallest
/// eigenvalue is ≥ −tol, and a determinant counts as zero when it is at most
/// `tol · max(1, ‖L‖³)` (the determinant scales cubically with the matrix).
pub fn classify(s: &Spectrum, tol: f64) -> Result<MembershipVerdict, ApError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let m1 = build_l1(s);
    let m2 = build_l2(s);
    let l1 = m1.det();
    let l2 = m2.det();
    let min_eig_l1 = m1.min_eigenvalue();
    let min_eig_l2 = m2.min_eigenvalue();
    let corner = corner_inequality(s);
    let rank_deficient = s.rank_deficient();

    if min_eig_l1 < -tol || min_eig_l2 < -tol {
        return Ok(MembershipVerdict {
            kind: MembershipKind::NotAp,
            active: ActiveSet::None,
            l1,
            l2,
            min_eig_l1,
            min_eig_l2,
            corner,
            rank_deficient,
        });
    }

    let scale1 = m1.norm_fro().powi(3).max(1.0);
    let scale2 = m2.norm_fro().powi(3).max(1.0);
    let a1 = l1 <= tol * scale1;
    let a2 = l2 <= tol * scale2;
    let (kind, active) = match (a1, a2) {
        (true, true) => (MembershipKind::Boundary, ActiveSet::Both),
        (true, false) => (MembershipKind::Boundary, ActiveSet::L1Zero),
        (false, true) => (MembershipKind::Boundary, ActiveSet::L2Zero),
        (false, false) => (MembershipKind::Interior, ActiveSet::None),
    };
    if kind == MembershipKind::Interior && corner < -tol {
        return Err(ApError::InternalInconsistency { corner, l1, l2 });
    }
    Ok(MembershipVerdict {
        kind,
        active,
        l1,
        l2,
        min_eig_l1,
        min_eig_l2,
        corner,
        rank_deficient,
    })
}
