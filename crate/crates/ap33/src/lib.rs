//! Spectral analysis of absolutely PPT two-qutrit states.
//!
//! A two-qutrit state is absolutely PPT when it stays PPT under every global
//! unitary conjugation; for 3×3 systems this is decided by the eigenvalue
//! spectrum alone, through positive semidefiniteness of two 3×3 matrices of
//! ordered eigenvalue differences. This crate implements:
//!
//! - membership classification (not a member / boundary / interior) with full
//!   diagnostics ([`ap`]),
//! - a rank-nullity certificate deciding whether a boundary spectrum is an
//!   extreme point of the convex set ([`extremality`]),
//! - closed-form generators for every known extreme-point family with two or
//!   three distinct eigenvalues, including interval endpoints, limits, and
//!   the one non-extreme branch with its explicit segment decomposition
//!   ([`families`]),
//! - an independent randomized oracle: Haar-unitary sampling of partial
//!   transposes and constructive non-extremality witnesses ([`oracle`]).
//!
//! Run `cargo run -- verify` for the full acceptance suite, or see the
//! `examples/` directory for one runnable walkthrough per capability.

pub mod ap;
pub mod cli;
pub mod extremality;
pub mod families;
pub mod linalg;
pub mod mat3;
pub mod oracle;
pub mod poly;
pub mod spectrum;
pub mod verify;

pub use ap::{build_l1, build_l2, classify, corner_inequality, MembershipKind, MembershipVerdict};
pub use extremality::{extremality_test, interior_line_test, ExtremalityKind, ExtremalityVerdict};
pub use families::{eval_family, list_families, special_point, zeta, FamilySpec, ZetaId};
pub use spectrum::{Spectrum, ThreeLevel};

use serde::{Deserialize, Serialize};

/// Numerical tolerances used across the criteria.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Determinant threshold for boundary detection, relative to max(1, ‖L‖³).
    pub det: f64,
    /// Eigenvalue threshold for positive semidefiniteness.
    pub psd: f64,
    /// Singular-value threshold for the numeric rank of the t-system,
    /// relative to σ_max.
    pub rank: f64,
    /// Tolerance for grouping equal eigenvalues into multiplicities.
    pub group: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            det: 1e-10,
            psd: 1e-10,
            rank: 1e-9,
            group: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("det", self.det),
            ("psd", self.psd),
            ("rank", self.rank),
            ("group", self.group),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("tolerance `{name}` must be positive, got {v}"));
            }
        }
        Ok(())
    }
}
