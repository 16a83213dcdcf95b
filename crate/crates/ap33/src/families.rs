//! Closed-form generators for every known extreme point of the set.
//!
//! Eight anchor states ζ1–ζ8 have exactly two distinct eigenvalues. Every
//! boundary point with exactly three distinct eigenvalues lives on one of the
//! one-parameter families ν_{μa,μb,μc}(c) below: the middle eigenvalue b
//! solves a quadratic or cubic determinant equation in c, the top eigenvalue
//! follows from the unit trace, and each family's parameter interval is
//! bracketed by limits that collapse onto the two-eigenvalue anchors (or onto
//! one of two isolated common points where both determinants vanish). All of
//! them are extreme points except the ν_{1,5,3} branch with a = 3c, which is
//! exactly the open segment between ζ1 and ζ6.
//!
//! Root selection follows the convention "real roots first, in ascending
//! numerical order"; roots are polished to machine residual, so "the second
//! root" is reproducible across platforms.

use crate::ap;
use crate::poly;
use crate::spectrum::{Spectrum, SpectrumError, ThreeLevel};
use serde::Serialize;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("parameter c = {c} outside the family interval [{lo}, {hi}] (closedness {lo_closed}/{hi_closed})")]
    OutOfRange {
        c: f64,
        lo: f64,
        hi: f64,
        lo_closed: bool,
        hi_closed: bool,
    },
    #[error("root selection failed for {family} at c = {c}: {reason}")]
    RootSelection {
        family: String,
        c: f64,
        reason: String,
    },
    #[error("spectrum does not match the (1,5,3) pattern with a = 3c: {0}")]
    PatternMismatch(String),
    #[error("eps must lie in (0, 1e-4], got {0}")]
    BadEps(f64),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Identifier of one of the eight two-eigenvalue anchor states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZetaId(u8);

impl ZetaId {
    pub fn new(index: u8) -> Option<Self> {
        (1..=8).contains(&index).then_some(ZetaId(index))
    }

    pub fn index(&self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ZetaId> {
        (1..=8).map(ZetaId)
    }
}

impl fmt::Display for ZetaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta{}", self.0)
    }
}

/// The root of x³ − x² − 5x + 1 = 0 in (2, 3); the eigenvalue ratio of ζ5.
/// Computed once at startup from the bracketing interval, never transcribed.
pub fn zeta5_x() -> f64 {
    static X: OnceLock<f64> = OnceLock::new();
    *X.get_or_init(|| poly::cubic_root_in(&[1.0, -1.0, -5.0, 1.0], 2.0, 3.0))
}

/// The second ascending real root of 481y³ − 37y² − 17y + 1 = 0, bracketed in
/// (0.05, 0.06); the shared endpoint of the families limiting onto ζ5.
pub fn endpoint_y() -> f64 {
    static Y: OnceLock<f64> = OnceLock::new();
    *Y.get_or_init(|| poly::cubic_root_in(&[481.0, -37.0, -17.0, 1.0], 0.05, 0.06))
}

/// The anchor spectrum ζi.
pub fn zeta(id: ZetaId) -> Spectrum {
    let two = |hi: f64, n_hi: usize, lo: f64| -> Spectrum {
        let mut v = [lo; 9];
        for slot in v.iter_mut().take(n_hi) {
            *slot = hi;
        }
        Spectrum::new(v).expect("anchor spectra are exact")
    };
    match id.0 {
        1 => two(3.0 / 11.0, 1, 1.0 / 11.0),
        2 => {
            let d = 9.0 + 2.0 * 2f64.sqrt();
            two((2f64.sqrt() + 1.0) / d, 2, 1.0 / d)
        }
        3 => two(2.0 / 12.0, 3, 1.0 / 12.0),
        4 => {
            let d = 10.0 + 17f64.sqrt();
            two((5.0 + 17f64.sqrt()) / (4.0 * d), 4, 1.0 / d)
        }
        5 => {
            let x = zeta5_x();
            let d = 5.0 * x + 4.0;
            two(x / d, 5, 1.0 / d)
        }
        6 => two(3.0 / 21.0, 6, 1.0 / 21.0),
        7 => {
            let d = 23.0 + 14.0 * 2f64.sqrt();
            two((3.0 + 2.0 * 2f64.sqrt()) / d, 7, 1.0 / d)
        }
        8 => two(1.0 / 8.0, 8, 0.0),
        _ => unreachable!("ZetaId is validated on construction"),
    }
}

/// Isolated boundary points where both determinants vanish simultaneously.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialPointId {
    /// ν_{2,4,3}^{(3)} at c = (85 − 14√10)/585.
    Nu243_3,
    /// ν_{6,2,1}^{(3)} = diag(8,8,8,8,8,8,4,4,1)/57.
    Nu621_3,
}

impl SpecialPointId {
    /// Comma-free label used in CSV output.
    pub fn compact(&self) -> &'static str {
        match self {
            SpecialPointId::Nu243_3 => "nu243v3",
            SpecialPointId::Nu621_3 => "nu621v3",
        }
    }
}

impl fmt::Display for SpecialPointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialPointId::Nu243_3 => write!(f, "nu{{2,4,3}}^(3)"),
            SpecialPointId::Nu621_3 => write!(f, "nu{{6,2,1}}^(3)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialPoint {
    pub id: SpecialPointId,
    pub spectrum: Spectrum,
    pub c_value: f64,
}

/// Construct a special point; both determinants are checked to vanish.
pub fn special_point(id: SpecialPointId) -> SpecialPoint {
    let (spectrum, c_value) = match id {
        SpecialPointId::Nu243_3 => {
            let root = 85.0 - 14.0 * 10f64.sqrt();
            let c = root / 585.0;
            let b = (36.0 - (19.0 / 117.0) * root) / (7.0 * root);
            let a = (1.0 - 4.0 * b - 3.0 * c) / 2.0;
            let t = ThreeLevel::new(a, b, c, 2, 4, 3).expect("exact closed form");
            (t.to_spectrum().expect("exact closed form"), c)
        }
        SpecialPointId::Nu621_3 => {
            let t = ThreeLevel::new(8.0 / 57.0, 4.0 / 57.0, 1.0 / 57.0, 6, 2, 1)
                .expect("exact closed form");
            (t.to_spectrum().expect("exact closed form"), 1.0 / 57.0)
        }
    };
    let l1 = ap::build_l1(&spectrum).det();
    let l2 = ap::build_l2(&spectrum).det();
    assert!(
        l1.abs() <= 1e-10 && l2.abs() <= 1e-10,
        "special point must have l1 = l2 = 0, got {l1:e}, {l2:e}"
    );
    SpecialPoint {
        id,
        spectrum,
        c_value,
    }
}

/// Which determinant vanishes along a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveConstraint {
    L1,
    L2,
    Both,
}

impl ActiveConstraint {
    pub fn l1_active(&self) -> bool {
        matches!(self, ActiveConstraint::L1 | ActiveConstraint::Both)
    }

    pub fn l2_active(&self) -> bool {
        matches!(self, ActiveConstraint::L2 | ActiveConstraint::Both)
    }
}

/// Family identifier: multiplicities plus an optional variant superscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyId {
    pub mu_a: usize,
    pub mu_b: usize,
    pub mu_c: usize,
    pub variant: Option<u8>,
}

impl FamilyId {
    /// Comma-free label used in CSV output: `nu153`, `nu243v1`.
    pub fn compact(&self) -> String {
        let mut s = format!("nu{}{}{}", self.mu_a, self.mu_b, self.mu_c);
        if let Some(v) = self.variant {
            s.push('v');
            s.push_str(&v.to_string());
        }
        s
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu{{{},{},{}}}", self.mu_a, self.mu_b, self.mu_c)?;
        if let Some(v) = self.variant {
            write!(f, "^({v})")?;
        }
        Ok(())
    }
}

/// Where a family lands when c reaches an interval endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitTarget {
    Zeta(ZetaId),
    Special(SpecialPointId),
}

impl LimitTarget {
    pub fn spectrum(&self) -> Spectrum {
        match self {
            LimitTarget::Zeta(id) => zeta(*id),
            LimitTarget::Special(id) => special_point(*id).spectrum,
        }
    }

    /// Comma-free label used in CSV output.
    pub fn compact(&self) -> String {
        match self {
            LimitTarget::Zeta(id) => id.to_string(),
            LimitTarget::Special(id) => id.compact().to_string(),
        }
    }
}

impl fmt::Display for LimitTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitTarget::Zeta(id) => id.fmt(f),
            LimitTarget::Special(id) => id.fmt(f),
        }
    }
}

#[derive(Clone, Copy)]
enum Form {
    /// b(c) in closed form; a follows from the unit trace.
    Closed(fn(f64) -> f64),
    /// b is the `root_index`-th (1-based, ascending) real root of the cubic;
    /// a follows from the unit trace.
    Cubic {
        coeffs: fn(f64) -> [f64; 4],
        root_index: usize,
    },
    /// Zero-width interval: the family is a single spectrum.
    Point(SpecialPointId),
}

/// One row of the classification tables: a family of boundary spectra
/// parameterized by the smallest eigenvalue c.
#[derive(Clone)]
pub struct FamilySpec {
    pub id: FamilyId,
    form: Form,
    pub c_lo: f64,
    pub c_hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub limit_lo: LimitTarget,
    pub limit_hi: LimitTarget,
    pub active: ActiveConstraint,
    /// `false` only for the flagged ν_{1,5,3} branch.
    pub extreme: bool,
}

impl fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilySpec")
            .field("id", &format!("{}", self.id))
            .field("c_lo", &self.c_lo)
            .field("c_hi", &self.c_hi)
            .field("active", &self.active)
            .field("extreme", &self.extreme)
            .finish()
    }
}

impl FamilySpec {
    pub fn name(&self) -> String {
        self.id.to_string()
    }

    /// The interval endpoints (lo, hi).
    pub fn endpoints(&self) -> (f64, f64) {
        (self.c_lo, self.c_hi)
    }

    pub fn is_point(&self) -> bool {
        matches!(self.form, Form::Point(_))
    }

    pub fn contains(&self, c: f64) -> bool {
        let above = if self.lo_closed {
            c >= self.c_lo
        } else {
            c > self.c_lo
        };
        let below = if self.hi_closed {
            c <= self.c_hi
        } else {
            c < self.c_hi
        };
        above && below
    }

    /// Evaluate the family at parameter c.
    pub fn eval(&self, c: f64) -> Result<Spectrum, FamilyError> {
        if !self.contains(c) {
            return Err(FamilyError::OutOfRange {
                c,
                lo: self.c_lo,
                hi: self.c_hi,
                lo_closed: self.lo_closed,
                hi_closed: self.hi_closed,
            });
        }
        let b = match self.form {
            Form::Closed(f) => f(c),
            Form::Cubic { coeffs, root_index } => {
                let co = coeffs(c);
                let roots = poly::real_roots_cubic(&co);
                if roots.len() < root_index {
                    return Err(FamilyError::RootSelection {
                        family: self.name(),
                        c,
                        reason: format!(
                            "wanted real root #{root_index}, cubic has {}",
                            roots.len()
                        ),
                    });
                }
                let b = roots[root_index - 1];
                let max_coeff = co.iter().fold(0.0f64, |m, x| m.max(x.abs()));
                let residual = poly::eval_cubic(&co, b).abs();
                if residual > 1e-12 * max_coeff {
                    return Err(FamilyError::RootSelection {
                        family: self.name(),
                        c,
                        reason: format!("root residual {residual:e} too large"),
                    });
                }
                b
            }
            Form::Point(id) => return Ok(special_point(id).spectrum),
        };
        let a = (1.0 - self.id.mu_b as f64 * b - self.id.mu_c as f64 * c) / self.id.mu_a as f64;
        let t =
            ThreeLevel::new(a, b, c, self.id.mu_a, self.id.mu_b, self.id.mu_c).map_err(|e| {
                FamilyError::RootSelection {
                    family: self.name(),
                    c,
                    reason: format!("selected branch violates a > b > c > 0: {e}"),
                }
            })?;
        Ok(t.to_spectrum()?)
    }

    /// Evaluate the three-level values (a, b, c) without expanding.
    pub fn eval_levels(&self, c: f64) -> Result<ThreeLevel, FamilyError> {
        let s = self.eval(c)?;
        let l = s.lambda();
        ThreeLevel::new(
            l[0],
            l[self.id.mu_a],
            l[8],
            self.id.mu_a,
            self.id.mu_b,
            self.id.mu_c,
        )
        .map_err(FamilyError::from)
    }

    /// Distance between the family evaluated `eps` inside the given endpoint
    /// (exactly at it when closed) and the endpoint's limit target.
    pub fn verify_limit(&self, end: End, eps: f64) -> Result<f64, FamilyError> {
        if !(eps > 0.0 && eps <= 1e-4) {
            return Err(FamilyError::BadEps(eps));
        }
        let (c, target) = match end {
            End::Lo => {
                let c = if self.lo_closed {
                    self.c_lo
                } else {
                    self.c_lo + eps
                };
                (c, self.limit_lo)
            }
            End::Hi => {
                let c = if self.hi_closed {
                    self.c_hi
                } else {
                    self.c_hi - eps
                };
                (c, self.limit_hi)
            }
        };
        let s = self.eval(c)?;
        Ok(s.distance_inf(&target.spectrum()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum End {
    Lo,
    Hi,
}

/// Evaluate a family at parameter c (free-function form of [`FamilySpec::eval`]).
pub fn eval_family(f: &FamilySpec, c: f64) -> Result<Spectrum, FamilyError> {
    f.eval(c)
}

/// The interval endpoints of a family.
pub fn family_endpoints(f: &FamilySpec) -> (f64, f64) {
    f.endpoints()
}

/// Decomposition of a ν_{1,5,3} spectrum as x·ζ1 + (1−x)·ζ6.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Nu153Decomposition {
    pub x: f64,
    pub residual: f64,
    pub c: f64,
}

/// Decompose a spectrum on the ν_{1,5,3} branch (pattern (1,5,3), a = 3c)
/// into the segment between ζ1 and ζ6: x = 11(21c − 1)/10.
pub fn nu153_decompose(s: &Spectrum) -> Result<Nu153Decomposition, FamilyError> {
    let pattern = s.pattern(1e-10);
    if pattern.counts() != vec![1, 5, 3] {
        return Err(FamilyError::PatternMismatch(format!(
            "multiplicities {:?}, expected [1, 5, 3]",
            pattern.counts()
        )));
    }
    let a = s.lam(0);
    let c = s.lam(8);
    if (a - 3.0 * c).abs() > 1e-10 {
        return Err(FamilyError::PatternMismatch(format!(
            "a = {a} is not 3c = {}",
            3.0 * c
        )));
    }
    let x = 11.0 * (21.0 * c - 1.0) / 10.0;
    let z1 = zeta(ZetaId::new(1).unwrap());
    let z6 = zeta(ZetaId::new(6).unwrap());
    let mut residual = 0.0f64;
    for i in 0..9 {
        let combo = x * z1.lam(i) + (1.0 - x) * z6.lam(i);
        residual = residual.max((s.lam(i) - combo).abs());
    }
    Ok(Nu153Decomposition { x, residual, c })
}

// Interval endpoint constants, exact expressions from the tables.
fn c_117_lo() -> f64 {
    (9.0 - 2.0 * 2f64.sqrt()) / 73.0
}
fn c_135_lo() -> f64 {
    (10.0 - 17f64.sqrt()) / 83.0
}
fn c_162_lo() -> f64 {
    (23.0 - 14.0 * 2f64.sqrt()) / 137.0
}
fn c_243_mid() -> f64 {
    (85.0 - 14.0 * 10f64.sqrt()) / 585.0
}

/// All rows of the classification tables: 29 one-parameter extreme families,
/// the two isolated common points, and the flagged non-extreme ν_{1,5,3}
/// branch.
pub fn list_families() -> Vec<FamilySpec> {
    use ActiveConstraint as A;
    use LimitTarget::{Special, Zeta as Z};
    let z = |i: u8| Z(ZetaId::new(i).unwrap());
    let y = endpoint_y();

    let open = |id: FamilyId,
                form: Form,
                lo: f64,
                hi: f64,
                limit_lo: LimitTarget,
                limit_hi: LimitTarget,
                active: A| FamilySpec {
        id,
        form,
        c_lo: lo,
        c_hi: hi,
        lo_closed: false,
        hi_closed: false,
        limit_lo,
        limit_hi,
        active,
        extreme: true,
    };
    let id = |a: usize, b: usize, c: usize| FamilyId {
        mu_a: a,
        mu_b: b,
        mu_c: c,
        variant: None,
    };
    let idv = |a: usize, b: usize, c: usize, v: u8| FamilyId {
        mu_a: a,
        mu_b: b,
        mu_c: c,
        variant: Some(v),
    };

    let mut out = Vec::with_capacity(32);

    // --- one maximal eigenvalue ---
    out.push(open(
        id(1, 1, 7),
        Form::Closed(|c| (1.0 - 7.0 * c - (-73.0 * c * c + 18.0 * c - 1.0).sqrt()) / 2.0),
        c_117_lo(),
        1.0 / 11.0,
        z(2),
        z(1),
        A::Both,
    ));
    out.push(open(
        id(1, 2, 6),
        Form::Closed(|c| 2.0 * c - (12.0 * c * c - c).sqrt()),
        1.0 / 12.0,
        1.0 / 11.0,
        z(3),
        z(1),
        A::Both,
    ));
    out.push(open(
        id(1, 3, 5),
        Form::Closed(|c| (1.0 - 10.0 * c + (108.0 * c * c - 20.0 * c + 1.0).sqrt()) / 4.0),
        c_135_lo(),
        1.0 / 11.0,
        z(4),
        z(1),
        A::Both,
    ));
    out.push(open(
        id(1, 4, 4),
        Form::Cubic {
            coeffs: |c| {
                [
                    16.0,
                    41.0 * c - 8.0,
                    19.0 * c * c - 10.0 * c + 1.0,
                    c * c * c,
                ]
            },
            root_index: 2,
        },
        y,
        1.0 / 11.0,
        z(5),
        z(1),
        A::Both,
    ));
    // the one non-extreme branch: a = 3c, the open segment (ζ6, ζ1)
    let mut nu153 = open(
        id(1, 5, 3),
        Form::Closed(|c| (1.0 - 6.0 * c) / 5.0),
        1.0 / 21.0,
        1.0 / 11.0,
        z(6),
        z(1),
        A::L1,
    );
    nu153.extreme = false;
    out.push(nu153);
    out.push(open(
        id(1, 6, 2),
        Form::Closed(|c| (3.0 - 8.0 * c - (6.0 * c - 17.0 * c * c).sqrt()) / 18.0),
        c_162_lo(),
        1.0 / 11.0,
        z(7),
        z(1),
        A::Both,
    ));
    out.push(open(
        id(1, 7, 1),
        Form::Closed(|c| (4.0 - 3.0 * c - (8.0 * c - 7.0 * c * c).sqrt()) / 32.0),
        0.0,
        1.0 / 11.0,
        z(8),
        z(1),
        A::Both,
    ));

    // --- two maximal eigenvalues ---
    out.push(open(
        id(2, 1, 6),
        Form::Closed(|c| 1.0 - 10.0 * c - 2.0 * (12.0 * c * c - c).sqrt()),
        1.0 / 12.0,
        c_117_lo(),
        z(3),
        z(2),
        A::Both,
    ));
    out.push(open(
        id(2, 2, 5),
        Form::Cubic {
            coeffs: |c| {
                [
                    -4.0,
                    4.0 - 30.0 * c,
                    -37.0 * c * c + 14.0 * c - 1.0,
                    -2.0 * c * c * c,
                ]
            },
            root_index: 2,
        },
        c_135_lo(),
        c_117_lo(),
        z(4),
        z(2),
        A::Both,
    ));
    out.push(open(
        id(2, 3, 4),
        Form::Cubic {
            coeffs: |c| {
                let q = 1.0 - 6.0 * c;
                [
                    -9.0,
                    6.0 - 45.0 * c,
                    -56.0 * c * c + 18.0 * c - 1.0,
                    -c * q * q,
                ]
            },
            root_index: 2,
        },
        y,
        c_117_lo(),
        z(5),
        z(2),
        A::Both,
    ));
    let mut nu243v1 = open(
        idv(2, 4, 3, 1),
        Form::Cubic {
            coeffs: |c| {
                let q = 1.0 - 3.0 * c;
                [
                    -16.0,
                    8.0 - 76.0 * c,
                    -45.0 * c * c + 22.0 * c - 1.0,
                    -c * q * q,
                ]
            },
            root_index: 2,
        },
        1.0 / 21.0,
        c_243_mid(),
        z(6),
        Special(SpecialPointId::Nu243_3),
        A::L1,
    );
    nu243v1.hi_closed = true;
    out.push(nu243v1);
    let mut nu243v2 = open(
        idv(2, 4, 3, 2),
        Form::Closed(|c| (1.0 - 4.0 * c - (2.0 * c - 9.0 * c * c).sqrt()) / 4.0),
        c_243_mid(),
        c_117_lo(),
        Special(SpecialPointId::Nu243_3),
        z(2),
        A::L2,
    );
    nu243v2.lo_closed = true;
    out.push(nu243v2);
    out.push(FamilySpec {
        id: idv(2, 4, 3, 3),
        form: Form::Point(SpecialPointId::Nu243_3),
        c_lo: c_243_mid(),
        c_hi: c_243_mid(),
        lo_closed: true,
        hi_closed: true,
        limit_lo: Special(SpecialPointId::Nu243_3),
        limit_hi: Special(SpecialPointId::Nu243_3),
        active: A::Both,
        extreme: true,
    });
    out.push(open(
        id(2, 5, 2),
        Form::Closed(|c| (6.0 - 13.0 * c - (-201.0 * c * c + 66.0 * c - 1.0).sqrt()) / 37.0),
        c_162_lo(),
        c_117_lo(),
        z(7),
        z(2),
        A::Both,
    ));
    out.push(open(
        id(2, 6, 1),
        Form::Closed(|c| (2.0 - c - (4.0 * c - 3.0 * c * c).sqrt()) / 16.0),
        0.0,
        c_117_lo(),
        z(8),
        z(2),
        A::Both,
    ));

    // --- three maximal eigenvalues ---
    out.push(open(
        id(3, 1, 5),
        Form::Closed(|c| (1.0 - 26.0 * c + 3.0 * (1.0 - 20.0 * c + 132.0 * c * c).sqrt()) / 4.0),
        c_135_lo(),
        1.0 / 12.0,
        z(4),
        z(3),
        A::Both,
    ));
    out.push(open(
        id(3, 2, 4),
        Form::Cubic {
            coeffs: |c| {
                [
                    8.0,
                    -12.0 - 15.0 * c,
                    6.0 - 30.0 * c + 114.0 * c * c,
                    -1.0 + 12.0 * c - 39.0 * c * c + c * c * c,
                ]
            },
            root_index: 1,
        },
        y,
        1.0 / 12.0,
        z(5),
        z(3),
        A::Both,
    ));
    out.push(open(
        idv(3, 3, 3, 1),
        Form::Closed(|c| (3.0 - (3.0 * (-1.0 + 24.0 * c - 36.0 * c * c)).sqrt()) / 18.0),
        1.0 / 21.0,
        1.0 / 12.0,
        z(6),
        z(3),
        A::L1,
    ));
    out.push(open(
        id(3, 4, 2),
        Form::Cubic {
            coeffs: |c| {
                [
                    1.0,
                    -39.0 + 114.0 * c,
                    12.0 - 30.0 * c - 15.0 * c * c,
                    -1.0 + 6.0 * c - 12.0 * c * c + 8.0 * c * c * c,
                ]
            },
            root_index: 1,
        },
        c_162_lo(),
        1.0 / 12.0,
        z(7),
        z(3),
        A::Both,
    ));
    out.push(open(
        id(3, 5, 1),
        Form::Closed(|c| (8.0 + 13.0 * c - 3.0 * (16.0 * c + 33.0 * c * c).sqrt()) / 64.0),
        0.0,
        1.0 / 12.0,
        z(8),
        z(3),
        A::Both,
    ));

    // --- four maximal eigenvalues ---
    out.push(open(
        id(4, 1, 4),
        Form::Cubic {
            coeffs: |c| {
                [
                    3.0,
                    -7.0,
                    5.0 - 48.0 * c + 112.0 * c * c,
                    -1.0 + 16.0 * c - 48.0 * c * c - 32.0 * c * c * c,
                ]
            },
            root_index: 1,
        },
        y,
        c_135_lo(),
        z(5),
        z(4),
        A::Both,
    ));
    out.push(open(
        idv(4, 2, 3, 1),
        Form::Closed(|c| (2.0 - 9.0 * c - (-1.0 + 24.0 * c - 54.0 * c * c).sqrt()) / 10.0),
        1.0 / 21.0,
        c_135_lo(),
        z(6),
        z(4),
        A::L1,
    ));
    out.push(open(
        id(4, 3, 2),
        Form::Cubic {
            coeffs: |c| {
                [
                    11.0,
                    31.0 - 2.0 * c,
                    -11.0 + 36.0 * c - 52.0 * c * c,
                    1.0 - 10.0 * c + 36.0 * c * c - 40.0 * c * c * c,
                ]
            },
            root_index: 2,
        },
        c_162_lo(),
        c_135_lo(),
        z(7),
        z(4),
        A::Both,
    ));
    out.push(open(
        id(4, 4, 1),
        Form::Cubic {
            coeffs: |c| {
                [
                    256.0,
                    -128.0 - 128.0 * c,
                    20.0 + 24.0 * c - 44.0 * c * c,
                    -1.0 + c + c * c - c * c * c,
                ]
            },
            root_index: 1,
        },
        0.0,
        c_135_lo(),
        z(8),
        z(4),
        A::Both,
    ));

    // --- five maximal eigenvalues ---
    out.push(open(
        idv(5, 1, 3, 1),
        Form::Cubic {
            coeffs: |c| {
                [
                    1.0,
                    -3.0 - 161.0 * c,
                    3.0 + 22.0 * c - 168.0 * c * c,
                    -1.0 + 14.0 * c + 18.0 * c * c - 153.0 * c * c * c,
                ]
            },
            root_index: 1,
        },
        1.0 / 21.0,
        y,
        z(6),
        z(5),
        A::L1,
    ));
    out.push(open(
        id(5, 2, 2),
        Form::Cubic {
            coeffs: |c| {
                [
                    237.0,
                    -58.0 + 276.0 * c,
                    -1.0 - 56.0 * c + 66.0 * c * c,
                    1.0 - 16.0 * c + 77.0 * c * c - 98.0 * c * c * c,
                ]
            },
            root_index: 2,
        },
        c_162_lo(),
        y,
        z(7),
        z(5),
        A::Both,
    ));
    out.push(open(
        id(5, 3, 1),
        Form::Cubic {
            coeffs: |c| {
                [
                    128.0,
                    32.0 + 268.0 * c,
                    -14.0 - 72.0 * c + 86.0 * c * c,
                    1.0 - 3.0 * c + 3.0 * c * c - c * c * c,
                ]
            },
            root_index: 2,
        },
        0.0,
        y,
        z(8),
        z(5),
        A::Both,
    ));

    // --- six maximal eigenvalues ---
    out.push(open(
        idv(6, 1, 2, 1),
        Form::Closed(|c| 1.0 + 64.0 * c - 12.0 * (c + 28.0 * c * c).sqrt()),
        c_162_lo(),
        1.0 / 21.0,
        z(7),
        z(6),
        A::L1,
    ));
    let mut nu621v1 = open(
        idv(6, 2, 1, 1),
        Form::Closed(|c| (1.0 + 8.0 * c - 3.0 * (2.0 * c + 7.0 * c * c).sqrt()) / 8.0),
        1.0 / 57.0,
        1.0 / 21.0,
        Special(SpecialPointId::Nu621_3),
        z(6),
        A::L1,
    );
    nu621v1.lo_closed = true;
    out.push(nu621v1);
    let mut nu621v2 = open(
        idv(6, 2, 1, 2),
        Form::Closed(|c| (2.0 - 5.0 * c - 3.0 * (4.0 * c - 3.0 * c * c).sqrt()) / 16.0),
        0.0,
        1.0 / 57.0,
        z(8),
        Special(SpecialPointId::Nu621_3),
        A::L2,
    );
    nu621v2.hi_closed = true;
    out.push(nu621v2);
    out.push(FamilySpec {
        id: idv(6, 2, 1, 3),
        form: Form::Point(SpecialPointId::Nu621_3),
        c_lo: 1.0 / 57.0,
        c_hi: 1.0 / 57.0,
        lo_closed: true,
        hi_closed: true,
        limit_lo: Special(SpecialPointId::Nu621_3),
        limit_hi: Special(SpecialPointId::Nu621_3),
        active: A::Both,
        extreme: true,
    });

    // --- seven maximal eigenvalues ---
    out.push(open(
        id(7, 1, 1),
        Form::Closed(|c| (4.0 - 11.0 * c - 7.0 * (8.0 * c - 7.0 * c * c).sqrt()) / 32.0),
        0.0,
        c_162_lo(),
        z(8),
        z(7),
        A::Both,
    ));

    out
}

/// Look up families by multiplicities and optional variant.
pub fn find_families(
    mu_a: usize,
    mu_b: usize,
    mu_c: usize,
    variant: Option<u8>,
) -> Vec<FamilySpec> {
    list_families()
        .into_iter()
        .filter(|f| {
            f.id.mu_a == mu_a
                && f.id.mu_b == mu_b
                && f.id.mu_c == mu_c
                && (variant.is_none() || f.id.variant == variant)
        })
        .collect()
}
