//! Canonical 9-point spectra of two-qutrit states.
//!
//! A [`Spectrum`] is the sole input to every criterion in this crate: nine
//! nonincreasing, nonnegative eigenvalues summing to one. λ₉ = 0 is admitted
//! (one anchor state is rank deficient), and downstream verdicts carry a
//! rank-deficiency flag for that case.

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Largest negative input tolerated (clamped to zero) by the constructors.
pub const NEG_TOL: f64 = 1e-12;
/// Trace deviation accepted by the strict (library) constructor.
pub const STRICT_SUM_TOL: f64 = 1e-12;
/// Trace deviation accepted when renormalization is enabled (CLI default).
pub const RENORM_SUM_TOL: f64 = 1e-9;
/// Default tolerance for grouping equal eigenvalues into multiplicities.
pub const DEFAULT_GROUP_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error("eigenvalue {value:e} at position {index} is below the -1e-12 floor")]
    NegativeEigenvalue { index: usize, value: f64 },
    #[error("eigenvalue sum {sum} deviates from 1 beyond tolerance (renormalize={renormalize})")]
    NotNormalized { sum: f64, renormalize: bool },
    #[error("three-level values must satisfy a > b > c >= 0, got a={a}, b={b}, c={c}")]
    OrderViolation { a: f64, b: f64, c: f64 },
    #[error("multiplicities must be positive and sum to 9, got ({mu_a}, {mu_b}, {mu_c})")]
    BadMultiplicities {
        mu_a: usize,
        mu_b: usize,
        mu_c: usize,
    },
    #[error("failed to parse spectrum: {0}")]
    Parse(String),
}

/// Nine nonincreasing nonnegative reals with unit sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    lambda: [f64; 9],
}

impl Spectrum {
    /// Strict constructor: sorts, clamps negatives within [`NEG_TOL`], and
    /// rejects inputs whose sum deviates from 1 by more than [`STRICT_SUM_TOL`].
    pub fn new(values: [f64; 9]) -> Result<Self, SpectrumError> {
        make_spectrum(values, false)
    }

    /// Lenient constructor: accepts sums within [`RENORM_SUM_TOL`] of 1 and
    /// renormalizes. This is the CLI-facing path.
    pub fn new_renormalized(values: [f64; 9]) -> Result<Self, SpectrumError> {
        make_spectrum(values, true)
    }

    /// The maximally mixed spectrum (1/9, ..., 1/9).
    pub fn uniform() -> Self {
        Spectrum {
            lambda: [1.0 / 9.0; 9],
        }
    }

    pub fn lambda(&self) -> &[f64; 9] {
        &self.lambda
    }

    /// 0-based access: `lam(0)` is λ₁, the largest eigenvalue.
    pub fn lam(&self, i: usize) -> f64 {
        self.lambda[i]
    }

    pub fn sum(&self) -> f64 {
        kahan_sum(&self.lambda)
    }

    /// True when λ₉ vanishes (within [`NEG_TOL`]); the spectral criteria are
    /// stated for full rank and get applied verbatim here, flagged.
    pub fn rank_deficient(&self) -> bool {
        self.lambda[8] <= NEG_TOL
    }

    /// Max-norm distance between two spectra.
    pub fn distance_inf(&self, other: &Spectrum) -> f64 {
        self.lambda
            .iter()
            .zip(other.lambda.iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    /// Group equal eigenvalues into multiplicities. Adjacent entries join a
    /// group while they stay within `tol` of the group's leading value.
    pub fn pattern(&self, tol: f64) -> MultiplicityPattern {
        assert!(tol > 0.0, "grouping tolerance must be positive");
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=9 {
            if i == 9 || self.lambda[start] - self.lambda[i] > tol {
                let count = i - start;
                let value = self.lambda[start..i].iter().sum::<f64>() / count as f64;
                groups.push((value, count));
                start = i;
            }
        }
        MultiplicityPattern { groups, tol }
    }

    /// One-line CSV form, 17 significant digits per entry.
    pub fn to_csv_line(&self) -> String {
        self.lambda
            .iter()
            .map(|x| format!("{x:.16e}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse a single CSV line of 9 comma-separated values (strict sum check).
    pub fn from_csv_line(line: &str) -> Result<Self, SpectrumError> {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 9 {
            return Err(SpectrumError::Parse(format!(
                "expected 9 comma-separated values, got {}",
                fields.len()
            )));
        }
        let mut v = [0.0; 9];
        for (i, f) in fields.iter().enumerate() {
            v[i] = f
                .trim()
                .parse::<f64>()
                .map_err(|e| SpectrumError::Parse(format!("field {}: {e}", i + 1)))?;
        }
        Spectrum::new(v)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x:.12}")?;
        }
        write!(f, "]")
    }
}

// Spectra serialize as arrays of decimal strings (17 significant digits) so
// the JSON interchange format is byte-stable and round-trips f64 exactly.
impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(9))?;
        for x in &self.lambda {
            seq.serialize_element(&format!("{x:.16e}"))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SpecVisitor;
        impl<'de> Visitor<'de> for SpecVisitor {
            type Value = Spectrum;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of 9 numbers or decimal strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Spectrum, A::Error> {
                #[derive(Deserialize)]
                #[serde(untagged)]
                enum Entry {
                    Num(f64),
                    Str(String),
                }
                let mut v = [0.0; 9];
                for slot in v.iter_mut() {
                    let entry: Entry = seq
                        .next_element()?
                        .ok_or_else(|| de::Error::custom("expected 9 entries"))?;
                    *slot = match entry {
                        Entry::Num(x) => x,
                        Entry::Str(s) => s
                            .trim()
                            .parse::<f64>()
                            .map_err(|e| de::Error::custom(format!("bad entry: {e}")))?,
                    };
                }
                if seq.next_element::<serde_json::Value>()?.is_some() {
                    return Err(de::Error::custom("expected exactly 9 entries"));
                }
                Spectrum::new(v).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(SpecVisitor)
    }
}

/// Multiplicity structure of a spectrum: `(value, count)` groups in
/// nonincreasing value order, counts summing to 9.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityPattern {
    pub groups: Vec<(f64, usize)>,
    pub tol: f64,
}

impl MultiplicityPattern {
    pub fn counts(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.1).collect()
    }
}

/// A spectrum with exactly three distinct levels a > b > c ≥ 0 and fixed
/// multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThreeLevel {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub mu_a: usize,
    pub mu_b: usize,
    pub mu_c: usize,
}

impl ThreeLevel {
    pub fn new(
        a: f64,
        b: f64,
        c: f64,
        mu_a: usize,
        mu_b: usize,
        mu_c: usize,
    ) -> Result<Self, SpectrumError> {
        if mu_a == 0 || mu_b == 0 || mu_c == 0 || mu_a + mu_b + mu_c != 9 {
            return Err(SpectrumError::BadMultiplicities { mu_a, mu_b, mu_c });
        }
        if !(a > b && b > c && c >= 0.0) {
            return Err(SpectrumError::OrderViolation { a, b, c });
        }
        let trace = mu_a as f64 * a + mu_b as f64 * b + mu_c as f64 * c;
        if (trace - 1.0).abs() > STRICT_SUM_TOL {
            return Err(SpectrumError::NotNormalized {
                sum: trace,
                renormalize: false,
            });
        }
        Ok(ThreeLevel {
            a,
            b,
            c,
            mu_a,
            mu_b,
            mu_c,
        })
    }

    /// Expand to the full 9-point spectrum (a repeated μa times, then b, c).
    pub fn to_spectrum(&self) -> Result<Spectrum, SpectrumError> {
        let mut v = [0.0; 9];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = if i < self.mu_a {
                self.a
            } else if i < self.mu_a + self.mu_b {
                self.b
            } else {
                self.c
            };
        }
        Spectrum::new(v)
    }
}

/// Construct a spectrum from a three-level description.
pub fn from_three_level(t: &ThreeLevel) -> Result<Spectrum, SpectrumError> {
    t.to_spectrum()
}

fn kahan_sum(v: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &x in v {
        let y = x - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

fn make_spectrum(mut values: [f64; 9], renormalize: bool) -> Result<Spectrum, SpectrumError> {
    for (index, v) in values.iter_mut().enumerate() {
        if *v < -NEG_TOL {
            return Err(SpectrumError::NegativeEigenvalue { index, value: *v });
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    let sum = kahan_sum(&values);
    let tol = if renormalize {
        RENORM_SUM_TOL
    } else {
        STRICT_SUM_TOL
    };
    if (sum - 1.0).abs() > tol {
        return Err(SpectrumError::NotNormalized { sum, renormalize });
    }
    // skip the division when already within the invariant, keeping the
    // constructor exactly idempotent
    if (sum - 1.0).abs() > 1e-15 {
        for v in values.iter_mut() {
            *v /= sum;
        }
    }
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(Spectrum { lambda: values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn uniform_is_valid() {
        let s = Spectrum::uniform();
        assert_abs_diff_eq!(s.sum(), 1.0, epsilon = 1e-14);
        assert!(!s.rank_deficient());
    }

    #[test]
    fn zeta1_spectrum() {
        let mut v = [1.0 / 11.0; 9];
        v[0] = 3.0 / 11.0;
        let s = Spectrum::new(v).unwrap();
        assert_abs_diff_eq!(s.lam(0), 3.0 / 11.0, epsilon = 0.0);
        assert_abs_diff_eq!(s.sum(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn sorting_is_canonical() {
        let v = [0.1, 0.3, 0.05, 0.05, 0.1, 0.1, 0.1, 0.1, 0.1];
        let s = Spectrum::new(v).unwrap();
        let l = s.lambda();
        assert!(l.windows(2).all(|w| w[0] >= w[1]));
        assert_abs_diff_eq!(l[0], 0.3, epsilon = 0.0);
        assert_abs_diff_eq!(l[8], 0.05, epsilon = 0.0);
    }

    #[test]
    fn constructor_is_idempotent() {
        let v = [0.21, 0.116, 0.116, 0.116, 0.116, 0.116, 0.07, 0.07, 0.07];
        let s1 = Spectrum::new(v).unwrap();
        let s2 = Spectrum::new(*s1.lambda()).unwrap();
        assert_eq!(s1.lambda(), s2.lambda());
    }

    #[test]
    fn rejects_negative() {
        let mut v = [1.0 / 9.0; 9];
        v[8] = -1e-6;
        v[0] += 1e-6;
        assert!(matches!(
            Spectrum::new(v),
            Err(SpectrumError::NegativeEigenvalue { index: 8, .. })
        ));
    }

    #[test]
    fn clamps_tiny_negative() {
        let mut v = [0.125; 9];
        v[8] = -5e-13;
        let s = Spectrum::new(v).unwrap();
        assert_eq!(s.lam(8), 0.0);
        assert!(s.rank_deficient());
    }

    #[test]
    fn strict_rejects_what_renormalizing_accepts() {
        let v = [(1.0 + 3e-10) / 9.0; 9];
        assert!(matches!(
            Spectrum::new(v),
            Err(SpectrumError::NotNormalized {
                renormalize: false,
                ..
            })
        ));
        let s = Spectrum::new_renormalized(v).unwrap();
        assert_abs_diff_eq!(s.sum(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn pattern_uniform_single_group() {
        let p = Spectrum::uniform().pattern(1e-10);
        assert_eq!(p.counts(), vec![9]);
        assert_abs_diff_eq!(p.groups[0].0, 1.0 / 9.0, epsilon = 1e-16);
    }

    #[test]
    fn pattern_zeta1() {
        let mut v = [1.0 / 11.0; 9];
        v[0] = 3.0 / 11.0;
        let p = Spectrum::new(v).unwrap().pattern(1e-10);
        assert_eq!(p.counts(), vec![1, 8]);
    }

    #[test]
    fn pattern_nu621_3() {
        let v = [8.0, 8.0, 8.0, 8.0, 8.0, 8.0, 4.0, 4.0, 1.0].map(|x| x / 57.0);
        let p = Spectrum::new(v).unwrap().pattern(1e-10);
        assert_eq!(p.counts(), vec![6, 2, 1]);
        assert_abs_diff_eq!(p.groups[0].0, 8.0 / 57.0, epsilon = 1e-16);
        assert_abs_diff_eq!(p.groups[2].0, 1.0 / 57.0, epsilon = 1e-16);
    }

    #[test]
    fn three_level_round_trip() {
        let c = 0.07;
        let t = ThreeLevel::new(3.0 * c, (1.0 - 6.0 * c) / 5.0, c, 1, 5, 3).unwrap();
        let s = t.to_spectrum().unwrap();
        assert_abs_diff_eq!(s.lam(0), 0.21, epsilon = 1e-16);
        let p = s.pattern(1e-12);
        assert_eq!(p.counts(), vec![1, 5, 3]);
    }

    #[test]
    fn three_level_nu621() {
        let t = ThreeLevel::new(8.0 / 57.0, 4.0 / 57.0, 1.0 / 57.0, 6, 2, 1).unwrap();
        let s = t.to_spectrum().unwrap();
        assert_eq!(s.pattern(1e-12).counts(), vec![6, 2, 1]);
    }

    #[test]
    fn three_level_rejects_degenerate() {
        assert!(matches!(
            ThreeLevel::new(0.2, 0.2, 0.05, 1, 2, 6),
            Err(SpectrumError::OrderViolation { .. })
        ));
    }

    #[test]
    fn json_round_trip_as_strings() {
        let mut v = [1.0 / 11.0; 9];
        v[0] = 3.0 / 11.0;
        let s = Spectrum::new(v).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.starts_with("[\""), "serializes as strings: {json}");
        let back: Spectrum = serde_json::from_str(&json).unwrap();
        assert_eq!(s.lambda(), back.lambda());
    }

    #[test]
    fn csv_round_trip() {
        let s = Spectrum::uniform();
        let line = s.to_csv_line();
        let back = Spectrum::from_csv_line(&line).unwrap();
        assert_eq!(s.lambda(), back.lambda());
    }
}
