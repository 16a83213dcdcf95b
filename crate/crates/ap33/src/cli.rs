//! Command implementations behind the `ap33` binary.
//!
//! Spectra are addressed by named constants (`uniform`, `zeta3`,
//! `nu{1,5,3}@0.07`, `nu{2,4,3}^(1)@0.06`), inline values, or files; sweep
//! selectors address whole families (`all`, `nu3`, `nu{2,4,3}`). Output is
//! JSON or CSV with fixed columns (see `docs/formats.md`), byte-stable for a
//! fixed configuration and seed.

use crate::ap::{self, ActiveSet, MembershipKind};
use crate::extremality::{self, ExtremalityKind, ExtremalityVerdict};
use crate::families::{self, End, FamilySpec, ZetaId};
use crate::oracle;
use crate::spectrum::{Spectrum, SpectrumError};
use crate::verify::{self, VerifyConfig};
use crate::Tolerances;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Environment variable overriding the directory of `--out` paths.
pub const OUT_DIR_ENV: &str = "AP33_OUT_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Family(#[from] families::FamilyError),
    #[error(transparent)]
    Ap(#[from] ap::ApError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("config error: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Runtime configuration shared by all subcommands.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub tols: Tolerances,
    pub seed: u64,
    pub samples: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Renormalize spectra whose trace is within 1e-9 of one (CLI default on).
    pub renormalize: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tols: Tolerances::default(),
            seed: 2024,
            samples: 2000,
            format: OutputFormat::Json,
            out: None,
            renormalize: true,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        self.tols.validate().map_err(CliError::Config)
    }
}

fn resolve_out_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => {
            let name = path.file_name().unwrap_or(path.as_os_str());
            PathBuf::from(dir).join(name)
        }
        None => path.to_path_buf(),
    }
}

fn emit(cfg: &RunConfig, content: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => {
            let path = resolve_out_path(path);
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(&path, content)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

/// A resolved spectrum input together with its display name.
#[derive(Debug, Clone)]
pub struct ResolvedInput {
    pub name: String,
    pub spectrum: Spectrum,
}

fn parse_family_name(text: &str) -> Result<(usize, usize, usize, Option<u8>), CliError> {
    // compact form: nuABC with optional vN
    if let Some(rest) = text.strip_prefix("nu") {
        let digits: Vec<u32> = rest
            .chars()
            .take(3)
            .filter_map(|ch| ch.to_digit(10))
            .collect();
        if digits.len() == 3 {
            let tail = &rest[3..];
            let variant = match tail.strip_prefix('v') {
                Some(v) => Some(
                    v.parse::<u8>()
                        .map_err(|_| CliError::Parse(format!("bad variant `{v}` in `{text}`")))?,
                ),
                None if tail.is_empty() => None,
                None => return Err(CliError::Parse(format!("trailing `{tail}` in `{text}`"))),
            };
            let (a, b, c) = (digits[0] as usize, digits[1] as usize, digits[2] as usize);
            if a + b + c != 9 || a == 0 || b == 0 || c == 0 {
                return Err(CliError::Parse(format!(
                    "multiplicities in `{text}` must be positive and sum to 9"
                )));
            }
            return Ok((a, b, c, variant));
        }
    }
    // braced form: nu{a,b,c} with optional ^(v) or (v)
    let rest = text
        .strip_prefix("nu{")
        .ok_or_else(|| CliError::Parse(format!("expected nu{{a,b,c}}, got `{text}`")))?;
    let (inside, mut tail) = rest
        .split_once('}')
        .ok_or_else(|| CliError::Parse(format!("unterminated `{{` in `{text}`")))?;
    let parts: Vec<&str> = inside.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Parse(format!(
            "expected three multiplicities in `{text}`"
        )));
    }
    let mut mu = [0usize; 3];
    for (slot, p) in mu.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| CliError::Parse(format!("bad multiplicity `{p}` in `{text}`")))?;
    }
    if mu.iter().sum::<usize>() != 9 || mu.contains(&0) {
        return Err(CliError::Parse(format!(
            "multiplicities in `{text}` must be positive and sum to 9"
        )));
    }
    let mut variant = None;
    tail = tail.strip_prefix('^').unwrap_or(tail);
    if let Some(v) = tail.strip_prefix('(') {
        let (num, rest2) = v
            .split_once(')')
            .ok_or_else(|| CliError::Parse(format!("unterminated variant in `{text}`")))?;
        variant = Some(
            num.trim()
                .parse::<u8>()
                .map_err(|_| CliError::Parse(format!("bad variant `{num}`")))?,
        );
        tail = rest2;
    }
    if !tail.is_empty() {
        return Err(CliError::Parse(format!("trailing `{tail}` in `{text}`")));
    }
    Ok((mu[0], mu[1], mu[2], variant))
}

fn family_at(
    mu: (usize, usize, usize, Option<u8>),
    c: Option<f64>,
    original: &str,
) -> Result<ResolvedInput, CliError> {
    let candidates = families::find_families(mu.0, mu.1, mu.2, mu.3);
    if candidates.is_empty() {
        return Err(CliError::Parse(format!("unknown family `{original}`")));
    }
    match c {
        Some(c) => {
            let fit = candidates.iter().find(|f| f.contains(c)).ok_or_else(|| {
                CliError::Parse(format!(
                    "c = {c} lies in no branch of `{original}` (intervals: {})",
                    candidates
                        .iter()
                        .map(|f| format!("{} ({:.9}, {:.9})", f.id, f.c_lo, f.c_hi))
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })?;
            Ok(ResolvedInput {
                name: format!("{}@{c}", fit.id.compact()),
                spectrum: fit.eval(c)?,
            })
        }
        None => {
            let points: Vec<&FamilySpec> = candidates.iter().filter(|f| f.is_point()).collect();
            match points.as_slice() {
                [f] => Ok(ResolvedInput {
                    name: f.id.compact(),
                    spectrum: f.eval(f.c_lo)?,
                }),
                _ => Err(CliError::Parse(format!(
                    "`{original}` is a one-parameter family; append @c"
                ))),
            }
        }
    }
}

/// Resolve a spectrum argument: named constant, inline values, or file.
pub fn parse_spectrum_input(text: &str, cfg: &RunConfig) -> Result<ResolvedInput, CliError> {
    let text = text.trim();
    if text == "uniform" {
        return Ok(ResolvedInput {
            name: "uniform".into(),
            spectrum: Spectrum::uniform(),
        });
    }
    if let Some(n) = text.strip_prefix("zeta") {
        if let Ok(i) = n.parse::<u8>() {
            let id = ZetaId::new(i)
                .ok_or_else(|| CliError::Parse(format!("zeta index {i} outside 1..8")))?;
            return Ok(ResolvedInput {
                name: id.to_string(),
                spectrum: families::zeta(id),
            });
        }
    }
    if text.starts_with("nu") {
        let (head, c) = match text.split_once('@') {
            Some((head, cstr)) => {
                let c = cstr
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Parse(format!("bad parameter `{cstr}`")))?;
                (head, Some(c))
            }
            None => (text, None),
        };
        let mu = parse_family_name(head.trim())?;
        return family_at(mu, c, text);
    }
    // inline list of 9 numbers, comma or whitespace separated
    let fields: Vec<&str> = text
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|f| !f.is_empty())
        .collect();
    if fields.len() == 9 && fields.iter().all(|f| f.parse::<f64>().is_ok()) {
        let mut v = [0.0; 9];
        for (slot, f) in v.iter_mut().zip(&fields) {
            *slot = f.parse().unwrap();
        }
        let spectrum = if cfg.renormalize {
            Spectrum::new_renormalized(v)?
        } else {
            Spectrum::new(v)?
        };
        return Ok(ResolvedInput {
            name: "inline".into(),
            spectrum,
        });
    }
    // otherwise treat as a file path (JSON array or single CSV line)
    let path = Path::new(text);
    if path.exists() {
        let raw = std::fs::read_to_string(path)?;
        let spectrum = if raw.trim_start().starts_with('[') {
            serde_json::from_str::<Spectrum>(&raw)?
        } else {
            Spectrum::from_csv_line(raw.trim())?
        };
        return Ok(ResolvedInput {
            name: text.to_string(),
            spectrum,
        });
    }
    Err(CliError::Parse(format!(
        "`{text}` is not a named constant, 9 inline values, or an existing file"
    )))
}

/// Families matched by a sweep selector: `all`, `nuK`, `nu{a,b,c}`, or a
/// fully qualified `nu{a,b,c}^(v)`.
pub fn select_families(selector: &str) -> Result<Vec<FamilySpec>, CliError> {
    let selector = selector.trim();
    if selector == "all" {
        return Ok(families::list_families());
    }
    if let Some(k) = selector.strip_prefix("nu") {
        if k.len() == 1 {
            if let Ok(mu_a) = k.parse::<usize>() {
                let fams: Vec<FamilySpec> = families::list_families()
                    .into_iter()
                    .filter(|f| f.id.mu_a == mu_a)
                    .collect();
                if fams.is_empty() {
                    return Err(CliError::Parse(format!(
                        "no families with {mu_a} top eigenvalues"
                    )));
                }
                return Ok(fams);
            }
        }
        let mu = parse_family_name(selector)?;
        let fams = families::find_families(mu.0, mu.1, mu.2, mu.3);
        if fams.is_empty() {
            return Err(CliError::Parse(format!("unknown family `{selector}`")));
        }
        return Ok(fams);
    }
    Err(CliError::Parse(format!(
        "unknown selector `{selector}` (use `all`, `nu1`..`nu7`, `nu{{a,b,c}}[^(v)]`, or `nuABC[vN]`)"
    )))
}

#[derive(Debug, Serialize)]
struct ClassifyReport {
    input: String,
    spectrum: Spectrum,
    membership: ap::MembershipVerdict,
    extremality: ExtremalityVerdict,
}

/// `classify`: membership + extremality with diagnostics.
/// Exit code 0 when the spectrum is a member, 2 when it is not.
pub fn cmd_classify(input: &str, cfg: &RunConfig) -> Result<i32, CliError> {
    let resolved = parse_spectrum_input(input, cfg)?;
    let membership = ap::classify(&resolved.spectrum, cfg.tols.det)?;
    let extremality = extremality::extremality_test(&resolved.spectrum, &cfg.tols);
    let code = if membership.kind == MembershipKind::NotAp {
        2
    } else {
        0
    };
    let report = ClassifyReport {
        input: resolved.name,
        spectrum: resolved.spectrum,
        membership,
        extremality,
    };
    let content = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&report)?,
        OutputFormat::Csv => {
            let mut s = String::from(
                "input,kind,active,l1,l2,min_eig_l1,min_eig_l2,corner,rank_deficient,extremality\n",
            );
            let _ = writeln!(
                s,
                "{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{}",
                report.input,
                kind_str(membership.kind),
                active_str(membership.active),
                membership.l1,
                membership.l2,
                membership.min_eig_l1,
                membership.min_eig_l2,
                membership.corner,
                membership.rank_deficient,
                extremality_str(report.extremality.kind),
            );
            s.trim_end().to_string()
        }
    };
    emit(cfg, &content)?;
    Ok(code)
}

fn kind_str(k: MembershipKind) -> &'static str {
    match k {
        MembershipKind::NotAp => "not_ap",
        MembershipKind::Boundary => "boundary",
        MembershipKind::Interior => "interior",
    }
}

fn active_str(a: ActiveSet) -> &'static str {
    match a {
        ActiveSet::None => "none",
        ActiveSet::L1Zero => "l1_zero",
        ActiveSet::L2Zero => "l2_zero",
        ActiveSet::Both => "both",
    }
}

fn extremality_str(k: ExtremalityKind) -> &'static str {
    match k {
        ExtremalityKind::Extreme => "extreme",
        ExtremalityKind::NotExtreme => "not_extreme",
        ExtremalityKind::NotApplicable => "not_applicable",
    }
}

#[derive(Debug, Serialize)]
struct SweepRow {
    family: String,
    mu_a: usize,
    mu_b: usize,
    mu_c: usize,
    c: f64,
    a: f64,
    b: f64,
    l1: f64,
    l2: f64,
    min_eig_l1: f64,
    min_eig_l2: f64,
    corner: f64,
    membership: &'static str,
    active: &'static str,
    extremality: &'static str,
    dist_lo: f64,
    dist_hi: f64,
}

const SWEEP_HEADER: &str = "family,mu_a,mu_b,mu_c,c,a,b,l1,l2,min_eig_l1,min_eig_l2,corner,membership,active,extremality,dist_lo,dist_hi";

fn sweep_row(f: &FamilySpec, c: f64, cfg: &RunConfig) -> Result<SweepRow, CliError> {
    let s = f.eval(c)?;
    let levels = f.eval_levels(c)?;
    let membership = ap::classify(&s, cfg.tols.det)?;
    let extremality = extremality::extremality_test(&s, &cfg.tols);
    let dist_lo = s.distance_inf(&f.limit_lo.spectrum());
    let dist_hi = s.distance_inf(&f.limit_hi.spectrum());
    Ok(SweepRow {
        family: f.id.compact(),
        mu_a: f.id.mu_a,
        mu_b: f.id.mu_b,
        mu_c: f.id.mu_c,
        c,
        a: levels.a,
        b: levels.b,
        l1: membership.l1,
        l2: membership.l2,
        min_eig_l1: membership.min_eig_l1,
        min_eig_l2: membership.min_eig_l2,
        corner: membership.corner,
        membership: kind_str(membership.kind),
        active: active_str(membership.active),
        extremality: extremality_str(extremality.kind),
        dist_lo,
        dist_hi,
    })
}

fn render_rows(rows: &[SweepRow], format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(rows)?),
        OutputFormat::Csv => {
            let mut out = String::from(SWEEP_HEADER);
            out.push('\n');
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{},{},{:.16e},{:.16e}",
                    r.family, r.mu_a, r.mu_b, r.mu_c, r.c, r.a, r.b, r.l1, r.l2,
                    r.min_eig_l1, r.min_eig_l2, r.corner,
                    r.membership, r.active, r.extremality, r.dist_lo, r.dist_hi
                );
            }
            Ok(out.trim_end().to_string())
        }
    }
}

/// Sample parameters across a family interval, with the default relative
/// margin 1e-9·(hi − lo) at open endpoints.
pub fn sweep_parameters(f: &FamilySpec, steps: usize) -> Vec<f64> {
    if f.is_point() {
        return vec![f.c_lo];
    }
    let width = f.c_hi - f.c_lo;
    let margin = 1e-9 * width;
    let lo = if f.lo_closed { f.c_lo } else { f.c_lo + margin };
    let hi = if f.hi_closed { f.c_hi } else { f.c_hi - margin };
    (0..steps)
        .map(|j| lo + (hi - lo) * j as f64 / (steps - 1) as f64)
        .collect()
}

/// `sweep`: evaluate selected families across their intervals.
pub fn cmd_sweep(selector: &str, steps: usize, cfg: &RunConfig) -> Result<i32, CliError> {
    if steps < 2 {
        return Err(CliError::Parse("steps must be at least 2".into()));
    }
    let mut rows = Vec::new();
    for f in select_families(selector)? {
        for c in sweep_parameters(&f, steps) {
            rows.push(sweep_row(&f, c, cfg)?);
        }
    }
    emit(cfg, &render_rows(&rows, cfg.format)?)?;
    Ok(0)
}

/// `export`: the full dataset behind the classification figures.
pub fn cmd_export(steps: usize, cfg: &RunConfig) -> Result<i32, CliError> {
    cmd_sweep("all", steps, cfg)
}

#[derive(Debug, Serialize)]
struct LimitRow {
    family: String,
    end: &'static str,
    closed: bool,
    target: String,
    distance: f64,
    bound: f64,
    pass: bool,
}

/// `limits`: verify every interval-endpoint limit.
pub fn cmd_limits(eps: f64, cfg: &RunConfig) -> Result<i32, CliError> {
    let mut rows = Vec::new();
    let mut all_pass = true;
    for f in families::list_families() {
        for (end, name, closed, target) in [
            (End::Lo, "lo", f.lo_closed, f.limit_lo),
            (End::Hi, "hi", f.hi_closed, f.limit_hi),
        ] {
            let distance = f.verify_limit(end, eps)?;
            let bound = if closed { 1e-6 } else { 1e-3 };
            let pass = distance < bound;
            all_pass &= pass;
            rows.push(LimitRow {
                family: f.id.compact(),
                end: name,
                closed,
                target: target.compact(),
                distance,
                bound,
                pass,
            });
        }
    }
    let content = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&rows)?,
        OutputFormat::Csv => {
            let mut out = String::from("family,end,closed,target,distance,bound,pass\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{:.16e},{:.16e},{}",
                    r.family, r.end, r.closed, r.target, r.distance, r.bound, r.pass
                );
            }
            out.trim_end().to_string()
        }
    };
    emit(cfg, &content)?;
    Ok(if all_pass { 0 } else { 1 })
}

#[derive(Debug, Serialize)]
struct DecomposeReport {
    input: String,
    x: f64,
    residual: f64,
    c: f64,
}

/// `decompose`: express a ν_{1,5,3} spectrum as x·ζ1 + (1−x)·ζ6.
pub fn cmd_decompose(input: &str, cfg: &RunConfig) -> Result<i32, CliError> {
    let resolved = parse_spectrum_input(input, cfg)?;
    let d = families::nu153_decompose(&resolved.spectrum)?;
    let report = DecomposeReport {
        input: resolved.name,
        x: d.x,
        residual: d.residual,
        c: d.c,
    };
    let content = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&report)?,
        OutputFormat::Csv => format!(
            "input,x,residual,c\n{},{:.16e},{:.16e},{:.16e}",
            report.input, report.x, report.residual, report.c
        ),
    };
    emit(cfg, &content)?;
    Ok(0)
}

/// `oracle scan`: Monte-Carlo partial-transpose scan of one spectrum.
///
/// The JSON report (written to `--out`) carries every field including the
/// elapsed time; the stdout summary omits timing so it stays byte-stable.
pub fn cmd_oracle_scan(
    input: &str,
    samples: usize,
    seed: u64,
    out: Option<&Path>,
    cfg: &RunConfig,
) -> Result<i32, CliError> {
    let resolved = parse_spectrum_input(input, cfg)?;
    let report = oracle::mc_ppt_scan(&resolved.spectrum, samples, seed);
    let membership = ap::classify(&resolved.spectrum, cfg.tols.det)?;
    #[derive(Serialize)]
    struct ScanReport<'a> {
        input: &'a str,
        spectrum: &'a Spectrum,
        classify: &'static str,
        #[serde(flatten)]
        mc: &'a oracle::McReport,
    }
    if let Some(path) = out {
        let full = ScanReport {
            input: &resolved.name,
            spectrum: &resolved.spectrum,
            classify: kind_str(membership.kind),
            mc: &report,
        };
        let path = resolve_out_path(path);
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)?;
            }
        }
        std::fs::write(&path, serde_json::to_string_pretty(&full)?)?;
        eprintln!("wrote {}", path.display());
    }
    println!(
        "input={} classify={} n_samples={} min_pt_eigenvalue={:.16e} argmin_seed={}",
        resolved.name,
        kind_str(membership.kind),
        report.n_samples,
        report.min_pt_eigenvalue,
        report.argmin_seed
    );
    // a strictly negative minimum falsifies membership
    Ok(if report.min_pt_eigenvalue < -1e-8 {
        2
    } else {
        0
    })
}

/// `verify`: run the acceptance criteria; nonzero exit on any failure.
pub fn cmd_verify(only: Option<&str>, cfg: &RunConfig) -> Result<i32, CliError> {
    if let Some(name) = only {
        if !verify::CRITERIA.contains(&name) {
            return Err(CliError::Parse(format!(
                "unknown criterion `{name}` (available: {})",
                verify::CRITERIA.join(", ")
            )));
        }
    }
    let vcfg = VerifyConfig {
        tols: cfg.tols,
        seed: cfg.seed,
        oracle_samples: cfg.samples,
    };
    let results = verify::run(&vcfg, only);
    let mut all = true;
    for r in &results {
        println!("{}", r.line());
        all &= r.passed;
    }
    Ok(if all { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn parses_named_constants() {
        let z = parse_spectrum_input("zeta3", &cfg()).unwrap();
        assert_eq!(z.name, "zeta3");
        assert_eq!(z.spectrum.lam(0), 2.0 / 12.0);
        let u = parse_spectrum_input("uniform", &cfg()).unwrap();
        assert_eq!(u.spectrum, Spectrum::uniform());
    }

    #[test]
    fn parses_family_at_parameter() {
        let r = parse_spectrum_input("nu{1,5,3}@0.07", &cfg()).unwrap();
        assert!((r.spectrum.lam(0) - 0.21).abs() < 1e-15);
        // variant selection by interval membership
        let r = parse_spectrum_input("nu{2,4,3}@0.05", &cfg()).unwrap();
        assert!(r.name.starts_with("nu243v1"));
        let r = parse_spectrum_input("nu{2,4,3}@0.08", &cfg()).unwrap();
        assert!(r.name.starts_with("nu243v2"));
        // explicit variants work too
        let r = parse_spectrum_input("nu{6,2,1}^(3)", &cfg()).unwrap();
        assert_eq!(r.spectrum.lam(0), 8.0 / 57.0);
        // compact labels resolve the same way
        let braced = parse_spectrum_input("nu{1,5,3}@0.07", &cfg()).unwrap();
        let compact = parse_spectrum_input("nu153@0.07", &cfg()).unwrap();
        assert_eq!(braced.spectrum.lambda(), compact.spectrum.lambda());
        let point = parse_spectrum_input("nu621v3", &cfg()).unwrap();
        assert_eq!(point.spectrum.lam(0), 8.0 / 57.0);
    }

    #[test]
    fn rejects_out_of_branch_parameter() {
        assert!(parse_spectrum_input("nu{1,2,6}@0.05", &cfg()).is_err());
        assert!(parse_spectrum_input("nu{1,2,6}", &cfg()).is_err());
        assert!(parse_spectrum_input("zeta9", &cfg()).is_err());
        assert!(parse_spectrum_input("nu{1,2,7}@0.05", &cfg()).is_err());
    }

    #[test]
    fn parses_inline_values() {
        let r = parse_spectrum_input("0.2,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1", &cfg()).unwrap();
        assert_eq!(r.spectrum.lam(0), 0.2);
    }

    #[test]
    fn selector_grammar() {
        assert_eq!(select_families("all").unwrap().len(), 32);
        assert_eq!(select_families("nu1").unwrap().len(), 7);
        assert_eq!(select_families("nu{2,4,3}").unwrap().len(), 3);
        assert_eq!(select_families("nu{2,4,3}^(2)").unwrap().len(), 1);
        assert_eq!(select_families("nu243").unwrap().len(), 3);
        assert_eq!(select_families("nu243v2").unwrap().len(), 1);
        assert!(select_families("nu9").is_err());
        assert!(select_families("bogus").is_err());
    }

    #[test]
    fn sweep_parameters_respect_margins() {
        let f = &families::find_families(1, 2, 6, None)[0];
        let ps = sweep_parameters(f, 10);
        assert_eq!(ps.len(), 10);
        assert!(ps[0] > f.c_lo && ps[9] < f.c_hi);
        for p in &ps {
            assert!(f.eval(*p).is_ok());
        }
    }

    #[test]
    fn named_constants_round_trip_through_json() {
        for name in [
            "uniform",
            "zeta1",
            "zeta8",
            "nu{1,5,3}@0.07",
            "nu{6,2,1}^(3)",
        ] {
            let r = parse_spectrum_input(name, &cfg()).unwrap();
            let json = serde_json::to_string(&r.spectrum).unwrap();
            let back: Spectrum = serde_json::from_str(&json).unwrap();
            assert_eq!(r.spectrum.lambda(), back.lambda(), "{name}");
        }
    }
}
