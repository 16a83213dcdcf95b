//! End-to-end tests of the `ap33` binary: exit codes, output formats, named
//! constants, file IO, and byte stability.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ap33(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ap33"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_zeta1_is_boundary_both_extreme() {
    let out = ap33(&["classify", "zeta1"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["membership"]["kind"], "boundary");
    assert_eq!(json["membership"]["active"], "both");
    assert_eq!(json["extremality"]["kind"], "extreme");
    assert_eq!(json["membership"]["rank_deficient"], false);
}

#[test]
fn classify_zeta8_flags_rank_deficiency() {
    let out = ap33(&["classify", "zeta8"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["membership"]["kind"], "boundary");
    assert_eq!(json["membership"]["rank_deficient"], true);
    assert_eq!(json["extremality"]["kind"], "extreme");
}

#[test]
fn classify_uniform_is_interior() {
    let out = ap33(&["classify", "uniform"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["membership"]["kind"], "interior");
    assert_eq!(json["extremality"]["kind"], "not_applicable");
}

#[test]
fn classify_nu153_not_extreme_with_direction() {
    let out = ap33(&["classify", "nu{1,5,3}@0.07"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["membership"]["kind"], "boundary");
    assert_eq!(json["extremality"]["kind"], "not_extreme");
    let basis = json["extremality"]["null_basis"].as_array().unwrap();
    assert_eq!(basis.len(), 1);
    // direction proportional to (15, -6, ..., 5): check the ratio t1/t9 = 3
    let v: Vec<f64> = basis[0]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert!((v[0] / v[8] - 3.0).abs() < 1e-9);
}

#[test]
fn classify_not_ap_exits_2() {
    let out = ap33(&[
        "classify",
        "0.5,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["membership"]["kind"], "not_ap");
}

#[test]
fn parse_errors_exit_1() {
    let out = ap33(&["classify", "nu{1,2,6}@0.05"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ap33(&["classify", "no-such-thing"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn strict_trace_rejects_what_default_accepts() {
    let arg = "0.2000000001,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1";
    assert_eq!(ap33(&["classify", arg]).status.code(), Some(0));
    assert_eq!(
        ap33(&["--strict-trace", "classify", arg]).status.code(),
        Some(1)
    );
}

#[test]
fn sweep_emits_expected_csv_shape() {
    let out = ap33(&["--format", "csv", "sweep", "nu1", "--steps", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    // 7 families with one top eigenvalue, 5 rows each, plus the header
    assert_eq!(lines.len(), 1 + 7 * 5);
    assert!(lines[0].starts_with("family,mu_a,mu_b,mu_c,c,a,b,l1,l2"));
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 17);
        assert_eq!(fields[12], "boundary");
        // the flagged nu{1,5,3} branch activates l1 only; the rest both
        assert!(
            fields[13] == "both" || fields[13] == "l1_zero",
            "active = {}",
            fields[13]
        );
    }
}

#[test]
fn sweep_nu243_covers_three_branches() {
    let out = ap33(&["--format", "csv", "sweep", "nu{2,4,3}", "--steps", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("nu243v1"));
    assert!(text.contains("nu243v2"));
    assert!(text.contains("nu243v3"));
    // the point branch contributes a single row
    assert_eq!(text.matches("nu243v3").count(), 1);
}

#[test]
fn limits_pass_and_report_rows() {
    let out = ap33(&["--format", "csv", "limits"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 1 + 64); // 32 families x 2 ends
    assert!(lines[1..].iter().all(|l| l.ends_with("true")));
}

#[test]
fn decompose_reports_x_and_residual() {
    let out = ap33(&["decompose", "nu{1,5,3}@0.07"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((json["x"].as_f64().unwrap() - 0.517).abs() < 1e-12);
    assert!(json["residual"].as_f64().unwrap() <= 1e-12);
    // not on the branch: error
    let out = ap33(&["decompose", "zeta3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_scan_writes_full_report() {
    let dir = std::env::temp_dir().join(format!("ap33-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report_path: PathBuf = dir.join("report.json");
    let out = ap33(&[
        "oracle",
        "scan",
        "--spectrum",
        "zeta1",
        "--samples",
        "40",
        "--seed",
        "7",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(json["n_samples"], 40);
    assert!(json["min_pt_eigenvalue"].as_f64().unwrap() >= -1e-8);
    assert!(json["argmin_seed"].as_u64().is_some());
    assert!(json["elapsed"].as_f64().unwrap() >= 0.0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn oracle_scan_falsifies_not_ap_spectrum() {
    let out = ap33(&[
        "oracle",
        "scan",
        "--spectrum",
        "0.5,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625",
        "--samples",
        "200",
        "--seed",
        "11",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("classify=not_ap"));
}

#[test]
fn spectrum_files_round_trip_through_classify() {
    let dir = std::env::temp_dir().join(format!("ap33-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // JSON array of decimal strings
    let json_path = dir.join("spec.json");
    let classify_out = ap33(&["classify", "zeta5"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&classify_out)).unwrap();
    std::fs::write(
        &json_path,
        serde_json::to_string(&parsed["spectrum"]).unwrap(),
    )
    .unwrap();
    let from_file = ap33(&["classify", json_path.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));
    let reparsed: serde_json::Value = serde_json::from_str(&stdout(&from_file)).unwrap();
    assert_eq!(parsed["membership"], reparsed["membership"]);
    // single-line CSV
    let csv_path = dir.join("spec.csv");
    let strings: Vec<String> = parsed["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect();
    std::fs::write(&csv_path, strings.join(",")).unwrap();
    let from_csv = ap33(&["classify", csv_path.to_str().unwrap()]);
    assert_eq!(from_csv.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["classify", "zeta5"],
        vec!["--format", "csv", "sweep", "nu{6,2,1}", "--steps", "7"],
        vec![
            "oracle",
            "scan",
            "--spectrum",
            "zeta2",
            "--samples",
            "25",
            "--seed",
            "3",
        ],
        vec!["--format", "csv", "export", "--steps", "3"],
    ] {
        let a = stdout(&ap33(&args));
        let b = stdout(&ap33(&args));
        assert_eq!(a, b, "unstable output for {args:?}");
        assert!(!a.trim().is_empty());
    }
}

#[test]
fn verify_subcommand_filters_and_passes() {
    let out = ap33(&["verify", "--only", "endpoints"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("PASS [2] endpoints"));
    let bad = ap33(&["verify", "--only", "bogus"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn config_file_sets_format_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("ap33-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("config.json");
    std::fs::write(&cfg_path, r#"{"format":"csv","seed":5}"#).unwrap();
    let out = ap33(&["--config", cfg_path.to_str().unwrap(), "classify", "zeta1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).starts_with("input,kind"),
        "config csv format applies"
    );
    let out = ap33(&[
        "--config",
        cfg_path.to_str().unwrap(),
        "--format",
        "json",
        "classify",
        "zeta1",
    ]);
    assert!(
        stdout(&out).trim_start().starts_with('{'),
        "flag overrides config"
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn out_dir_env_overrides_output_directory() {
    let dir = std::env::temp_dir().join(format!("ap33-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ap33"))
        .args([
            "--format",
            "csv",
            "--out",
            "ignored-dir/rows.csv",
            "sweep",
            "nu7",
            "--steps",
            "3",
        ])
        .env("AP33_OUT_DIR", &dir)
        .output()
        .expect("binary runs");
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let written = dir.join("rows.csv");
    assert!(written.exists(), "env var redirects the output file");
    std::fs::remove_dir_all(&dir).ok();
}
