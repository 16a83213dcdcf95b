//! Acceptance suite: runs every verification criterion at its stated
//! tolerance and prints one pass/fail line per criterion.
//!
//! `cargo test --test acceptance -- --nocapture` shows the lines; the same
//! checks back the `ap33 verify` subcommand.

use ap33::verify::{run, VerifyConfig, CRITERIA};

// wall-clock budgets per criterion, in milliseconds
const BUDGETS_MS: [u128; 8] = [
    1_000,   // anchors
    1_000,   // endpoints
    30_000,  // sweep
    10_000,  // limits
    1_000,   // decompose
    60_000,  // corner
    300_000, // oracle
    30_000,  // witness
];

#[test]
fn all_acceptance_criteria_pass() {
    let cfg = VerifyConfig::default();
    let results = run(&cfg, None);
    assert_eq!(results.len(), CRITERIA.len());
    let mut failures = Vec::new();
    for r in &results {
        println!("{}", r.line());
        if !r.passed {
            failures.push(r.line());
        }
        let budget = BUDGETS_MS[r.index - 1];
        assert!(
            r.millis <= budget,
            "criterion {} took {} ms, budget {} ms",
            r.name,
            r.millis,
            budget
        );
    }
    assert!(
        failures.is_empty(),
        "failed criteria:\n{}",
        failures.join("\n")
    );
}

#[test]
fn single_criterion_filter_works() {
    let cfg = VerifyConfig::default();
    let results = run(&cfg, Some("endpoints"));
    assert_eq!(results.len(), 1);
    assert_eq!(results[0].name, "endpoints");
    assert!(results[0].passed, "{}", results[0].line());
}

#[test]
fn loose_determinant_tolerance_misclassifies_boundaries() {
    // deliberate misconfiguration: with det tolerance 1e-2 the whole
    // neighborhood of the boundary collapses onto it, so near-boundary
    // interior points stop classifying as interior
    let anchor = ap33::zeta(ap33::ZetaId::new(1).unwrap());
    let mut v = [0.0; 9];
    for (i, slot) in v.iter_mut().enumerate() {
        *slot = 0.9 * anchor.lam(i) + 0.1 / 9.0;
    }
    let near_boundary = ap33::Spectrum::new(v).unwrap();
    let strict = ap33::classify(&near_boundary, 1e-10).unwrap();
    assert_eq!(strict.kind, ap33::MembershipKind::Interior);
    let sloppy = ap33::classify(&near_boundary, 1e-2).unwrap();
    assert_ne!(sloppy.kind, ap33::MembershipKind::Interior);
}
