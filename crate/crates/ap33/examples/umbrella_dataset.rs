//! Emit the plot-ready dataset behind the classification figures: one CSV
//! row per (family, parameter) with eigenvalues, determinants, eigenvalue
//! minima, verdicts, and the sup-distance to each endpoint anchor. Piping
//! this into any plotting tool reproduces the umbrella-shaped hierarchy of
//! families interpolating between the anchors.
//!
//! Run with: cargo run --example umbrella_dataset > umbrella.csv

use ap33::cli::{cmd_export, OutputFormat, RunConfig};

fn main() {
    let cfg = RunConfig {
        format: OutputFormat::Csv,
        ..RunConfig::default()
    };
    cmd_export(40, &cfg).expect("dataset export");
}
