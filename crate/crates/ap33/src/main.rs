use anyhow::{Context, Result};
use ap33::cli::{self, OutputFormat, RunConfig};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Membership, boundary classification, and extreme-point certification for
/// absolutely PPT two-qutrit spectra.
#[derive(Parser)]
#[command(name = "ap33", version, about)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// JSON config file; explicit flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Determinant tolerance for boundary detection
    #[arg(long, global = true)]
    det_tol: Option<f64>,
    /// Eigenvalue tolerance for positive semidefiniteness
    #[arg(long, global = true)]
    psd_tol: Option<f64>,
    /// Singular-value threshold for the t-system rank
    #[arg(long, global = true)]
    rank_tol: Option<f64>,
    /// Grouping tolerance for equal eigenvalues
    #[arg(long, global = true)]
    group_tol: Option<f64>,
    /// Base RNG seed
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Default Monte-Carlo sample count
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Output format: json or csv
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<OutputFormat>,
    /// Write output to this file instead of stdout
    /// (directory overridable via AP33_OUT_DIR)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Reject inputs whose trace is not already 1 instead of renormalizing
    #[arg(long, global = true, default_value_t = false)]
    strict_trace: bool,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(format!("unknown format `{other}` (json or csv)")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a spectrum: membership verdict plus extremality certificate
    Classify {
        /// `uniform`, `zetaN`, `nu{a,b,c}[^(v)][@c]`, 9 inline values, or a file
        input: String,
    },
    /// Evaluate families across their parameter intervals
    Sweep {
        /// `all`, `nu1`..`nu7`, or `nu{a,b,c}[^(v)]`
        selector: String,
        /// Number of parameter samples per family
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// Verify every interval-endpoint limit
    Limits {
        /// Distance from open endpoints at which families are evaluated
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
    },
    /// Decompose a nu{1,5,3} spectrum into the segment between zeta1 and zeta6
    Decompose { input: String },
    /// Randomized partial-transpose verification
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run the acceptance criteria
    Verify {
        /// Restrict to one criterion by name
        #[arg(long)]
        only: Option<String>,
    },
    /// Emit the full classification dataset (all families)
    Export {
        #[arg(long, default_value_t = 20)]
        steps: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Scan Haar-random unitaries for partial-transpose negativity
    Scan {
        /// Spectrum input (same grammar as `classify`)
        #[arg(long)]
        spectrum: String,
        /// Number of Haar samples
        #[arg(long)]
        samples: Option<usize>,
        /// RNG seed for this scan
        #[arg(long)]
        seed: Option<u64>,
        /// Write the full JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn build_config(args: &GlobalArgs) -> Result<RunConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let raw = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            serde_json::from_str::<RunConfig>(&raw)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => RunConfig::default(),
    };
    if let Some(v) = args.det_tol {
        cfg.tols.det = v;
    }
    if let Some(v) = args.psd_tol {
        cfg.tols.psd = v;
    }
    if let Some(v) = args.rank_tol {
        cfg.tols.rank = v;
    }
    if let Some(v) = args.group_tol {
        cfg.tols.group = v;
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    if let Some(v) = args.samples {
        cfg.samples = v;
    }
    if let Some(v) = args.format {
        cfg.format = v;
    }
    if let Some(v) = &args.out {
        cfg.out = Some(v.clone());
    }
    if args.strict_trace {
        cfg.renormalize = false;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    let cfg = build_config(&cli.global)?;
    let code = match cli.command {
        Command::Classify { input } => cli::cmd_classify(&input, &cfg)?,
        Command::Sweep { selector, steps } => cli::cmd_sweep(&selector, steps, &cfg)?,
        Command::Limits { eps } => cli::cmd_limits(eps, &cfg)?,
        Command::Decompose { input } => cli::cmd_decompose(&input, &cfg)?,
        Command::Oracle { command } => match command {
            OracleCommand::Scan {
                spectrum,
                samples,
                seed,
                out,
            } => cli::cmd_oracle_scan(
                &spectrum,
                samples.unwrap_or(cfg.samples),
                seed.unwrap_or(cfg.seed),
                out.as_deref(),
                &cfg,
            )?,
        },
        Command::Verify { only } => cli::cmd_verify(only.as_deref(), &cfg)?,
        Command::Export { steps } => cli::cmd_export(steps, &cfg)?,
    };
    Ok(code)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
