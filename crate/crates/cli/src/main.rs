use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hahn_cli::{run_scan, write_report, OutputFormat, ScanConfig, ScanError};
use hahn_core::spectral::DEFAULT_BOUNDARY_TOL;
use hahn_core::{consistency_suite_with, DEFAULT_DIVERGENCE_THRESHOLD};

const EXIT_ARGS: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_VIOLATIONS: u8 = 3;

#[derive(Parser)]
#[command(name = "hahn", version, about = "Fine-spectrum scans of the difference operator on the Hahn space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a lattice of spectral parameters and write the map.
    #[command(allow_negative_numbers = true)]
    Scan(ScanArgs),
    /// Run the consistency suite on a preset lattice and print any violations.
    Check {
        #[arg(long, value_enum, default_value_t = Preset::Reference)]
        grid_preset: Preset,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// 41 × 41 over [−1, 3] × [−2, 2].
    Reference,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Pgm,
}

#[derive(clap::Args)]
struct ScanArgs {
    /// Left edge of the lattice (real part).
    #[arg(long)]
    re_min: f64,
    #[arg(long)]
    re_max: f64,
    #[arg(long)]
    im_min: f64,
    /// Top edge; rows run from here downwards.
    #[arg(long)]
    im_max: f64,
    /// Lattice columns, endpoints included.
    #[arg(long)]
    nx: usize,
    /// Lattice rows, endpoints included.
    #[arg(long)]
    ny: usize,
    /// Finite-section size for --with-numerics.
    #[arg(long, default_value_t = 64)]
    truncation: usize,
    /// Resolvent column for the growth diagnostic.
    #[arg(long, default_value_t = 0)]
    column: usize,
    /// Add resolvent-bound and growth columns.
    #[arg(long)]
    with_numerics: bool,
    /// Half-width of the band treated as |1 − α| = 1.
    #[arg(long, default_value_t = DEFAULT_BOUNDARY_TOL)]
    boundary_tol: f64,
    /// Partial sums above this are reported as divergent.
    #[arg(long, default_value_t = DEFAULT_DIVERGENCE_THRESHOLD)]
    divergence_threshold: f64,
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    out: PathBuf,
}

impl From<ScanArgs> for ScanConfig {
    fn from(a: ScanArgs) -> Self {
        ScanConfig {
            re_min: a.re_min,
            re_max: a.re_max,
            im_min: a.im_min,
            im_max: a.im_max,
            nx: a.nx,
            ny: a.ny,
            truncation: a.truncation,
            column: a.column,
            boundary_tol: a.boundary_tol,
            divergence_threshold: a.divergence_threshold,
            with_numerics: a.with_numerics,
            output_path: a.out,
            format: match a.format {
                Format::Csv => OutputFormat::Csv,
                Format::Json => OutputFormat::Json,
                Format::Pgm => OutputFormat::Pgm,
            },
        }
    }
}

fn exit_code(e: &ScanError) -> u8 {
    match e {
        ScanError::Io { .. } | ScanError::Json { .. } => EXIT_IO,
        ScanError::Config { .. } | ScanError::Spectrum(_) => EXIT_ARGS,
    }
}

fn scan(args: ScanArgs) -> Result<ExitCode, ScanError> {
    let config = ScanConfig::from(args);
    let report = run_scan(&config)?;
    write_report(&report)?;
    eprintln!(
        "wrote {} points to {} (resolvent {}, continuous {}, residual {}, point {}; {} violations)",
        report.rows.len(),
        config.output_path.display(),
        report.census.resolvent,
        report.census.continuous,
        report.census.residual,
        report.census.point,
        report.violations,
    );
    Ok(if report.violations > 0 { ExitCode::from(EXIT_VIOLATIONS) } else { ExitCode::SUCCESS })
}

fn check(preset: Preset) -> Result<ExitCode, ScanError> {
    let config = match preset {
        Preset::Reference => ScanConfig::reference(),
    };
    config.validate()?;
    let grid = config.lattice();
    let report = consistency_suite_with(&grid, &config.classifier())?;
    for v in &report.violations {
        println!("violation: {} at α = {}", v.check, v.alpha);
    }
    println!(
        "checked {} identities over {} points: {} violations",
        report.total_checked,
        grid.len(),
        report.violations.len()
    );
    Ok(if report.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATIONS) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_ARGS) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Scan(args) => scan(args),
        Command::Check { grid_preset } => check(grid_preset),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(exit_code(&e))
    })
}
