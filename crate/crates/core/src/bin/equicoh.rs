use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use equicoh::coherence::CoherenceMeasure;
use equicoh::designs::{build_mub_with_seed, build_sic, DesignFile, DEFAULT_MUB_SEED};
use equicoh::probe::{probe_with_seed, BasisSpec, StateSpec};
use equicoh::report::{IDENTITY_TOLERANCE, OBJECT_TOLERANCE};
use equicoh::suite::{all_passed, render, run_suite, CheckName, OutputFormat, SuiteConfig};

/// Build and verify SICs and mutually unbiased bases in d = 2, 3, 8.
#[derive(Parser)]
#[command(name = "equicoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sic,
    Mub,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write a design file.
    Build {
        kind: Kind,
        #[arg(long, short)]
        dimension: usize,
        #[arg(long, short)]
        output: PathBuf,
        /// Seed for the d=8 MUB construction.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run verification checks; exits 1 if any fails.
    Verify {
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<CheckName>,
        #[arg(long, short)]
        dimension: Option<usize>,
        /// Replaces every per-check tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, default_value_t = OBJECT_TOLERANCE)]
        object_tolerance: f64,
        #[arg(long, default_value_t = IDENTITY_TOLERANCE)]
        identity_tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_MUB_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Coherence of one state in one basis.
    Probe {
        /// sic:D:I | bloch:X,Y,Z | file:PATH | design:PATH:I
        #[arg(long)]
        state: String,
        /// mub:D:M | computational:D | design:PATH:M
        #[arg(long)]
        basis: String,
        #[arg(long, value_parser = parse_measure)]
        measure: CoherenceMeasure,
        #[arg(long, default_value_t = DEFAULT_MUB_SEED)]
        seed: u64,
    },
}

fn parse_check(s: &str) -> Result<CheckName, String> {
    s.parse().map_err(|e: equicoh::Error| e.to_string())
}

fn parse_measure(s: &str) -> Result<CoherenceMeasure, String> {
    s.parse().map_err(|e: equicoh::Error| e.to_string())
}

fn run(cli: Cli) -> equicoh::Result<bool> {
    match cli.command {
        Command::Build { kind, dimension, output, seed } => {
            let file = match kind {
                Kind::Sic => DesignFile::from_sic(&build_sic(dimension)?),
                Kind::Mub => DesignFile::from_mub(&build_mub_with_seed(dimension, seed.unwrap_or(DEFAULT_MUB_SEED))?),
            };
            file.write(&output)?;
            Ok(true)
        }
        Command::Verify {
            checks,
            dimension,
            tolerance,
            object_tolerance,
            identity_tolerance,
            seed,
            format,
            output,
        } => {
            let config = SuiteConfig {
                checks,
                dimension,
                tolerance,
                object_tolerance,
                identity_tolerance,
                seed,
            };
            let records = run_suite(&config)?;
            let format = match format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
                Format::Csv => OutputFormat::Csv,
            };
            let text = render(&records, format)?;
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(all_passed(&records))
        }
        Command::Probe { state, basis, measure, seed } => {
            let state: StateSpec = state.parse()?;
            let basis: BasisSpec = basis.parse()?;
            let result = probe_with_seed(&state, &basis, measure, seed)?;
            println!("{} = {:.16e}", result.coherence.measure.as_str(), result.coherence.value);
            let probs: Vec<String> = result.probabilities.iter().map(|p| format!("{p:.16e}")).collect();
            println!("probabilities = [{}]", probs.join(", "));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
