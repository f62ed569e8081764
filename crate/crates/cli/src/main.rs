//! Command-line frontend for the harmonica estimators.
//!
//! Exit codes: 0 on success, 2 on usage or argument errors, 1 on runtime
//! failures. Output for a fixed argument vector is byte-identical across
//! runs and parallelism settings.

use std::fs;
use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use harmonica::{
    csv_string, default_parallelism, estimate_harmonic, estimate_ln, estimate_ln_rational,
    estimate_log_base, run_experiment, Error, ExperimentConfig, ExperimentRow, RationalArg,
};

#[derive(Parser)]
#[command(
    name = "harmonica",
    version,
    about = "Estimate harmonic numbers and logarithms by counting running-maximum updates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of record-counting trials to average.
    #[arg(long, global = true, default_value_t = 1000)]
    trials: u64,

    /// Master seed; identical seeds reproduce identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for trial execution (never affects the result).
    #[arg(long, global = true, default_value_t = default_parallelism())]
    parallelism: NonZeroUsize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the harmonic number H_x.
    Harmonic { x: u64 },
    /// Estimate the natural logarithm of x.
    Ln { x: u64 },
    /// Estimate the base-b logarithm of x.
    Log {
        x: u64,
        #[arg(long)]
        base: u64,
    },
    /// Estimate the natural logarithm of the rational p/q.
    LnRational { p: u64, q: u64 },
    /// Estimate ln at every power base^1 ..= base^K and tabulate the errors.
    Experiment {
        #[arg(long, default_value_t = 4)]
        base: u64,
        /// Highest power K.
        #[arg(long, default_value_t = 8)]
        powers: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable key/value or column output.
    Table,
    /// Machine-readable CSV with round-trip-safe reals.
    Csv,
}

/// One reported field; integers and reals render differently in CSV.
enum Field {
    Int(&'static str, u64),
    Real(&'static str, f64),
}

impl Field {
    fn key(&self) -> &'static str {
        match self {
            Self::Int(k, _) | Self::Real(k, _) => k,
        }
    }

    fn table_value(&self) -> String {
        match self {
            Self::Int(_, v) => v.to_string(),
            // Display prints the shortest string that parses back exactly.
            Self::Real(_, v) => v.to_string(),
        }
    }

    fn csv_value(&self) -> String {
        match self {
            Self::Int(_, v) => v.to_string(),
            // 17 significant digits: parsing recovers the double bit-exactly.
            Self::Real(_, v) => format!("{v:.16e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => match emit(&output, cli.out.as_deref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(1)
            }
        },
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        // Bad argument values are usage errors, like malformed flags.
        Error::ZeroArgument(_)
        | Error::EmptyList
        | Error::OutOfRange { .. }
        | Error::InvalidBase(_)
        | Error::PowerOverflow { .. }
        | Error::NoRows => 2,
        Error::CountOverflow | Error::Io(_) => 1,
    }
}

fn emit(output: &str, out: Option<&std::path::Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, output),
        None => {
            let stdout = io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(output.as_bytes())?;
            handle.flush()
        }
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let trials = cli.trials;
    let seed = cli.seed;
    let workers = cli.parallelism;
    match cli.command {
        Command::Harmonic { x } => {
            let est = estimate_harmonic(x, trials, seed, workers)?;
            Ok(render_scalar(
                cli.format,
                &[
                    Field::Int("x", x),
                    Field::Real("h_estimate", est.mean),
                    Field::Real("std_error", est.std_error),
                    Field::Int("trials", trials),
                    Field::Int("seed", seed),
                ],
            ))
        }
        Command::Ln { x } => {
            let est = estimate_ln(x, trials, seed, workers)?;
            Ok(render_scalar(
                cli.format,
                &[
                    Field::Int("x", x),
                    Field::Real("approx_ln", est.value),
                    Field::Real("std_error", est.std_error),
                    Field::Real("bias_bound", est.deterministic_bias_bound),
                    Field::Int("trials", trials),
                    Field::Int("seed", seed),
                ],
            ))
        }
        Command::Log { x, base } => {
            let est = estimate_log_base(x, base, trials, seed, workers)?;
            Ok(render_scalar(
                cli.format,
                &[
                    Field::Int("x", x),
                    Field::Int("base", base),
                    Field::Real("approx_log", est.value),
                    Field::Real("error_bound", est.error_bound),
                    Field::Int("trials", trials),
                    Field::Int("seed", seed),
                ],
            ))
        }
        Command::LnRational { p, q } => {
            let est = estimate_ln_rational(RationalArg::new(p, q)?, trials, seed, workers)?;
            Ok(render_scalar(
                cli.format,
                &[
                    Field::Int("numerator", p),
                    Field::Int("denominator", q),
                    Field::Real("approx_ln", est.value),
                    Field::Real("error_bound", est.error_bound),
                    Field::Int("trials", trials),
                    Field::Int("seed", seed),
                ],
            ))
        }
        Command::Experiment { base, powers } => {
            let rows = run_experiment(&ExperimentConfig {
                base,
                max_power: powers,
                trials,
                master_seed: seed,
                parallelism: workers,
            })?;
            match cli.format {
                Format::Csv => csv_string(&rows),
                Format::Table => Ok(render_experiment_table(&rows)),
            }
        }
    }
}

fn render_scalar(format: Format, fields: &[Field]) -> String {
    match format {
        Format::Table => {
            let width = fields.iter().map(|f| f.key().len()).max().unwrap_or(0);
            fields
                .iter()
                .map(|f| format!("{:<width$}  {}\n", f.key(), f.table_value()))
                .collect()
        }
        Format::Csv => {
            let header = fields.iter().map(Field::key).collect::<Vec<_>>().join(",");
            let row = fields
                .iter()
                .map(Field::csv_value)
                .collect::<Vec<_>>()
                .join(",");
            format!("{header}\n{row}\n")
        }
    }
}

fn render_experiment_table(rows: &[ExperimentRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>8} {:>13} {:>13} {:>13} {:>11} {:>11} {:>11}\n",
        "x", "h_estimate", "approx_ln", "reference_ln", "abs_error", "rel_error", "std_error"
    ));
    for row in rows {
        let rel = row
            .rel_error
            .map(|v| format!("{v:.3e}"))
            .unwrap_or_else(|| "-".to_string());
        out.push_str(&format!(
            "{:>8} {:>13.8} {:>13.8} {:>13.8} {:>11.3e} {:>11} {:>11.3e}\n",
            row.x,
            row.h_estimate,
            row.approx_ln,
            row.reference_ln,
            row.abs_error,
            rel,
            row.std_error
        ));
    }
    out
}
