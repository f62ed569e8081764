//! Error-table experiment: estimate `ln x` at `x = base^k` for `k = 1..=K`
//! and compare against the platform `ln`.
//!
//! Rows use per-argument seeding, so a row's numbers depend only on
//! `(master_seed, x, trials)` and never on how many other powers were
//! requested. With a fixed seed the emitted CSV is byte-identical across
//! runs and parallelism degrees.

use std::io::Write;
use std::num::NonZeroUsize;
use std::thread;

use crate::error::{Error, Result};
use crate::logext::estimate_ln_for_argument;

/// Configuration for one experiment run.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// Base of the powers to evaluate; at least 2.
    pub base: u64,
    /// Highest power `K`; rows cover `base^1 ..= base^K`.
    pub max_power: u32,
    /// Trials per row.
    pub trials: u64,
    pub master_seed: u64,
    pub parallelism: NonZeroUsize,
}

impl Default for ExperimentConfig {
    /// Base 4, powers 1..=8, 1000 trials, seed 0: the smallest run that
    /// exercises the full default table.
    fn default() -> Self {
        Self {
            base: 4,
            max_power: 8,
            trials: 1000,
            master_seed: 0,
            parallelism: default_parallelism(),
        }
    }
}

/// Worker count reported by the platform, or 1 if unavailable.
pub fn default_parallelism() -> NonZeroUsize {
    thread::available_parallelism().unwrap_or(NonZeroUsize::MIN)
}

/// One evaluated power of the base.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentRow {
    pub x: u64,
    /// Estimated harmonic number for `x`.
    pub h_estimate: f64,
    /// Estimated natural log of `x`.
    pub approx_ln: f64,
    /// Platform `ln(x)`.
    pub reference_ln: f64,
    /// `|approx_ln - reference_ln|`.
    pub abs_error: f64,
    /// `abs_error / |reference_ln|`; absent when `reference_ln` is 0 (x = 1).
    pub rel_error: Option<f64>,
    /// Standard error of the row's estimate.
    pub std_error: f64,
}

/// Column header of the emitted CSV.
pub const CSV_HEADER: &str = "x,h_estimate,approx_ln,reference_ln,abs_error,rel_error,std_error";

/// Runs the experiment and returns one row per power, ordered by ascending `x`.
///
/// The config is validated up front: a `base^max_power` that cannot be
/// represented in 64 bits is rejected before any estimation starts.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    if config.base < 2 {
        return Err(Error::InvalidBase(config.base));
    }
    if config.max_power == 0 {
        return Err(Error::ZeroArgument("max_power"));
    }
    if config.trials == 0 {
        return Err(Error::ZeroArgument("trials"));
    }
    config
        .base
        .checked_pow(config.max_power)
        .ok_or(Error::PowerOverflow {
            base: config.base,
            max_power: config.max_power,
        })?;

    (1..=config.max_power)
        .map(|k| evaluate_row(config.base.pow(k), config))
        .collect()
}

fn evaluate_row(x: u64, config: &ExperimentConfig) -> Result<ExperimentRow> {
    let est = estimate_ln_for_argument(x, config.trials, config.master_seed, config.parallelism)?;
    let reference_ln = (x as f64).ln();
    let abs_error = (est.value - reference_ln).abs();
    let rel_error = (reference_ln != 0.0).then(|| abs_error / reference_ln.abs());
    Ok(ExperimentRow {
        x,
        h_estimate: est.harmonic.mean,
        approx_ln: est.value,
        reference_ln,
        abs_error,
        rel_error,
        std_error: est.std_error,
    })
}

/// Serializes rows as CSV: one header line, one line per row, LF endings.
///
/// Reals are rendered with 17 significant digits, which round-trips every
/// double exactly; the `rel_error` cell is left empty when absent.
pub fn write_csv<W: Write>(rows: &[ExperimentRow], mut sink: W) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    writeln!(sink, "{CSV_HEADER}")?;
    for row in rows {
        let rel = row.rel_error.map(fmt_real).unwrap_or_default();
        writeln!(
            sink,
            "{},{},{},{},{},{},{}",
            row.x,
            fmt_real(row.h_estimate),
            fmt_real(row.approx_ln),
            fmt_real(row.reference_ln),
            fmt_real(row.abs_error),
            rel,
            fmt_real(row.std_error),
        )?;
    }
    Ok(())
}

/// [`write_csv`] into an owned string.
pub fn csv_string(rows: &[ExperimentRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

// 1 integer digit + 16 fractional digits = 17 significant digits.
fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn serial_config(base: u64, max_power: u32, trials: u64, master_seed: u64) -> ExperimentConfig {
        ExperimentConfig {
            base,
            max_power,
            trials,
            master_seed,
            parallelism: NonZeroUsize::MIN,
        }
    }

    #[test]
    fn single_power_smoke() {
        let rows = run_experiment(&serial_config(4, 1, 1, 11)).unwrap();
        assert_eq!(rows.len(), 1);
        let row = rows[0];
        assert_eq!(row.x, 4);
        assert!(row.h_estimate.is_finite());
        assert!(row.approx_ln.is_finite());
        assert!(row.abs_error.is_finite());
        assert!(row.rel_error.unwrap().is_finite());
    }

    #[test]
    fn default_table_covers_the_powers_of_four() {
        let rows = run_experiment(&serial_config(4, 8, 10, 0)).unwrap();
        let xs: Vec<u64> = rows.iter().map(|r| r.x).collect();
        assert_eq!(xs, [4, 16, 64, 256, 1024, 4096, 16384, 65536]);
        assert!(rows.windows(2).all(|w| w[0].x < w[1].x));
    }

    #[test]
    fn invalid_configs_are_rejected_before_estimation() {
        assert!(matches!(
            run_experiment(&serial_config(1, 3, 10, 0)),
            Err(Error::InvalidBase(1))
        ));
        assert!(matches!(
            run_experiment(&serial_config(2, 64, 10, 0)),
            Err(Error::PowerOverflow {
                base: 2,
                max_power: 64
            })
        ));
        assert!(matches!(
            run_experiment(&serial_config(4, 0, 10, 0)),
            Err(Error::ZeroArgument("max_power"))
        ));
        assert!(matches!(
            run_experiment(&serial_config(4, 3, 0, 0)),
            Err(Error::ZeroArgument("trials"))
        ));
    }

    #[test]
    fn csv_shape_and_missing_rel_error() {
        let row = ExperimentRow {
            x: 1,
            h_estimate: 1.0,
            approx_ln: -0.07721566490153287,
            reference_ln: 0.0,
            abs_error: 0.07721566490153287,
            rel_error: None,
            std_error: 0.0,
        };
        let text = csv_string(&[row]).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER);
        // Empty rel_error cell sits between adjacent commas.
        assert_eq!(lines[1].matches(',').count(), 6);
        assert!(lines[1].contains(",,"));
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn empty_row_set_is_rejected() {
        assert!(matches!(csv_string(&[]), Err(Error::NoRows)));
    }

    #[test]
    fn rows_do_not_depend_on_how_many_powers_follow() {
        // Per-argument seeding: the k-th row is the same whether or not
        // higher powers are requested.
        let short = run_experiment(&serial_config(4, 3, 40, 7)).unwrap();
        let long = run_experiment(&serial_config(4, 6, 40, 7)).unwrap();
        assert_eq!(short.as_slice(), &long[..3]);
    }

    #[test]
    fn repeated_runs_emit_identical_csv() {
        let config = serial_config(3, 4, 50, 42);
        let a = csv_string(&run_experiment(&config).unwrap()).unwrap();
        let b = csv_string(&run_experiment(&config).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn relative_std_error_shrinks_with_larger_powers() {
        // Dispersion grows like sqrt(ln x) while ln x grows linearly in k,
        // so the ratio must fall for k >= 2 in the fixed default run.
        let rows = run_experiment(&ExperimentConfig {
            parallelism: NonZeroUsize::MIN,
            ..ExperimentConfig::default()
        })
        .unwrap();
        let ratios: Vec<f64> = rows[1..]
            .iter()
            .map(|r| r.std_error / r.reference_ln)
            .collect();
        assert!(
            ratios.windows(2).all(|w| w[1] < w[0]),
            "ratios = {ratios:?}"
        );
    }

    fn finite_real() -> impl Strategy<Value = f64> {
        prop_oneof![
            -1e300..1e300f64,
            Just(0.0),
            Just(-0.0),
            Just(f64::MIN_POSITIVE),
            Just(1e-308),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn csv_round_trips_bit_exactly(
            x in 1u64..,
            values in prop::collection::vec(finite_real(), 5),
            rel in prop::option::of(finite_real()),
        ) {
            let row = ExperimentRow {
                x,
                h_estimate: values[0],
                approx_ln: values[1],
                reference_ln: values[2],
                abs_error: values[3],
                rel_error: rel,
                std_error: values[4],
            };
            let text = csv_string(&[row]).unwrap();
            let line = text.lines().nth(1).unwrap();
            let fields: Vec<&str> = line.split(',').collect();
            prop_assert_eq!(fields.len(), 7);
            prop_assert_eq!(fields[0].parse::<u64>().unwrap(), x);
            let parsed: Vec<f64> = [1usize, 2, 3, 4, 6]
                .iter()
                .map(|&i| fields[i].parse::<f64>().unwrap())
                .collect();
            for (got, want) in parsed.iter().zip(&[
                row.h_estimate, row.approx_ln, row.reference_ln,
                row.abs_error, row.std_error,
            ]) {
                prop_assert_eq!(got.to_bits(), want.to_bits());
            }
            match rel {
                None => prop_assert_eq!(fields[5], ""),
                Some(v) => prop_assert_eq!(
                    fields[5].parse::<f64>().unwrap().to_bits(),
                    v.to_bits()
                ),
            }
        }
    }
}
