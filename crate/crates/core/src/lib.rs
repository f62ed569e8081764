//! Estimate harmonic numbers and logarithms by counting how often the
//! running maximum of a random sequence gets updated.
//!
//! Scanning `x` independent uniform draws for their maximum updates the
//! running maximum `H_x` times on average (each scan position holds the
//! maximum-so-far with probability one over its index). Averaging the update
//! counts of many independent scans therefore estimates `H_x`, and the
//! expansion `H_x = ln(x) + gamma + eps_x` with `eps_x` pinned at its upper
//! bound `1/(2x)` converts that into an estimate of `ln(x)` whose
//! deterministic conversion bias is below `1/(2x(x+1))`. Change of base and
//! the quotient rule extend the estimator to integer-base logarithms and
//! rational arguments.
//!
//! Everything is deterministic: trials draw from counter-derived streams
//! addressed by `(master_seed, stream_id)`, and trial results merge by
//! exact integer addition, so a result is a pure function of its inputs no
//! matter how many threads execute it.
//!
//! ```
//! use std::num::NonZeroUsize;
//!
//! let est = harmonica::estimate_ln(256, 1000, 0, NonZeroUsize::MIN).unwrap();
//! let err = (est.value - 256f64.ln()).abs();
//! assert!(err <= est.error_bound());
//! ```

pub mod error;
pub mod estimator;
pub mod experiment;
pub mod harmonic;
pub mod logext;
pub mod records;
pub mod rng;

pub use error::{Error, Result};
pub use estimator::{estimate_harmonic, estimate_ln, HarmonicEstimate, LnEstimate};
pub use experiment::{
    csv_string, default_parallelism, run_experiment, write_csv, ExperimentConfig, ExperimentRow,
    CSV_HEADER,
};
pub use harmonic::{
    bias_bound, epsilon_bounds, exact_harmonic, exact_harmonic_rational, harmonic_to_ln,
    oracle_mean_records, stirling_first_kind, EpsilonBounds, Rational, EULER_MASCHERONI,
};
pub use logext::{
    estimate_ln_for_argument, estimate_ln_rational, estimate_log_base, LnRationalEstimate,
    LogBaseEstimate, RationalArg,
};
pub use records::{count_records_list, count_records_stream, TrialCount};
pub use rng::{derive_stream_id, RandomStream};
