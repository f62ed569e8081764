//! Monte Carlo estimation of `H_x` and `ln x` from repeated record counting.
//!
//! Trial `i` draws its samples from stream `(master_seed, i)`, so the result
//! is a pure function of `(x, trials, master_seed)`. Workers accumulate raw
//! integer sums (counts and squared counts), which merge by commutative
//! addition: the parallelism degree cannot change a single output bit.

use std::num::NonZeroUsize;
use std::thread;

use crate::error::{Error, Result};
use crate::harmonic::{bias_bound, epsilon_bounds, harmonic_to_ln};
use crate::records::count_records_stream;
use crate::rng::RandomStream;

/// Aggregate of `trials` record counts at sequence length `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicEstimate {
    pub x: u64,
    pub trials: u64,
    /// Exact integer sum of counts.
    pub sum_counts: u128,
    /// Exact integer sum of squared counts.
    pub sum_squared_counts: u128,
    /// Estimated harmonic number: `sum_counts / trials`.
    pub mean: f64,
    /// Sample standard deviation of the counts (n-1 divisor); 0 when
    /// `trials == 1`, where no dispersion estimate exists.
    pub sample_std: f64,
    /// `sample_std / sqrt(trials)`.
    pub std_error: f64,
}

/// A harmonic estimate converted to a natural log estimate.
///
/// The conversion is an affine shift: `value = mean - gamma - 1/(2x)`
/// exactly, and `std_error` is inherited unchanged from the harmonic side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LnEstimate {
    pub x: u64,
    /// Estimated natural log of `x`.
    pub value: f64,
    /// The harmonic estimate this was derived from.
    pub harmonic: HarmonicEstimate,
    /// The remainder value substituted in the conversion: `1/(2x)`.
    pub epsilon_used: f64,
    /// Deterministic conversion bias bound `1/(2x(x+1))`.
    pub deterministic_bias_bound: f64,
    /// Same as `harmonic.std_error`.
    pub std_error: f64,
}

impl LnEstimate {
    /// Reported error bound: deterministic conversion bias plus four
    /// standard errors of the Monte Carlo mean.
    pub fn error_bound(&self) -> f64 {
        self.deterministic_bias_bound + 4.0 * self.std_error
    }
}

/// Averages `trials` record counts of length-`x` scans into an `H_x` estimate.
///
/// Trial `i` (0-based) uses stream `(master_seed, i)`. The output is
/// bit-identical for every `parallelism` degree.
pub fn estimate_harmonic(
    x: u64,
    trials: u64,
    master_seed: u64,
    parallelism: NonZeroUsize,
) -> Result<HarmonicEstimate> {
    estimate_harmonic_streams(x, trials, master_seed, parallelism, |i| i)
}

/// Same as [`estimate_harmonic`], then converted through the `eps` upper
/// bound into a [`LnEstimate`].
pub fn estimate_ln(
    x: u64,
    trials: u64,
    master_seed: u64,
    parallelism: NonZeroUsize,
) -> Result<LnEstimate> {
    estimate_ln_streams(x, trials, master_seed, parallelism, |i| i)
}

/// Estimation core with a caller-chosen trial-to-stream-id map, which is how
/// per-argument seeding plugs in.
pub(crate) fn estimate_harmonic_streams<F>(
    x: u64,
    trials: u64,
    master_seed: u64,
    parallelism: NonZeroUsize,
    stream_id_of: F,
) -> Result<HarmonicEstimate>
where
    F: Fn(u64) -> u64 + Sync,
{
    if x == 0 {
        return Err(Error::ZeroArgument("x"));
    }
    if trials == 0 {
        return Err(Error::ZeroArgument("trials"));
    }
    let workers = parallelism
        .get()
        .min(usize::try_from(trials).unwrap_or(usize::MAX));
    let (sum_counts, sum_squared_counts) =
        accumulate(x, trials, master_seed, workers, &stream_id_of)?;
    Ok(finish(x, trials, sum_counts, sum_squared_counts))
}

pub(crate) fn estimate_ln_streams<F>(
    x: u64,
    trials: u64,
    master_seed: u64,
    parallelism: NonZeroUsize,
    stream_id_of: F,
) -> Result<LnEstimate>
where
    F: Fn(u64) -> u64 + Sync,
{
    let harmonic = estimate_harmonic_streams(x, trials, master_seed, parallelism, stream_id_of)?;
    // x was validated above, so the conversion helpers cannot fail.
    Ok(LnEstimate {
        x,
        value: harmonic_to_ln(harmonic.mean, x)?,
        epsilon_used: epsilon_bounds(x)?.upper,
        deterministic_bias_bound: bias_bound(x)?,
        std_error: harmonic.std_error,
        harmonic,
    })
}

fn accumulate<F>(
    x: u64,
    trials: u64,
    master_seed: u64,
    workers: usize,
    stream_id_of: &F,
) -> Result<(u128, u128)>
where
    F: Fn(u64) -> u64 + Sync,
{
    if workers <= 1 {
        return accumulate_strided(x, trials, master_seed, 0, 1, stream_id_of);
    }
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    accumulate_strided(
                        x,
                        trials,
                        master_seed,
                        w as u64,
                        workers as u64,
                        stream_id_of,
                    )
                })
            })
            .collect();
        let mut sum = 0u128;
        let mut sum_sq = 0u128;
        for handle in handles {
            let (s, q) = handle.join().expect("trial worker panicked")?;
            sum = sum.checked_add(s).ok_or(Error::CountOverflow)?;
            sum_sq = sum_sq.checked_add(q).ok_or(Error::CountOverflow)?;
        }
        Ok((sum, sum_sq))
    })
}

fn accumulate_strided<F>(
    x: u64,
    trials: u64,
    master_seed: u64,
    start: u64,
    stride: u64,
    stream_id_of: &F,
) -> Result<(u128, u128)>
where
    F: Fn(u64) -> u64,
{
    let mut sum = 0u128;
    let mut sum_sq = 0u128;
    let mut i = start;
    while i < trials {
        let mut stream = RandomStream::new(master_seed, stream_id_of(i));
        let count = count_records_stream(&mut stream, x)?.count as u128;
        sum = sum.checked_add(count).ok_or(Error::CountOverflow)?;
        sum_sq = sum_sq
            .checked_add(count * count)
            .ok_or(Error::CountOverflow)?;
        i += stride;
    }
    Ok((sum, sum_sq))
}

fn finish(x: u64, trials: u64, sum_counts: u128, sum_squared_counts: u128) -> HarmonicEstimate {
    let n = trials as f64;
    let mean = sum_counts as f64 / n;
    let (sample_std, std_error) = if trials < 2 {
        (0.0, 0.0)
    } else {
        // n * sum(c^2) - sum(c)^2 is exact in integers and nonnegative by
        // Cauchy-Schwarz, so the variance never goes negative from rounding.
        let numerator = trials as u128 * sum_squared_counts - sum_counts * sum_counts;
        let variance = numerator as f64 / (n * (n - 1.0));
        let sample_std = variance.sqrt();
        (sample_std, sample_std / n.sqrt())
    };
    HarmonicEstimate {
        x,
        trials,
        sum_counts,
        sum_squared_counts,
        mean,
        sample_std,
        std_error,
    }
}
