//! Counting running-maximum updates (records) in a sequence.
//!
//! Scanning a sequence for its maximum updates the running maximum once per
//! record, i.e. once per element strictly greater than everything before it.
//! The first element always counts: the running maximum starts below every
//! possible sample. Over uniformly random inputs of length `x` the expected
//! number of updates is exactly the harmonic number `H_x`, which is what the
//! estimator modules exploit.

use crate::error::{Error, Result};
use crate::rng::RandomStream;

/// Outcome of one record-counting scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialCount {
    /// Length of the scanned sequence.
    pub x: u64,
    /// Number of running-maximum updates; always in `1..=x`.
    pub count: u64,
}

/// Draws `x` samples from `stream` and counts running-maximum updates.
///
/// Uses O(1) memory: samples are consumed as they are drawn and never
/// materialized. Updates use strict `>`, so equal samples do not count
/// (ties have probability zero at 53-bit resolution).
pub fn count_records_stream(stream: &mut RandomStream, x: u64) -> Result<TrialCount> {
    if x == 0 {
        return Err(Error::ZeroArgument("x"));
    }
    let mut max = stream.next_uniform();
    let mut count = 1u64;
    for _ in 1..x {
        let v = stream.next_uniform();
        if v > max {
            max = v;
            count += 1;
        }
    }
    Ok(TrialCount { x, count })
}

/// Counts running-maximum updates over an explicit list.
///
/// Same counting rule as [`count_records_stream`]: applied to the first `x`
/// draws of a stream it returns the identical count.
pub fn count_records_list(values: &[f64]) -> Result<TrialCount> {
    let (&first, rest) = values.split_first().ok_or(Error::EmptyList)?;
    let mut max = first;
    let mut count = 1u64;
    for &v in rest {
        if v > max {
            max = v;
            count += 1;
        }
    }
    Ok(TrialCount {
        x: values.len() as u64,
        count,
    })
}
