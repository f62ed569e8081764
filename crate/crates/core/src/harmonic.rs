//! Exact reference mathematics: harmonic numbers, the Euler–Mascheroni
//! constant, the remainder bounds that link `H_x` to `ln x`, and brute-force
//! oracles over permutations.
//!
//! The identity underpinning everything here is
//! `H_x = ln(x) + gamma + eps_x` with `eps_x` strictly inside
//! `(1/(2(x+1)), 1/(2x))`. Fixing `eps_x` at its upper bound turns an
//! approximation of `H_x` into an approximation of `ln x` with a known,
//! deterministic conversion bias of at most `1/(2x(x+1))`.

use itertools::Itertools;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::records::count_records_list;

/// Exact rational with 128-bit numerator and denominator.
pub type Rational = Ratio<i128>;

/// Euler–Mascheroni constant at full double precision.
pub const EULER_MASCHERONI: f64 = 0.5772156649015329;

/// The open interval known to contain `H_x - ln(x) - gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonBounds {
    pub x: u64,
    /// `1/(2(x+1))`
    pub lower: f64,
    /// `1/(2x)`
    pub upper: f64,
}

/// Computes the harmonic number `H_x = sum_{i=1..x} 1/i` in doubles.
///
/// Terms are summed smallest first so rounding error stays near one ulp
/// even for large `x`.
pub fn exact_harmonic(x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::ZeroArgument("x"));
    }
    Ok((1..=x).rev().map(|i| 1.0 / i as f64).sum())
}

/// Computes `H_x` as an exact rational, for `x` up to 30.
///
/// The cap keeps numerator and denominator comfortably inside 128-bit
/// arithmetic. For every `x > 1` the result is a non-integer.
pub fn exact_harmonic_rational(x: u64) -> Result<Rational> {
    if x == 0 || x > 30 {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            min: 1,
            max: 30,
        });
    }
    let h = (1..=x as i128)
        .map(|i| Rational::new(1, i))
        .fold(Rational::new(0, 1), |acc, term| acc + term);
    debug_assert!(x == 1 || !h.is_integer());
    Ok(h)
}

/// Returns the open interval `(1/(2(x+1)), 1/(2x))` containing `eps_x`.
pub fn epsilon_bounds(x: u64) -> Result<EpsilonBounds> {
    if x == 0 {
        return Err(Error::ZeroArgument("x"));
    }
    Ok(EpsilonBounds {
        x,
        lower: 0.5 / (x as f64 + 1.0),
        upper: 0.5 / x as f64,
    })
}

/// Converts a (possibly approximate) harmonic value for `x` into a natural
/// log estimate: `h - gamma - 1/(2x)`, with `eps_x` fixed at its upper bound.
pub fn harmonic_to_ln(h: f64, x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::ZeroArgument("x"));
    }
    Ok(h - EULER_MASCHERONI - 0.5 / x as f64)
}

/// Deterministic conversion bias bound `1/(2x(x+1))`.
///
/// Substituting the upper bound for `eps_x` makes [`harmonic_to_ln`] an
/// underestimate of `ln x`; for `x >= 2` the gap is strictly below this
/// value (the width of the `eps_x` interval). At `x = 1` the bound still
/// holds numerically but is not guaranteed by the interval-width argument.
pub fn bias_bound(x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::ZeroArgument("x"));
    }
    Ok(0.5 / (x as f64 * (x as f64 + 1.0)))
}

/// Exact mean record count over all `x!` permutations, for `x` up to 8.
///
/// Enumerates every ordering of `x` distinct values, counts the records of
/// each with [`count_records_list`], and returns the exact rational mean.
/// This is the brute-force side of the identity `E[count] = H_x`; it shares
/// no arithmetic with [`exact_harmonic_rational`].
pub fn oracle_mean_records(x: u64) -> Result<Rational> {
    if x == 0 || x > 8 {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            min: 1,
            max: 8,
        });
    }
    let n = x as usize;
    let mut total: u64 = 0;
    for perm in (1..=n).map(|i| i as f64).permutations(n) {
        total += count_records_list(&perm)?.count;
    }
    let permutations: i128 = (1..=x as i128).product();
    Ok(Rational::new(total as i128, permutations))
}

/// Unsigned Stirling number of the first kind `c(n, k)` by the recurrence
/// `c(n, k) = c(n-1, k-1) + (n-1) * c(n-1, k)`.
///
/// Counts the permutations of `n` elements with exactly `k` records.
/// Exact in 128 bits for `n <= 33`.
pub fn stirling_first_kind(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    if n == 0 {
        return 1; // c(0, 0)
    }
    if k == 0 {
        return 0;
    }
    // One rolling row of the triangle.
    let mut row = vec![0u128; n as usize + 1];
    row[0] = 1;
    for m in 1..=n as usize {
        for j in (1..=m).rev() {
            row[j] = row[j - 1] + (m as u128 - 1) * row[j];
        }
        row[0] = 0;
    }
    row[k as usize]
}
