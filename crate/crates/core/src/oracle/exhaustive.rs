use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// Largest string length [`exhaustive_tally`] will enumerate.
pub const DEFAULT_ENUMERATION_CEILING: usize = 24;

const CHUNK_BITS: usize = 14;

/// Every length-`n` string classified by where the pattern first completes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveTally {
    pub pattern: Pattern,
    pub n: usize,
    /// Indexed by completion position `j` in `0..=n`: the number of distinct
    /// length-`j` prefixes whose first completion is at `j`. Every such
    /// prefix is shared by `2^(n-j)` strings. Positions below `m` are zero.
    pub first_occurrence_counts: Vec<u64>,
    /// Strings of length `n` with no occurrence.
    pub avoiding_count: u64,
}

impl ExhaustiveTally {
    /// `sum_j count_j 2^(n-j) + avoiding`; equals `2^n` for a valid tally.
    pub fn weighted_total(&self) -> u64 {
        let n = self.n;
        self.first_occurrence_counts
            .iter()
            .enumerate()
            .map(|(j, &c)| c << (n - j))
            .sum::<u64>()
            + self.avoiding_count
    }
}

/// Position (1-based) at which `pattern` first completes in the `n`-bit
/// string `s`, read most significant bit first.
fn first_completion(s: u64, n: usize, pattern: u64, m: usize) -> Option<usize> {
    let mask = (1u64 << m) - 1;
    (m..=n).find(|&end| (s >> (n - end)) & mask == pattern)
}

/// Enumerates all `2^n` strings of length `n` (`m <= n <= 24`) and tallies
/// first occurrences by direct window comparison.
pub fn exhaustive_tally(pattern: &Pattern, n: usize) -> Result<ExhaustiveTally> {
    let m = pattern.len();
    if n > DEFAULT_ENUMERATION_CEILING {
        return Err(Error::TooLarge {
            requested: n,
            ceiling: DEFAULT_ENUMERATION_CEILING,
        });
    }
    if n < m {
        return Err(Error::InvalidHorizon {
            horizon: n,
            minimum: m,
        });
    }
    let target = pattern.to_index().expect("pattern no longer than n <= 24");

    let chunk = 1u64 << CHUNK_BITS.min(n);
    let chunks = (1u64 << n) / chunk;
    let (by_position, avoiding) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hits = vec![0u64; n + 1];
            let mut avoiding = 0u64;
            for s in c * chunk..(c + 1) * chunk {
                match first_completion(s, n, target, m) {
                    Some(end) => hits[end] += 1,
                    None => avoiding += 1,
                }
            }
            (hits, avoiding)
        })
        .reduce(
            || (vec![0u64; n + 1], 0),
            |(mut a, x), (b, y)| {
                a.iter_mut().zip(b).for_each(|(l, r)| *l += r);
                (a, x + y)
            },
        );

    let first_occurrence_counts = by_position
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            let shared = 1u64 << (n - j);
            debug_assert_eq!(c % shared, 0);
            c / shared
        })
        .collect();

    Ok(ExhaustiveTally {
        pattern: pattern.clone(),
        n,
        first_occurrence_counts,
        avoiding_count: avoiding,
    })
}
