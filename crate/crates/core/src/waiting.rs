//! Self-overlap coefficients and the closed-form expected waiting time.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::scalar::{self, Count};

/// Self-overlap indicators `c_1..c_m` of a pattern.
///
/// `c_j` is set when the length-`j` prefix equals the length-`j` suffix, so a
/// fresh copy of the pattern appended to a stream can complete `m - j` tosses
/// early. `c_m` is always set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorrelationSet {
    coefficients: Vec<bool>,
}

impl CorrelationSet {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `c_j` for `1 <= j <= m`.
    pub fn get(&self, j: usize) -> bool {
        assert!(
            j >= 1 && j <= self.len(),
            "coefficient index {j} out of range"
        );
        self.coefficients[j - 1]
    }

    /// Coefficients in order `c_1..c_m`.
    pub fn coefficients(&self) -> &[bool] {
        &self.coefficients
    }

    /// The indices `j` with `c_j = 1`, ascending.
    pub fn overlaps(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| c.then_some(i + 1))
            .collect()
    }
}

/// Extracts the self-overlap coefficients of `pattern`.
pub fn correlation_set(pattern: &Pattern) -> CorrelationSet {
    let bits = pattern.bits();
    let m = bits.len();
    let coefficients = (1..=m).map(|j| bits[..j] == bits[m - j..]).collect();
    CorrelationSet { coefficients }
}

/// Expected number of fair tosses until `pattern` first appears:
/// the sum of `2^j` over the set coefficients `c_j`.
pub fn expected_waiting_time<C: Count>(pattern: &Pattern) -> Result<C> {
    let correlation = correlation_set(pattern);
    correlation
        .overlaps()
        .into_iter()
        .try_fold(C::zero(), |acc, j| {
            let term = scalar::pow2::<C>(j as u64)?;
            scalar::add(&acc, &term, "an expected waiting time")
        })
}

/// `(2^m, 2^(m+1) - 2)`, the smallest and largest possible waiting times for
/// a pattern of length `m`.
pub fn waiting_time_bounds<C: Count>(m: usize) -> Result<(C, C)> {
    if m < 1 {
        return Err(Error::InvalidLength(m));
    }
    let lower = scalar::pow2::<C>(m as u64)?;
    // 2^(m+1) - 2 = 2 * (2^m - 1), which avoids computing 2^(m+1).
    let two = C::one() + C::one();
    let upper = (lower.clone() - C::one())
        .checked_mul(&two)
        .ok_or_else(|| scalar::overflow::<C>("a waiting-time bound"))?;
    Ok((lower, upper))
}

/// Expected net gain of a game that pays one unit per toss until `pattern`
/// appears, against an up-front `stake`.
pub fn expected_profit(pattern: &Pattern, stake: u64) -> BigInt {
    let tosses: BigUint = expected_waiting_time(pattern).expect("big integers do not overflow");
    BigInt::from(tosses) - BigInt::from(stake)
}

/// Everything known in closed form about one pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaitingTimeReport<C> {
    pub pattern: Pattern,
    pub correlation: CorrelationSet,
    pub expected_tosses: C,
    pub lower_bound: C,
    pub upper_bound: C,
    pub stake: Option<u64>,
    pub expected_profit: Option<BigInt>,
}

impl<C: Count> WaitingTimeReport<C> {
    pub fn new(pattern: &Pattern, stake: Option<u64>) -> Result<Self> {
        let expected_tosses = expected_waiting_time::<C>(pattern)?;
        let (lower_bound, upper_bound) = waiting_time_bounds::<C>(pattern.len())?;
        let expected_profit =
            stake.map(|s| BigInt::from(expected_tosses.to_big()) - BigInt::from(s));
        Ok(Self {
            pattern: pattern.clone(),
            correlation: correlation_set(pattern),
            expected_tosses,
            lower_bound,
            upper_bound,
            stake,
            expected_profit,
        })
    }
}
