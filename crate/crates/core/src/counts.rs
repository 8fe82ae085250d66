//! Avoidance counts `sigma_n`, first-termination counts `tau_n`, and the
//! exact quantities derived from them.
//!
//! Counts are produced by pushing state-occupancy counts through the
//! [`AvoidanceAutomaton`] one toss at a time. After `n` tosses, `sigma_n` is
//! the number of length-`n` strings still in a non-accepting state and
//! `tau_n` the number that entered the accepting state on toss `n`.

use crate::automaton::AvoidanceAutomaton;
use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::scalar::{self, Count};
use crate::waiting::expected_waiting_time;

/// Exact `sigma_0..sigma_N` and `tau_0..tau_N` for one pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceCounts<C> {
    automaton: AvoidanceAutomaton,
    sigma: Vec<C>,
    tau: Vec<C>,
    occupancy: Vec<C>,
}

impl<C: Count> OccurrenceCounts<C> {
    /// Counts for `horizon = 0`: `sigma_0 = 1`, `tau_0 = 0`.
    pub fn start(pattern: &Pattern) -> Self {
        let automaton = AvoidanceAutomaton::new(pattern);
        let mut occupancy = vec![C::zero(); pattern.len()];
        occupancy[0] = C::one();
        Self {
            automaton,
            sigma: vec![C::one()],
            tau: vec![C::zero()],
            occupancy,
        }
    }

    /// Advances the counts to `horizon` tosses. A horizon at or below the
    /// current one is a no-op. On overflow the counts are left as they were
    /// after the last complete step.
    pub fn extend_to(&mut self, horizon: usize) -> Result<()> {
        while self.horizon() < horizon {
            self.step()?;
        }
        Ok(())
    }

    fn step(&mut self) -> Result<()> {
        const CONTEXT: &str = "occurrence counts";
        let accepting = self.automaton.accepting();
        let mut next = vec![C::zero(); accepting];
        let mut absorbed = C::zero();
        for (state, count) in self.occupancy.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for bit in [false, true] {
                let target = self.automaton.next(state, bit);
                let slot = if target == accepting {
                    &mut absorbed
                } else {
                    &mut next[target]
                };
                *slot = scalar::add(slot, count, CONTEXT)?;
            }
        }
        let sigma = next
            .iter()
            .try_fold(C::zero(), |acc, c| scalar::add(&acc, c, CONTEXT))?;
        self.occupancy = next;
        self.sigma.push(sigma);
        self.tau.push(absorbed);
        Ok(())
    }

    pub fn pattern(&self) -> &Pattern {
        self.automaton.pattern()
    }

    pub fn automaton(&self) -> &AvoidanceAutomaton {
        &self.automaton
    }

    /// The largest `n` for which counts are available.
    pub fn horizon(&self) -> usize {
        self.sigma.len() - 1
    }

    /// `sigma_0..=sigma_N`.
    pub fn sigma(&self) -> &[C] {
        &self.sigma
    }

    /// `tau_0..=tau_N`.
    pub fn tau(&self) -> &[C] {
        &self.tau
    }

    /// Per-state counts of avoiding strings of length `N`, indexed by the
    /// automaton state `0..m`.
    pub fn occupancy(&self) -> &[C] {
        &self.occupancy
    }
}

/// Exact avoidance and first-termination counts up to `horizon`.
pub fn occurrence_counts<C: Count>(
    pattern: &Pattern,
    horizon: usize,
) -> Result<OccurrenceCounts<C>> {
    let mut counts = OccurrenceCounts::start(pattern);
    counts.extend_to(horizon)?;
    Ok(counts)
}

/// The first-occurrence law `p_n = tau_n / 2^n` truncated at a horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstOccurrence<C> {
    pub counts: OccurrenceCounts<C>,
    /// `p_0..=p_N`.
    pub probabilities: Vec<DyadicRational<C>>,
    /// `P(first occurrence <= n)` for `n = 0..=N`.
    pub cumulative: Vec<DyadicRational<C>>,
    /// `sigma_N / 2^N`, the mass not yet absorbed at the horizon.
    pub residual: DyadicRational<C>,
}

/// Exact first-occurrence probabilities for `n = 0..=horizon`.
pub fn first_occurrence_distribution<C: Count>(
    pattern: &Pattern,
    horizon: usize,
) -> Result<FirstOccurrence<C>> {
    if horizon < pattern.len() {
        return Err(Error::InvalidHorizon {
            horizon,
            minimum: pattern.len(),
        });
    }
    let counts = occurrence_counts::<C>(pattern, horizon)?;
    let probabilities: Vec<_> = counts
        .tau()
        .iter()
        .enumerate()
        .map(|(n, t)| DyadicRational::new(t.clone(), n as u64))
        .collect();
    let mut cumulative = Vec::with_capacity(probabilities.len());
    let mut running = DyadicRational::zero();
    for p in &probabilities {
        running = running.checked_add(p)?;
        cumulative.push(running.clone());
    }
    let residual = DyadicRational::new(counts.sigma()[horizon].clone(), horizon as u64);
    Ok(FirstOccurrence {
        counts,
        probabilities,
        cumulative,
        residual,
    })
}

/// Partial sum of `sigma_n / 2^n`, whose limit is the expected waiting time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMean<C> {
    pub horizon: usize,
    /// `sum_{n=0}^{N} sigma_n / 2^n`.
    pub partial_sum: DyadicRational<C>,
    /// `sigma_N / 2^N`, one minus the cumulative first-occurrence mass.
    pub residual_mass: DyadicRational<C>,
    /// The closed-form expected waiting time.
    pub exact: C,
}

impl<C: Count> SeriesMean<C> {
    /// `exact - partial_sum`, which equals the unsummed tail
    /// `sum_{n>N} sigma_n / 2^n`.
    pub fn gap(&self) -> Result<DyadicRational<C>> {
        DyadicRational::integer(self.exact.clone()).checked_sub(&self.partial_sum)
    }
}

/// Exact partial sum of the avoidance series up to `horizon`.
pub fn mean_via_sigma_series<C: Count>(pattern: &Pattern, horizon: usize) -> Result<SeriesMean<C>> {
    let counts = occurrence_counts::<C>(pattern, horizon)?;
    let mut partial_sum = DyadicRational::zero();
    for (n, s) in counts.sigma().iter().enumerate() {
        partial_sum = partial_sum.checked_add(&DyadicRational::new(s.clone(), n as u64))?;
    }
    Ok(SeriesMean {
        horizon,
        partial_sum,
        residual_mass: DyadicRational::new(counts.sigma()[horizon].clone(), horizon as u64),
        exact: expected_waiting_time(pattern)?,
    })
}
