//! Exact checks of the relations tying `sigma`, `tau` and the self-overlap
//! coefficients together.

use crate::counts::{occurrence_counts, OccurrenceCounts};
use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::scalar::{self, Count};
use crate::waiting::{correlation_set, CorrelationSet};

/// Outcome of [`verify_identities`]. Each failure list holds the offending
/// indices `n`; all empty means every identity held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub pattern: Pattern,
    pub horizon: usize,
    pub correlation: CorrelationSet,
    /// `2 sigma_{n-1} = sigma_n + tau_n`, checked for `1 <= n <= N`.
    pub recurrence_failures: Vec<usize>,
    /// `sigma_n = sum_j c_j tau_{j+n}`, checked for `0 <= n <= N - m`.
    pub correlation_failures: Vec<usize>,
    /// `sum_{k=m}^{n} tau_k / 2^k = 1 - sigma_n / 2^n`, checked for `m <= n <= N`.
    pub telescoping_failures: Vec<usize>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.recurrence_failures.is_empty()
            && self.correlation_failures.is_empty()
            && self.telescoping_failures.is_empty()
    }

    /// The overlap identity spelled out, e.g.
    /// `sigma_n = tau_{n+1} + tau_{n+3} + tau_{n+5}`.
    pub fn correlation_identity(&self) -> String {
        let terms: Vec<String> = self
            .correlation
            .overlaps()
            .into_iter()
            .map(|j| format!("tau_{{n+{j}}}"))
            .collect();
        format!("sigma_n = {}", terms.join(" + "))
    }
}

/// Checks the three identities on exact counts up to `horizon` (at least
/// twice the pattern length).
pub fn verify_identities<C: Count>(pattern: &Pattern, horizon: usize) -> Result<IdentityReport> {
    let m = pattern.len();
    if horizon < 2 * m {
        return Err(Error::InvalidHorizon {
            horizon,
            minimum: 2 * m,
        });
    }
    let counts = occurrence_counts::<C>(pattern, horizon)?;
    check_counts(&counts)
}

/// Runs the identity checks on counts that were already computed.
pub fn check_counts<C: Count>(counts: &OccurrenceCounts<C>) -> Result<IdentityReport> {
    const CONTEXT: &str = "an identity check";
    let pattern = counts.pattern().clone();
    let m = pattern.len();
    let horizon = counts.horizon();
    let correlation = correlation_set(&pattern);
    let (sigma, tau) = (counts.sigma(), counts.tau());

    let mut recurrence_failures = Vec::new();
    for n in 1..=horizon {
        let doubled = scalar::add(&sigma[n - 1], &sigma[n - 1], CONTEXT)?;
        if doubled != scalar::add(&sigma[n], &tau[n], CONTEXT)? {
            recurrence_failures.push(n);
        }
    }

    let mut correlation_failures = Vec::new();
    let overlaps = correlation.overlaps();
    for n in 0..=horizon.saturating_sub(m) {
        let expanded = overlaps
            .iter()
            .try_fold(C::zero(), |acc, &j| scalar::add(&acc, &tau[j + n], CONTEXT))?;
        if expanded != sigma[n] {
            correlation_failures.push(n);
        }
    }

    let mut telescoping_failures = Vec::new();
    let mut absorbed = DyadicRational::<C>::zero();
    for n in m..=horizon {
        absorbed = absorbed.checked_add(&DyadicRational::new(tau[n].clone(), n as u64))?;
        let remaining = DyadicRational::new(sigma[n].clone(), n as u64);
        if absorbed.checked_add(&remaining)? != DyadicRational::one() {
            telescoping_failures.push(n);
        }
    }

    Ok(IdentityReport {
        pattern,
        horizon,
        correlation,
        recurrence_failures,
        correlation_failures,
        telescoping_failures,
    })
}
