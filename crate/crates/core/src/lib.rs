//! Exact waiting times for patterns in fair coin tossing.
//!
//! A pattern is a string of heads (`1`) and tails (`0`). The expected number
//! of tosses until it first appears is `sum_j c_j 2^j`, where `c_j` marks the
//! lengths at which a prefix of the pattern equals a suffix. The crate
//! computes that value in closed form, the full first-occurrence law via an
//! automaton, and checks both against exhaustive enumeration and simulation.
//!
//! Counts are generic over [`Count`]: fixed-width unsigned integers fail with
//! [`Error::Overflow`] instead of wrapping, and [`BigUint`] never overflows.
//! The aliases below fix the common choices.

pub mod automaton;
pub mod closed_form;
pub mod counts;
pub mod dyadic;
mod error;
pub mod identities;
pub mod oracle;
pub mod pattern;
pub mod scalar;
pub mod table;
pub mod waiting;

pub use num_bigint::BigUint;

pub use automaton::{build_automaton, AvoidanceAutomaton};
pub use closed_form::{closed_form_tau, fibonacci, ClosedFormFamily};
pub use counts::{
    first_occurrence_distribution, mean_via_sigma_series, occurrence_counts, FirstOccurrence,
    OccurrenceCounts, SeriesMean,
};
pub use dyadic::DyadicRational;
pub use error::{Error, Result};
pub use identities::{verify_identities, IdentityReport};
pub use oracle::{exhaustive_tally, simulate, ExhaustiveTally, SimulationResult};
pub use pattern::{complement, parse_pattern, Pattern};
pub use scalar::Count;
pub use table::{table_rows, TableRow};
pub use waiting::{
    correlation_set, expected_profit, expected_waiting_time, waiting_time_bounds, CorrelationSet,
    WaitingTimeReport,
};

pub type Dyadic64 = DyadicRational<u64>;
pub type Dyadic128 = DyadicRational<u128>;
pub type BigDyadic = DyadicRational<BigUint>;

pub type Counts64 = OccurrenceCounts<u64>;
pub type Counts128 = OccurrenceCounts<u128>;
pub type BigCounts = OccurrenceCounts<BigUint>;

pub type Report64 = WaitingTimeReport<u64>;
pub type BigReport = WaitingTimeReport<BigUint>;
