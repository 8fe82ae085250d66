//! Ground truth that does not go through the automaton: exhaustive
//! enumeration of short toss sequences and a seeded Monte Carlo simulator.

mod exhaustive;
mod simulate;

pub use exhaustive::{exhaustive_tally, ExhaustiveTally, DEFAULT_ENUMERATION_CEILING};
pub use simulate::{simulate, SimulationResult, GAME_LENGTH_CAP, GENERATOR};
