use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// Name of the generator recorded in every [`SimulationResult`].
pub const GENERATOR: &str = "ChaCha8Rng";

/// A game longer than this aborts the simulation.
pub const GAME_LENGTH_CAP: u64 = 1_000_000;

/// Trials per independent generator stream.
const BLOCK_TRIALS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub pattern: Pattern,
    pub trials: u64,
    pub seed: u64,
    pub generator: &'static str,
    pub sample_mean: f64,
    /// Sample standard deviation over `sqrt(trials)`; zero for one trial.
    pub sample_stderr: f64,
    pub max_game_length_seen: u64,
}

impl SimulationResult {
    /// `(sample_mean - exact) / sample_stderr`; infinite when the standard
    /// error is zero and the mean differs.
    pub fn z_score(&self, exact: f64) -> f64 {
        let diff = self.sample_mean - exact;
        if diff == 0.0 {
            0.0
        } else {
            diff / self.sample_stderr
        }
    }
}

/// Fair tosses drawn from the generator, most significant bit first.
struct TossStream {
    rng: ChaCha8Rng,
    word: u64,
    left: u32,
}

impl TossStream {
    fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self {
            rng,
            word: 0,
            left: 0,
        }
    }

    fn toss(&mut self) -> bool {
        if self.left == 0 {
            self.word = self.rng.next_u64();
            self.left = 64;
        }
        self.left -= 1;
        (self.word >> self.left) & 1 == 1
    }
}

#[derive(Default)]
struct Moments {
    sum: u128,
    sum_sq: u128,
    max: u64,
}

fn play(stream: &mut TossStream, target: u64, m: usize) -> Result<u64> {
    let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut window = 0u64;
    let mut tosses = 0u64;
    loop {
        window = (window << 1) | u64::from(stream.toss());
        tosses += 1;
        if tosses >= m as u64 && window & mask == target {
            return Ok(tosses);
        }
        if tosses >= GAME_LENGTH_CAP {
            return Err(Error::GameLengthCap {
                cap: GAME_LENGTH_CAP,
            });
        }
    }
}

/// Plays `trials` independent games, each tossing a fair coin until
/// `pattern` appears, and summarises the game lengths.
///
/// Trials are split into fixed blocks, each driven by its own stream of a
/// generator seeded with `seed`, so the result does not depend on thread
/// scheduling.
pub fn simulate(pattern: &Pattern, trials: u64, seed: u64) -> Result<SimulationResult> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let m = pattern.len();
    let target = pattern.to_index().ok_or(Error::InvalidLength(m))?;

    let blocks = trials.div_ceil(BLOCK_TRIALS);
    let per_block: Vec<Moments> = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let start = block * BLOCK_TRIALS;
            let count = BLOCK_TRIALS.min(trials - start);
            let mut stream = TossStream::new(seed, block);
            let mut moments = Moments::default();
            for _ in 0..count {
                let len = play(&mut stream, target, m)?;
                moments.sum += u128::from(len);
                moments.sum_sq += u128::from(len) * u128::from(len);
                moments.max = moments.max.max(len);
            }
            Ok(moments)
        })
        .collect::<Result<_>>()?;

    let total = per_block.iter().fold(Moments::default(), |acc, b| Moments {
        sum: acc.sum + b.sum,
        sum_sq: acc.sum_sq + b.sum_sq,
        max: acc.max.max(b.max),
    });

    let n = trials as f64;
    let sample_mean = total.sum as f64 / n;
    let sample_stderr = if trials > 1 {
        // n * sum_sq - sum^2 is exact in integers; it can exceed u128 only
        // for absurd trial counts, in which case fall back to floats.
        let spread = u128::from(trials)
            .checked_mul(total.sum_sq)
            .and_then(|a| total.sum.checked_mul(total.sum).map(|b| (a - b) as f64))
            .unwrap_or_else(|| n * total.sum_sq as f64 - (total.sum as f64).powi(2));
        let variance = spread / (n * (n - 1.0));
        (variance / n).sqrt()
    } else {
        0.0
    };

    Ok(SimulationResult {
        pattern: pattern.clone(),
        trials,
        seed,
        generator: GENERATOR,
        sample_mean,
        sample_stderr,
        max_game_length_seen: total.max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn same_seed_same_result() {
        let a = simulate(&p("101"), 200_000, 9).unwrap();
        let b = simulate(&p("101"), 200_000, 9).unwrap();
        assert_eq!(a, b);
        let c = simulate(&p("101"), 200_000, 10).unwrap();
        assert_ne!(a.sample_mean, c.sample_mean);
    }

    #[test]
    fn single_toss_games() {
        let r = simulate(&p("1"), 100, 3).unwrap();
        assert!(r.sample_mean >= 1.0);
        assert!(r.max_game_length_seen >= 1);
        let one = simulate(&p("10"), 1, 7).unwrap();
        assert_eq!(one.sample_stderr, 0.0);
        assert!(one.sample_mean >= 2.0 && one.sample_mean.fract() == 0.0);
        assert_eq!(one.max_game_length_seen as f64, one.sample_mean);
    }

    #[test]
    fn zero_trials_rejected() {
        assert_eq!(simulate(&p("1"), 0, 0), Err(Error::NoTrials));
    }

    #[test]
    fn long_patterns_trip_the_cap() {
        let long = Pattern::from_bits(vec![true; 40]).unwrap();
        assert_eq!(
            simulate(&long, 1, 0),
            Err(Error::GameLengthCap {
                cap: GAME_LENGTH_CAP
            })
        );
    }

    #[test]
    fn means_of_doubles_and_triples_are_close() {
        for (s, exact) in [
            ("10", 4.0),
            ("11", 6.0),
            ("100", 8.0),
            ("101", 10.0),
            ("111", 14.0),
        ] {
            let r = simulate(&p(s), 100_000, 1).unwrap();
            assert!(r.z_score(exact).abs() < 4.0, "{s}: {r:?}");
        }
    }
}
