use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tosswait",
    version,
    about = "Exact expected waiting times for coin-toss patterns"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Integer type for exact counts. Fixed widths fail with exit code 3 on
    /// overflow.
    #[arg(long = "int", value_enum, default_value_t = IntWidth::Big, global = true)]
    pub int: IntWidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntWidth {
    U64,
    U128,
    Big,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expected tosses until a pattern first appears.
    Expect {
        /// Pattern as 0/1 or T/H.
        pattern: String,
        /// Up-front stake; reports the expected profit of a game paying one
        /// unit per toss.
        #[arg(long)]
        stake: Option<u64>,
    },
    /// Patterns of each length grouped by expected waiting time.
    Table {
        /// Lengths, as `L` or `MIN..MAX` (inclusive).
        #[arg(long, default_value = "2..6", value_parser = parse_range)]
        lengths: RangeInclusive<usize>,
        /// List every pattern, not only those starting with a head.
        #[arg(long)]
        all: bool,
        /// Largest length accepted.
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
    /// Exact first-occurrence distribution up to a horizon.
    Dist {
        pattern: String,
        #[arg(long)]
        horizon: usize,
    },
    /// Monte Carlo estimate of the expected waiting time.
    Simulate {
        pattern: String,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the counting identities and the brute-force oracle.
    Verify {
        /// Lengths, as `L` or `MIN..MAX` (inclusive).
        #[arg(long, default_value = "1..6", value_parser = parse_range)]
        lengths: RangeInclusive<usize>,
        /// Horizon for the identity checks; at least twice the longest length.
        #[arg(long, default_value_t = 64)]
        horizon: usize,
        /// Longest string length enumerated by the brute-force oracle.
        #[arg(long, default_value_t = 12)]
        oracle_n: usize,
        /// Largest pattern length accepted.
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
}

pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let number = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| format!("invalid length {s:?}: {e}"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (number(lo)?, number(hi.trim_start_matches('='))?),
        None => {
            let v = number(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..6"), Ok(2..=6));
        assert_eq!(parse_range("2..=6"), Ok(2..=6));
        assert_eq!(parse_range("4"), Ok(4..=4));
        assert!(parse_range("6..2").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
