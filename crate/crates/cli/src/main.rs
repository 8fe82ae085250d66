mod args;
mod commands;
mod error;
mod output;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use tosswait::{BigUint, Count};

use args::{Cli, Command, IntWidth};
use error::{CliError, EXIT_USAGE, EXIT_VERIFICATION};
use output::Output;

fn dispatch<C: Count>(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Expect { pattern, stake } => {
            commands::expect::<C>(&commands::parse(pattern)?, *stake)
        }
        Command::Table {
            lengths,
            all,
            max_length,
        } => commands::table::<C>(lengths, *all, *max_length),
        Command::Dist { pattern, horizon } => {
            commands::dist::<C>(&commands::parse(pattern)?, *horizon)
        }
        Command::Simulate {
            pattern,
            trials,
            seed,
        } => commands::simulate_cmd::<C>(&commands::parse(pattern)?, *trials, *seed),
        Command::Verify {
            lengths,
            horizon,
            oracle_n,
            max_length,
        } => commands::verify::<C>(lengths, *horizon, *oracle_n, *max_length),
    }
}

fn describe(command: &Command) -> (&'static str, serde_json::Value) {
    match command {
        Command::Expect { pattern, stake } => {
            ("expect", json!({ "pattern": pattern, "stake": stake }))
        }
        Command::Table {
            lengths,
            all,
            max_length,
        } => (
            "table",
            json!({
                "min_length": lengths.start(),
                "max_length": lengths.end(),
                "all": all,
                "length_cap": max_length,
            }),
        ),
        Command::Dist { pattern, horizon } => {
            ("dist", json!({ "pattern": pattern, "horizon": horizon }))
        }
        Command::Simulate {
            pattern,
            trials,
            seed,
        } => (
            "simulate",
            json!({ "pattern": pattern, "trials": trials, "seed": seed }),
        ),
        Command::Verify {
            lengths,
            horizon,
            oracle_n,
            max_length,
        } => (
            "verify",
            json!({
                "min_length": lengths.start(),
                "max_length": lengths.end(),
                "horizon": horizon,
                "oracle_n": oracle_n,
                "length_cap": max_length,
            }),
        ),
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let output = match cli.global.int {
        IntWidth::U64 => dispatch::<u64>(&cli.command),
        IntWidth::U128 => dispatch::<u128>(&cli.command),
        IntWidth::Big => dispatch::<BigUint>(&cli.command),
    }?;
    let (name, inputs) = describe(&cli.command);
    let rendered = output.render(cli.global.format, name, inputs)?;
    match &cli.global.output {
        Some(path) => fs::write(path, rendered)?,
        None => std::io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    Ok(!output.failed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFICATION as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
