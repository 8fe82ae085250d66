use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde_json::{json, Value};

use tosswait::oracle::DEFAULT_ENUMERATION_CEILING;
use tosswait::{
    exhaustive_tally, expected_waiting_time, first_occurrence_distribution, identities,
    occurrence_counts, simulate, table_rows, Count, Pattern, WaitingTimeReport,
};

use crate::error::CliError;
use crate::output::{json_count, json_signed, Output};

pub fn parse(text: &str) -> Result<Pattern, CliError> {
    Pattern::parse(text).map_err(|e| CliError::Usage(format!("cannot parse pattern {text:?}: {e}")))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn expect<C: Count>(pattern: &Pattern, stake: Option<u64>) -> Result<Output, CliError> {
    let report = WaitingTimeReport::<C>::new(pattern, stake)?;
    let overlaps = report.correlation.overlaps();

    let mut text = String::new();
    writeln!(
        text,
        "pattern:         {} ({})",
        pattern,
        pattern.to_coin_string()
    )
    .unwrap();
    writeln!(text, "overlaps:        {{{}}}", join(&overlaps, ", ")).unwrap();
    writeln!(text, "expected tosses: {}", report.expected_tosses).unwrap();
    writeln!(
        text,
        "bounds:          {} <= N <= {}",
        report.lower_bound, report.upper_bound
    )
    .unwrap();
    if let (Some(stake), Some(profit)) = (stake, &report.expected_profit) {
        writeln!(text, "stake:           {stake}").unwrap();
        let sign = if profit.sign() == num_bigint::Sign::Minus {
            ""
        } else {
            "+"
        };
        writeln!(text, "expected profit: {sign}{profit}").unwrap();
    }

    let mut results = json!({
        "pattern": pattern.to_string(),
        "coin": pattern.to_coin_string(),
        "overlaps": overlaps,
        "expected_tosses": json_count(&report.expected_tosses),
        "lower_bound": json_count(&report.lower_bound),
        "upper_bound": json_count(&report.upper_bound),
    });
    if let (Some(stake), Some(profit)) = (stake, &report.expected_profit) {
        results["stake"] = json!(stake);
        results["expected_profit"] = json_signed(profit);
    }

    Ok(Output {
        text,
        csv_header: vec![
            "pattern",
            "overlaps",
            "expected_tosses",
            "lower_bound",
            "upper_bound",
            "stake",
            "expected_profit",
        ],
        csv_rows: vec![vec![
            pattern.to_string(),
            join(&overlaps, ";"),
            report.expected_tosses.to_string(),
            report.lower_bound.to_string(),
            report.upper_bound.to_string(),
            stake.map(|s| s.to_string()).unwrap_or_default(),
            report
                .expected_profit
                .map(|p| p.to_string())
                .unwrap_or_default(),
        ]],
        results,
        failed: false,
    })
}

pub fn table<C: Count>(
    lengths: &RangeInclusive<usize>,
    all: bool,
    max_length: usize,
) -> Result<Output, CliError> {
    if *lengths.start() < 2 || *lengths.end() > max_length {
        return Err(CliError::Usage(format!(
            "lengths must lie within 2..{max_length}, got {}..{}",
            lengths.start(),
            lengths.end()
        )));
    }
    if max_length > 62 {
        return Err(CliError::Usage(format!(
            "--max-length {max_length} exceeds 62"
        )));
    }

    let mut text = String::new();
    let mut csv_rows = Vec::new();
    let mut json_rows = Vec::new();
    writeln!(text, "{:<8}{:<10}patterns", "length", "average").unwrap();
    for length in lengths.clone() {
        for (i, row) in table_rows::<C>(length, all)?.into_iter().enumerate() {
            let names: Vec<String> = row.patterns.iter().map(Pattern::to_string).collect();
            let label = if i == 0 {
                length.to_string()
            } else {
                String::new()
            };
            writeln!(
                text,
                "{label:<8}{:<10}{}",
                row.average.to_string(),
                names.join(", ")
            )
            .unwrap();
            for name in &names {
                csv_rows.push(vec![
                    length.to_string(),
                    row.average.to_string(),
                    name.clone(),
                ]);
            }
            json_rows.push(json!({
                "length": length,
                "average": json_count(&row.average),
                "patterns": names,
            }));
        }
    }
    if !all {
        writeln!(
            text,
            "\nOnly patterns starting with 1 (head) are listed; swapping heads and tails \
             leaves the average unchanged. Use --all to list every pattern."
        )
        .unwrap();
    }

    Ok(Output {
        text,
        csv_header: vec!["length", "average", "pattern"],
        csv_rows,
        results: Value::Array(json_rows),
        failed: false,
    })
}

pub fn dist<C: Count>(pattern: &Pattern, horizon: usize) -> Result<Output, CliError> {
    if horizon < pattern.len() {
        return Err(CliError::Usage(format!(
            "--horizon {horizon} is shorter than the pattern ({} tosses)",
            pattern.len()
        )));
    }
    let d = first_occurrence_distribution::<C>(pattern, horizon)?;

    let mut text = String::new();
    writeln!(
        text,
        "first-occurrence distribution of {} ({}), horizon {horizon}",
        pattern,
        pattern.to_coin_string()
    )
    .unwrap();
    writeln!(
        text,
        "{:>5} {:>14} {:>14} {:>22} {:>24} {:>24}",
        "n", "tau", "sigma", "p", "p (decimal)", "cumulative"
    )
    .unwrap();
    let mut csv_rows = Vec::new();
    let mut json_rows = Vec::new();
    for n in 1..=horizon {
        let (tau, sigma) = (&d.counts.tau()[n], &d.counts.sigma()[n]);
        let (p, cum) = (&d.probabilities[n], &d.cumulative[n]);
        writeln!(
            text,
            "{n:>5} {:>14} {:>14} {:>22} {:>24} {:>24}",
            tau.to_string(),
            sigma.to_string(),
            p.to_string(),
            p.to_decimal_string(),
            cum.to_string()
        )
        .unwrap();
        csv_rows.push(vec![
            n.to_string(),
            tau.to_string(),
            sigma.to_string(),
            p.to_string(),
            p.to_decimal_string(),
            cum.to_string(),
            cum.to_decimal_string(),
        ]);
        json_rows.push(json!({
            "n": n,
            "tau": json_count(tau),
            "sigma": json_count(sigma),
            "probability": p.to_string(),
            "probability_decimal": p.to_decimal_string(),
            "cumulative": cum.to_string(),
            "cumulative_decimal": cum.to_decimal_string(),
        }));
    }
    writeln!(
        text,
        "residual mass after {horizon} tosses: {} = {}",
        d.residual,
        d.residual.to_decimal_string()
    )
    .unwrap();

    Ok(Output {
        text,
        csv_header: vec![
            "n",
            "tau",
            "sigma",
            "probability",
            "probability_decimal",
            "cumulative",
            "cumulative_decimal",
        ],
        csv_rows,
        results: json!({
            "pattern": pattern.to_string(),
            "horizon": horizon,
            "rows": json_rows,
            "residual": d.residual.to_string(),
            "residual_decimal": d.residual.to_decimal_string(),
        }),
        failed: false,
    })
}

pub fn simulate_cmd<C: Count>(
    pattern: &Pattern,
    trials: u64,
    seed: u64,
) -> Result<Output, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let exact = expected_waiting_time::<C>(pattern)?;
    let exact_f = exact.to_f64().unwrap_or(f64::INFINITY);
    let r = simulate(pattern, trials, seed)?;
    let z = r.z_score(exact_f);

    let mut text = String::new();
    writeln!(
        text,
        "pattern:          {} ({})",
        pattern,
        pattern.to_coin_string()
    )
    .unwrap();
    writeln!(text, "trials:           {trials}").unwrap();
    writeln!(text, "generator:        {} (seed {seed})", r.generator).unwrap();
    writeln!(text, "sample mean:      {:.6}", r.sample_mean).unwrap();
    writeln!(text, "standard error:   {:.6}", r.sample_stderr).unwrap();
    writeln!(text, "exact expected:   {exact}").unwrap();
    writeln!(text, "z-score:          {z:.3}").unwrap();
    writeln!(text, "longest game:     {}", r.max_game_length_seen).unwrap();

    Ok(Output {
        text,
        csv_header: vec![
            "pattern",
            "trials",
            "seed",
            "generator",
            "sample_mean",
            "sample_stderr",
            "exact",
            "z_score",
            "max_game_length",
        ],
        csv_rows: vec![vec![
            pattern.to_string(),
            trials.to_string(),
            seed.to_string(),
            r.generator.to_string(),
            r.sample_mean.to_string(),
            r.sample_stderr.to_string(),
            exact.to_string(),
            z.to_string(),
            r.max_game_length_seen.to_string(),
        ]],
        results: json!({
            "pattern": pattern.to_string(),
            "trials": trials,
            "seed": seed,
            "generator": r.generator,
            "sample_mean": r.sample_mean,
            "sample_stderr": r.sample_stderr,
            "exact": json_count(&exact),
            // NaN/inf have no JSON form
            "z_score": if z.is_finite() { json!(z) } else { Value::Null },
            "max_game_length": r.max_game_length_seen,
        }),
        failed: false,
    })
}

struct PatternCheck {
    pattern: Pattern,
    recurrence: Vec<usize>,
    correlation: Vec<usize>,
    telescoping: Vec<usize>,
    oracle: Vec<usize>,
}

impl PatternCheck {
    fn passed(&self) -> bool {
        self.recurrence.is_empty()
            && self.correlation.is_empty()
            && self.telescoping.is_empty()
            && self.oracle.is_empty()
    }
}

/// Lengths `n` in `m..=oracle_n` where brute-force enumeration disagrees
/// with the engine.
fn oracle_mismatches<C: Count>(pattern: &Pattern, oracle_n: usize) -> Result<Vec<usize>, CliError> {
    let m = pattern.len();
    if oracle_n < m {
        return Ok(Vec::new());
    }
    let counts = occurrence_counts::<C>(pattern, oracle_n)?;
    let mut bad = Vec::new();
    for n in m..=oracle_n {
        let tally = exhaustive_tally(pattern, n)?;
        let same_sigma = counts.sigma()[n].to_u64() == Some(tally.avoiding_count);
        let same_tau = tally
            .first_occurrence_counts
            .iter()
            .zip(&counts.tau()[..=n])
            .all(|(t, c)| c.to_u64() == Some(*t));
        if !(same_sigma && same_tau) {
            bad.push(n);
        }
    }
    Ok(bad)
}

pub fn verify<C: Count>(
    lengths: &RangeInclusive<usize>,
    horizon: usize,
    oracle_n: usize,
    max_length: usize,
) -> Result<Output, CliError> {
    let (lo, hi) = (*lengths.start(), *lengths.end());
    if lo < 1 || hi > max_length || max_length > 62 {
        return Err(CliError::Usage(format!(
            "lengths must lie within 1..{}, got {lo}..{hi}",
            max_length.min(62)
        )));
    }
    if horizon < 2 * hi {
        return Err(CliError::Usage(format!(
            "--horizon {horizon} must be at least twice the longest length ({hi})"
        )));
    }
    if oracle_n > DEFAULT_ENUMERATION_CEILING {
        return Err(CliError::Usage(format!(
            "--oracle-n {oracle_n} exceeds the enumeration ceiling {DEFAULT_ENUMERATION_CEILING}"
        )));
    }

    let mut checks = Vec::new();
    for length in lengths.clone() {
        for pattern in Pattern::canonical_of_length(length) {
            let counts = occurrence_counts::<C>(&pattern, horizon)?;
            let report = identities::check_counts(&counts)?;
            checks.push(PatternCheck {
                oracle: oracle_mismatches::<C>(&pattern, oracle_n)?,
                pattern,
                recurrence: report.recurrence_failures,
                correlation: report.correlation_failures,
                telescoping: report.telescoping_failures,
            });
        }
    }
    let failures: Vec<&PatternCheck> = checks.iter().filter(|c| !c.passed()).collect();

    let mut text = String::new();
    writeln!(
        text,
        "checked {} patterns of length {lo}..{hi}: identities to n={horizon}, brute force to n={oracle_n}",
        checks.len()
    )
    .unwrap();
    for f in &failures {
        writeln!(
            text,
            "FAIL {}: recurrence {:?}, overlap expansion {:?}, telescoping {:?}, oracle {:?}",
            f.pattern, f.recurrence, f.correlation, f.telescoping, f.oracle
        )
        .unwrap();
    }
    if failures.is_empty() {
        writeln!(text, "all identities hold").unwrap();
    } else {
        writeln!(
            text,
            "{} of {} patterns failed",
            failures.len(),
            checks.len()
        )
        .unwrap();
    }

    let fmt = |v: &[usize]| join(v, ";");
    let csv_rows = checks
        .iter()
        .map(|c| {
            vec![
                c.pattern.to_string(),
                fmt(&c.recurrence),
                fmt(&c.correlation),
                fmt(&c.telescoping),
                fmt(&c.oracle),
                if c.passed() { "pass" } else { "fail" }.to_string(),
            ]
        })
        .collect();
    let json_rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "pattern": c.pattern.to_string(),
                "recurrence_failures": c.recurrence,
                "correlation_failures": c.correlation,
                "telescoping_failures": c.telescoping,
                "oracle_failures": c.oracle,
                "passed": c.passed(),
            })
        })
        .collect();

    Ok(Output {
        text,
        csv_header: vec![
            "pattern",
            "recurrence_failures",
            "correlation_failures",
            "telescoping_failures",
            "oracle_failures",
            "status",
        ],
        csv_rows,
        results: json!({
            "patterns_checked": checks.len(),
            "passed": failures.is_empty(),
            "checks": json_rows,
        }),
        failed: !failures.is_empty(),
    })
}
