//! Grouping patterns of one length by their expected waiting time.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::pattern::Pattern;
use crate::scalar::Count;
use crate::waiting::expected_waiting_time;

/// Every pattern of `length` sharing one expected waiting time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow<C> {
    pub length: usize,
    pub average: C,
    /// Ascending as binary numbers.
    pub patterns: Vec<Pattern>,
}

/// Rows for one length, sorted by ascending average. Only patterns starting
/// with a head are listed unless `include_all` is set; complements share the
/// same average.
pub fn table_rows<C: Count + Ord>(length: usize, include_all: bool) -> Result<Vec<TableRow<C>>> {
    let patterns: Box<dyn Iterator<Item = Pattern>> = if include_all {
        Box::new(Pattern::all_of_length(length))
    } else {
        Box::new(Pattern::canonical_of_length(length))
    };
    let mut groups: BTreeMap<C, Vec<Pattern>> = BTreeMap::new();
    for p in patterns {
        groups
            .entry(expected_waiting_time(&p)?)
            .or_default()
            .push(p);
    }
    Ok(groups
        .into_iter()
        .map(|(average, patterns)| TableRow {
            length,
            average,
            patterns,
        })
        .collect())
}
