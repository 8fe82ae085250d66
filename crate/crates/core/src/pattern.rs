use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonempty sequence of coin outcomes; `true` is a head (1), `false` a tail (0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    bits: Vec<bool>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Alphabet {
    Binary,
    Coin,
}

fn classify(c: char) -> Option<(Alphabet, bool)> {
    match c {
        '0' => Some((Alphabet::Binary, false)),
        '1' => Some((Alphabet::Binary, true)),
        't' | 'T' => Some((Alphabet::Coin, false)),
        'h' | 'H' => Some((Alphabet::Coin, true)),
        _ => None,
    }
}

impl Pattern {
    /// Builds a pattern from raw bits.
    pub fn from_bits(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Self { bits })
    }

    /// Parses `0`/`1` or `T`/`H` text (case-insensitive letters, one alphabet
    /// per pattern). Surrounding whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut alphabet = None;
        let mut bits = Vec::with_capacity(text.len());
        for (index, symbol) in text.chars().enumerate() {
            let (kind, bit) = classify(symbol).ok_or(Error::InvalidSymbol { index, symbol })?;
            match alphabet {
                None => alphabet = Some(kind),
                Some(a) if a != kind => return Err(Error::InvalidSymbol { index, symbol }),
                Some(_) => {}
            }
            bits.push(bit);
        }
        Self::from_bits(bits)
    }

    /// The pattern of `len` bits spelling `value` in binary, most
    /// significant bit first.
    ///
    /// # Panics
    ///
    /// If `len` is 0 or greater than 64.
    pub fn from_index(len: usize, value: u64) -> Self {
        assert!((1..=64).contains(&len), "pattern length {len} out of range");
        let bits = (0..len).rev().map(|i| (value >> i) & 1 == 1).collect();
        Self { bits }
    }

    /// Every pattern of length `len`, in ascending binary order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Pattern> {
        assert!((1..64).contains(&len), "pattern length {len} out of range");
        (0..1u64 << len).map(move |v| Pattern::from_index(len, v))
    }

    /// Patterns of length `len` whose first bit is a head, ascending.
    pub fn canonical_of_length(len: usize) -> impl Iterator<Item = Pattern> {
        assert!((1..64).contains(&len), "pattern length {len} out of range");
        let base = 1u64 << (len - 1);
        (base..base << 1).map(move |v| Pattern::from_index(len, v))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, index: usize) -> bool {
        self.bits[index]
    }

    /// The pattern read as a binary number, first toss most significant.
    /// `None` past 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        (self.len() <= 64).then(|| {
            self.bits
                .iter()
                .fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
        })
    }

    /// Swaps heads and tails.
    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// True when the first bit is a head.
    pub fn is_canonical(&self) -> bool {
        self.bits[0]
    }

    /// `H`/`T` rendering.
    pub fn to_coin_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { 'H' } else { 'T' })
            .collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Parses a pattern; see [`Pattern::parse`].
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    Pattern::parse(text)
}

/// Swaps heads and tails; see [`Pattern::complement`].
pub fn complement(pattern: &Pattern) -> Pattern {
    pattern.complement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn parses_both_alphabets() {
        assert_eq!(p("10").bits(), &[true, false]);
        assert_eq!(p("HTH").bits(), &[true, false, true]);
        assert_eq!(p("hTh"), p("101"));
        assert_eq!(p("  0011\n"), Pattern::from_index(4, 0b0011));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Pattern::parse(""), Err(Error::EmptyPattern));
        assert_eq!(Pattern::parse("   "), Err(Error::EmptyPattern));
        assert_eq!(
            Pattern::parse("2x"),
            Err(Error::InvalidSymbol {
                index: 0,
                symbol: '2'
            })
        );
        assert_eq!(
            Pattern::parse("10H"),
            Err(Error::InvalidSymbol {
                index: 2,
                symbol: 'H'
            })
        );
        assert_eq!(
            Pattern::parse("HT1"),
            Err(Error::InvalidSymbol {
                index: 2,
                symbol: '1'
            })
        );
        assert_eq!(
            Pattern::parse("1 0"),
            Err(Error::InvalidSymbol {
                index: 1,
                symbol: ' '
            })
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&p("10")), p("01"));
        assert_eq!(complement(&p("111")), p("000"));
        assert_eq!(complement(&p("10101")), p("01010"));
    }

    #[test]
    fn canonical_enumeration() {
        let names: Vec<String> = Pattern::canonical_of_length(3)
            .map(|q| q.to_string())
            .collect();
        assert_eq!(names, ["100", "101", "110", "111"]);
        assert_eq!(Pattern::all_of_length(4).count(), 16);
        assert_eq!(p("HHT").to_coin_string(), "HHT");
        assert_eq!(p("110").to_index(), Some(6));
    }

    fn arb_pattern() -> impl Strategy<Value = Pattern> {
        prop::collection::vec(any::<bool>(), 1..40).prop_map(|b| Pattern::from_bits(b).unwrap())
    }

    proptest! {
        #[test]
        fn text_forms_round_trip(q in arb_pattern()) {
            prop_assert_eq!(Pattern::parse(&q.to_string()).unwrap(), q.clone());
            prop_assert_eq!(Pattern::parse(&q.to_coin_string()).unwrap(), q.clone());
            prop_assert_eq!(Pattern::parse(&q.to_coin_string().to_lowercase()).unwrap(), q);
        }

        #[test]
        fn complement_is_an_involution(q in arb_pattern()) {
            prop_assert_eq!(q.complement().complement(), q.clone());
            prop_assert_eq!(q.complement().len(), q.len());
        }
    }
}
