//! Fibonacci numbers and the closed-form first-termination counts known for
//! the patterns `01`, `11`, `100` and `110`.

use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::scalar::{self, Count};

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci<C: Count>(n: usize) -> Result<C> {
    if n == 0 {
        return Ok(C::zero());
    }
    let (mut a, mut b) = (C::zero(), C::one());
    for _ in 1..n {
        let next = scalar::add(&a, &b, "a Fibonacci number")?;
        a = std::mem::replace(&mut b, next);
    }
    Ok(b)
}

/// Patterns whose first-termination counts have a simple closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormFamily {
    /// `01`: `tau_n = n - 1`.
    TailHead,
    /// `11`: `tau_n = F_{n-1}`.
    HeadHead,
    /// `100`: `tau_n = F_n - 1`.
    HeadTailTail,
    /// `110`: `tau_n = F_n - 1`.
    HeadHeadTail,
}

impl ClosedFormFamily {
    pub const ALL: [ClosedFormFamily; 4] = [
        Self::TailHead,
        Self::HeadHead,
        Self::HeadTailTail,
        Self::HeadHeadTail,
    ];

    pub fn pattern(self) -> Pattern {
        let text = match self {
            Self::TailHead => "01",
            Self::HeadHead => "11",
            Self::HeadTailTail => "100",
            Self::HeadHeadTail => "110",
        };
        Pattern::parse(text).expect("literal patterns are valid")
    }

    pub fn from_pattern(pattern: &Pattern) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.pattern() == *pattern)
    }
}

impl fmt::Display for ClosedFormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.pattern(), f)
    }
}

/// `tau_n` for one of the closed-form families, without running the engine.
pub fn closed_form_tau<C: Count>(family: ClosedFormFamily, n: usize) -> Result<C> {
    let length = family.pattern().len();
    if n < length {
        return Err(Error::InvalidIndex { index: n, length });
    }
    match family {
        ClosedFormFamily::TailHead => scalar::from_u64(n as u64 - 1),
        ClosedFormFamily::HeadHead => fibonacci(n - 1),
        ClosedFormFamily::HeadTailTail | ClosedFormFamily::HeadHeadTail => {
            Ok(fibonacci::<C>(n)? - C::one())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci::<u64>(0), Ok(0));
        assert_eq!(fibonacci::<u64>(1), Ok(1));
        assert_eq!(fibonacci::<u64>(6), Ok(8));
        assert_eq!(fibonacci::<u64>(93), Ok(12_200_160_415_121_876_738));
        assert!(fibonacci::<u64>(94).is_err());
        assert_eq!(
            fibonacci::<BigUint>(100).unwrap().to_string(),
            "354224848179261915075"
        );
    }

    #[test]
    fn iterating_the_recurrence_from_the_seeds() {
        let mut seq = vec![0u64, 1];
        for i in 2..=10 {
            seq.push(seq[i - 1] + seq[i - 2]);
        }
        assert_eq!(fibonacci::<u64>(10), Ok(seq[10]));
        assert_eq!(seq[10], 55);
    }

    #[test]
    fn closed_form_examples() {
        use ClosedFormFamily::*;
        assert_eq!(closed_form_tau::<u64>(TailHead, 5), Ok(4));
        assert_eq!(closed_form_tau::<u64>(HeadHead, 6), Ok(5));
        assert_eq!(closed_form_tau::<u64>(HeadTailTail, 6), Ok(7));
        assert_eq!(closed_form_tau::<u64>(HeadHeadTail, 3), Ok(1));
        assert_eq!(
            closed_form_tau::<u64>(HeadTailTail, 2),
            Err(Error::InvalidIndex {
                index: 2,
                length: 3
            })
        );
        assert_eq!(
            ClosedFormFamily::from_pattern(&"110".parse().unwrap()),
            Some(HeadHeadTail)
        );
        assert_eq!(
            ClosedFormFamily::from_pattern(&"101".parse().unwrap()),
            None
        );
    }
}
