//! Longest-prefix automaton for a single pattern.

use crate::pattern::Pattern;

/// Deterministic automaton over toss outcomes whose state is the length of
/// the longest pattern prefix that is a suffix of the stream read so far.
///
/// States are `0..=m`; state `m` means the pattern has just completed and is
/// absorbing, so transitions are only stored for states `0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceAutomaton {
    pattern: Pattern,
    transitions: Vec<[usize; 2]>,
}

impl AvoidanceAutomaton {
    pub fn new(pattern: &Pattern) -> Self {
        let bits = pattern.bits();
        let m = bits.len();

        // borders[i]: longest proper border of the prefix of length i + 1
        let mut borders = vec![0usize; m];
        let mut k = 0;
        for i in 1..m {
            while k > 0 && bits[i] != bits[k] {
                k = borders[k - 1];
            }
            if bits[i] == bits[k] {
                k += 1;
            }
            borders[i] = k;
        }

        let mut transitions: Vec<[usize; 2]> = Vec::with_capacity(m);
        for state in 0..m {
            let mut row = [0usize; 2];
            for (b, slot) in row.iter_mut().enumerate() {
                let bit = b == 1;
                *slot = if bits[state] == bit {
                    state + 1
                } else if state == 0 {
                    0
                } else {
                    transitions[borders[state - 1]][b]
                };
            }
            transitions.push(row);
        }

        Self {
            pattern: pattern.clone(),
            transitions,
        }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// Number of states, `m + 1`.
    pub fn state_count(&self) -> usize {
        self.transitions.len() + 1
    }

    /// The absorbing state `m`.
    pub fn accepting(&self) -> usize {
        self.transitions.len()
    }

    /// Successor of a non-accepting `state` on `bit`.
    pub fn next(&self, state: usize, bit: bool) -> usize {
        self.transitions[state][usize::from(bit)]
    }

    /// Rows `[on tail, on head]` for states `0..m`.
    pub fn transitions(&self) -> &[[usize; 2]] {
        &self.transitions
    }
}

/// Builds the automaton for `pattern`.
pub fn build_automaton(pattern: &Pattern) -> AvoidanceAutomaton {
    AvoidanceAutomaton::new(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn automaton(s: &str) -> AvoidanceAutomaton {
        build_automaton(&s.parse().unwrap())
    }

    /// Longest prefix of `pattern` that is a suffix of `stream`, by direct
    /// comparison of every candidate length.
    fn longest_prefix_suffix(pattern: &[bool], stream: &[bool]) -> usize {
        (0..=pattern.len().min(stream.len()))
            .rev()
            .find(|&l| pattern[..l] == stream[stream.len() - l..])
            .unwrap()
    }

    #[test]
    fn small_examples() {
        let a = automaton("11");
        assert_eq!(a.next(1, false), 0);
        assert_eq!(a.next(1, true), 2);
        let a = automaton("10");
        assert_eq!(a.next(1, true), 1);
        assert_eq!(a.next(1, false), 2);
        // "1010" then a tail leaves "10100", which ends in no prefix of 10101.
        let a = automaton("10101");
        assert_eq!(a.next(4, false), 0);
        assert_eq!(a.next(3, true), 1);
        assert_eq!(a.next(4, true), 5);
        assert_eq!(a.state_count(), 6);
        assert_eq!(a.accepting(), 5);
    }

    #[test]
    fn matches_brute_force_for_all_short_patterns() {
        for len in 1..=9 {
            for p in Pattern::all_of_length(len) {
                let a = build_automaton(&p);
                assert_eq!(a.transitions().len(), len);
                for state in 0..len {
                    assert_eq!(a.next(state, p.bit(state)), state + 1);
                    for bit in [false, true] {
                        let mut stream = p.bits()[..state].to_vec();
                        stream.push(bit);
                        assert_eq!(
                            a.next(state, bit),
                            longest_prefix_suffix(p.bits(), &stream),
                            "{p} state {state} bit {bit}"
                        );
                    }
                }
                assert_eq!(a, build_automaton(&p));
            }
        }
    }
}
