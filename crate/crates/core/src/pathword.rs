//! Words over {U, D} read as lattice paths starting at height 0.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn delta(self) -> i32 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// A path word. Ordering is lexicographic with `U < D`, which lists higher
/// paths first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PathWord {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_dyck: bool,
    pub is_ballot: bool,
    /// Type-D sign: `height(L) = L + 2*eps (mod 4)`.
    pub epsilon: u8,
}

/// A matched U-D pair of a Dyck word, 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chord {
    pub open: usize,
    pub close: usize,
    pub length: usize,
}

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord { steps }
    }

    pub fn empty() -> Self {
        PathWord { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step at 1-based position `i`.
    pub fn step(&self, i: usize) -> Step {
        self.steps[i - 1]
    }

    /// `heights()[i]` is the height after `i` steps.
    pub fn heights(&self) -> Vec<i32> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut cur = 0;
        for s in &self.steps {
            cur += s.delta();
            h.push(cur);
        }
        h
    }

    pub fn end_height(&self) -> i32 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn epsilon(&self) -> u8 {
        let d = self.end_height() - self.len() as i32;
        if d.rem_euclid(4) == 0 {
            0
        } else {
            1
        }
    }

    pub fn classify(&self) -> Classification {
        let hs = self.heights();
        let nonneg = hs.iter().all(|&h| h >= 0);
        Classification {
            is_dyck: nonneg && self.end_height() == 0,
            is_ballot: nonneg,
            epsilon: self.epsilon(),
        }
    }

    pub fn is_dyck(&self) -> bool {
        self.classify().is_dyck
    }

    /// Pointwise height comparison: `self` weakly above `lower`.
    pub fn is_above(&self, lower: &PathWord) -> Result<bool> {
        if self.len() != lower.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: lower.len(),
            });
        }
        Ok(self
            .heights()
            .iter()
            .zip(lower.heights())
            .all(|(a, b)| *a >= b))
    }

    pub fn truncate_last(&self) -> Result<PathWord> {
        if self.steps.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(PathWord::new(self.steps[..self.steps.len() - 1].to_vec()))
    }

    pub fn concat(&self, other: &PathWord) -> PathWord {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        PathWord { steps }
    }

    /// `D^n U^m`.
    pub fn downs_then_ups(n: usize, m: usize) -> PathWord {
        let mut steps = vec![Step::D; n];
        steps.extend(std::iter::repeat_n(Step::U, m));
        PathWord { steps }
    }

    pub fn chords(&self) -> Result<Vec<Chord>> {
        if !self.is_dyck() {
            return Err(Error::NotDyck(self.to_string()));
        }
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => stack.push(i + 1),
                Step::D => pairs.push((stack.pop().expect("dyck"), i + 1)),
            }
        }
        let mut out: Vec<Chord> = pairs
            .iter()
            .map(|&(o, c)| Chord {
                open: o,
                close: c,
                length: 1 + pairs.iter().filter(|&&(a, _)| o < a && a < c).count(),
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Length of the shortest nonempty Dyck prefix, if the word starts with one.
    pub fn prime_dyck_prefix_len(&self) -> Option<usize> {
        let mut h = 0;
        for (i, s) in self.steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return None;
            }
            if h == 0 {
                return Some(i + 1);
            }
        }
        None
    }

    pub fn slice(&self, from: usize, to: usize) -> PathWord {
        PathWord::new(self.steps[from..to].to_vec())
    }
}

/// All `2^n` words of length `n` in basis order (U before D).
pub fn all_words(n: usize) -> Vec<PathWord> {
    (0..n)
        .map(|_| [Step::U, Step::D])
        .multi_cartesian_product()
        .map(PathWord::new)
        .collect()
}

/// Type-D basis of length `n` and sign `eps`, highest path first.
pub fn enumerate_type_d(n: usize, eps: u8) -> Vec<PathWord> {
    all_words(n)
        .into_iter()
        .filter(|w| w.epsilon() == eps)
        .collect()
}

/// Dyck words of length `2n`, basis order.
pub fn dyck_words(n: usize) -> Vec<PathWord> {
    all_words(2 * n).into_iter().filter(|w| w.is_dyck()).collect()
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathWord({self})")
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(PathWord::new)
    }
}

impl Serialize for PathWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PathWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = w("UUDD").classify();
        assert!(c.is_dyck && c.is_ballot);
        assert_eq!(c.epsilon, 0);
        assert_eq!(w("UUUU").epsilon(), 0);
        assert_eq!(w("DDDU").epsilon(), 1);
        assert!(!w("DU").classify().is_ballot);
        assert!(w("UUD").classify().is_ballot);
    }

    #[test]
    fn above() {
        assert!(w("UUDD").is_above(&w("UDUD")).unwrap());
        assert!(!w("UDUD").is_above(&w("UUDD")).unwrap());
        assert!(w("UUUU").is_above(&w("DDUU")).unwrap());
        assert!(matches!(
            w("UU").is_above(&w("U")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn basis_order() {
        let got: Vec<String> = enumerate_type_d(4, 0).iter().map(|w| w.to_string()).collect();
        assert_eq!(
            got,
            ["UUUU", "UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU", "DDDD"]
        );
        let odd = enumerate_type_d(4, 1);
        assert_eq!(odd.len(), 8);
        assert!(odd.iter().all(|w| w.end_height().abs() == 2));
        assert_eq!(enumerate_type_d(1, 0), vec![w("U")]);
    }

    #[test]
    fn truncation() {
        assert_eq!(w("DDDD").truncate_last().unwrap(), w("DDD"));
        assert_eq!(w("DUUDUU").truncate_last().unwrap(), w("DUUDU"));
        assert_eq!(w("U").truncate_last().unwrap(), PathWord::empty());
        assert_eq!(PathWord::empty().truncate_last(), Err(Error::EmptyWord));
    }

    #[test]
    fn chord_examples() {
        let c = |o, cl, l| Chord { open: o, close: cl, length: l };
        assert_eq!(w("UDUD").chords().unwrap(), vec![c(1, 2, 1), c(3, 4, 1)]);
        assert_eq!(w("UUDD").chords().unwrap(), vec![c(1, 4, 2), c(2, 3, 1)]);
        assert!(PathWord::empty().chords().unwrap().is_empty());
        assert!(matches!(w("DU").chords(), Err(Error::NotDyck(_))));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!("UXD".parse::<PathWord>(), Err(Error::InvalidWord(_))));
        assert_eq!("".parse::<PathWord>().unwrap(), PathWord::empty());
    }

    #[test]
    fn word_lists() {
        assert_eq!(all_words(0), vec![PathWord::empty()]);
        assert_eq!(all_words(3).len(), 8);
        assert_eq!(dyck_words(3).len(), 5);
        assert_eq!(w("UDUUDD").prime_dyck_prefix_len(), Some(2));
        assert_eq!(w("DU").prime_dyck_prefix_len(), None);
    }
}
