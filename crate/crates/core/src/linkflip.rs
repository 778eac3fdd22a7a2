//! Arc pairings of words, UD/UU flips with their weights, and link patterns.
//!
//! Positions are 1-based. In a link pattern the prepended U's sit at
//! positions 0, -1, -2, ... so letters of the original word keep their index.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pathword::{PathWord, Step};
use crate::qpoly::PolyQ;

/// An arc between positions `i < j`. Simple arcs join a U to a D; dashed arcs
/// join two U's (or, in a link pattern, the arc of a final D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub i: i32,
    pub j: i32,
    pub dashed: bool,
}

impl Arc {
    pub fn size(&self) -> usize {
        ((self.j - self.i + 1) / 2) as usize
    }

    /// `other` lies strictly inside `self`.
    pub fn encloses(&self, other: &Arc) -> bool {
        self.i < other.i && other.j < self.j
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcSet {
    pub simple: Vec<Arc>,
    pub dashed: Vec<Arc>,
    pub unpaired_d: Vec<i32>,
    pub unpaired_u: Vec<i32>,
}

impl ArcSet {
    /// Simple arcs, then dashed arcs, each sorted by left end.
    pub fn arcs(&self) -> Vec<Arc> {
        self.simple.iter().chain(&self.dashed).copied().collect()
    }
}

fn pair_indexed(letters: &[(i32, Step)]) -> ArcSet {
    let mut open = Vec::new();
    let mut simple = Vec::new();
    let mut unpaired_d = Vec::new();
    for &(i, s) in letters {
        match s {
            Step::U => open.push(i),
            Step::D => match open.pop() {
                Some(u) => simple.push(Arc { i: u, j: i, dashed: false }),
                None => unpaired_d.push(i),
            },
        }
    }
    let mut dashed = Vec::new();
    while open.len() >= 2 {
        let j = open.pop().unwrap();
        let i = open.pop().unwrap();
        dashed.push(Arc { i, j, dashed: true });
    }
    simple.sort();
    dashed.sort();
    ArcSet {
        simple,
        dashed,
        unpaired_d,
        unpaired_u: open,
    }
}

/// Bracket-match U/D into simple arcs, then pair leftover U's from the right
/// into dashed arcs. At most one U stays unpaired.
pub fn pair_arcs(w: &PathWord) -> ArcSet {
    let letters: Vec<(i32, Step)> = w
        .steps()
        .iter()
        .enumerate()
        .map(|(k, &s)| (k as i32 + 1, s))
        .collect();
    pair_indexed(&letters)
}

fn check_subset(w: &PathWord, s: &[Arc]) -> Result<()> {
    let arcs: HashSet<Arc> = pair_arcs(w).arcs().into_iter().collect();
    for a in s {
        if !arcs.contains(a) {
            return Err(Error::ArcNotPresent(a.i, a.j));
        }
    }
    Ok(())
}

/// Swap the letters of each simple arc in `s`; turn both U's of each dashed
/// arc into D's.
pub fn flip(w: &PathWord, s: &[Arc]) -> Result<PathWord> {
    check_subset(w, s)?;
    Ok(flip_unchecked(w, s))
}

fn flip_unchecked(w: &PathWord, s: &[Arc]) -> PathWord {
    let mut steps = w.steps().to_vec();
    for a in s {
        let (i, j) = (a.i as usize - 1, a.j as usize - 1);
        if a.dashed {
            steps[i] = Step::D;
            steps[j] = Step::D;
        } else {
            steps[i] = Step::D;
            steps[j] = Step::U;
        }
    }
    PathWord::new(steps)
}

fn weight_i_unchecked(len: usize, s: &[Arc]) -> PolyQ {
    let mut exp = 0;
    for a in s {
        exp += if a.dashed {
            // r counts the right U's position from the right end of the word.
            let r = len - a.j as usize + 1;
            a.size() + r - 1
        } else {
            a.size()
        };
    }
    let sign = if s.len().is_multiple_of(2) { 1 } else { -1 };
    PolyQ::monomial(sign, exp)
}

fn weight_ii_unchecked(s: &[Arc]) -> PolyQ {
    let sign = if s.len().is_multiple_of(2) { 1 } else { -1 };
    PolyQ::monomial(sign, s.len())
}

/// Product of `-q^m` over simple arcs and `-q^{m+r-1}` over dashed arcs.
pub fn weight_i(w: &PathWord, s: &[Arc]) -> Result<PolyQ> {
    check_subset(w, s)?;
    Ok(weight_i_unchecked(w.len(), s))
}

/// Product of `-q` over the arcs in `s`.
pub fn weight_ii(w: &PathWord, s: &[Arc]) -> Result<PolyQ> {
    check_subset(w, s)?;
    Ok(weight_ii_unchecked(s))
}

/// One downward flip of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipOutcome {
    pub arcs: Vec<Arc>,
    pub word: PathWord,
    pub weight_i: PolyQ,
    pub weight_ii: PolyQ,
}

/// Every arc subset of `w` with its flipped word and weights, subsets in
/// binary-counter order.
pub fn all_flips(w: &PathWord) -> Vec<FlipOutcome> {
    let arcs = pair_arcs(w).arcs();
    let k = arcs.len();
    (0u64..1 << k)
        .map(|mask| {
            let s: Vec<Arc> = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| arcs[b])
                .collect();
            FlipOutcome {
                word: flip_unchecked(w, &s),
                weight_i: weight_i_unchecked(w.len(), &s),
                weight_ii: weight_ii_unchecked(&s),
                arcs: s,
            }
        })
        .collect()
}

/// A dashed arc and the plain outer arcs its arrows run through, right to left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowChain {
    pub from: Arc,
    pub chain: Vec<Arc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkPattern {
    pub word: PathWord,
    pub prepended: usize,
    /// All arcs of the extended word, sorted by left end.
    pub arcs: Vec<Arc>,
    pub outer: Vec<Arc>,
    pub arrow_chains: Vec<ArrowChain>,
}

impl LinkPattern {
    /// Letter at position `i` of the extended word.
    pub fn letter(&self, i: i32) -> Step {
        if i <= 0 {
            Step::U
        } else {
            self.word.step(i as usize)
        }
    }

    /// Positions of the extended word, left to right.
    pub fn positions(&self) -> std::ops::RangeInclusive<i32> {
        (1 - self.prepended as i32)..=(self.word.len() as i32)
    }

    pub fn arc_at(&self, pos: i32) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.i == pos || a.j == pos)
    }

    /// Arrows as (tail, head) pairs.
    pub fn arrows(&self) -> Vec<(Arc, Arc)> {
        let mut out = Vec::new();
        for c in &self.arrow_chains {
            let mut prev = c.from;
            for &a in &c.chain {
                out.push((prev, a));
                prev = a;
            }
        }
        out
    }
}

pub fn link_pattern(w: &PathWord) -> LinkPattern {
    let first = pair_arcs(w);
    let prepended = first.unpaired_d.len() + first.unpaired_u.len();
    let mut letters: Vec<(i32, Step)> = (0..prepended)
        .map(|k| (k as i32 + 1 - prepended as i32, Step::U))
        .collect();
    letters.extend(
        w.steps()
            .iter()
            .enumerate()
            .map(|(k, &s)| (k as i32 + 1, s)),
    );
    let ext = pair_indexed(&letters);
    debug_assert!(ext.unpaired_d.is_empty() && ext.unpaired_u.is_empty());

    let last = w.len() as i32;
    let ends_with_d = w.steps().last() == Some(&Step::D);
    let mut arcs: Vec<Arc> = ext
        .arcs()
        .into_iter()
        .map(|mut a| {
            if ends_with_d && a.j == last {
                a.dashed = true;
            }
            a
        })
        .collect();
    arcs.sort();

    let outer: Vec<Arc> = arcs
        .iter()
        .copied()
        .filter(|a| !arcs.iter().any(|b| b.encloses(a)))
        .collect();

    let mut arrow_chains = Vec::new();
    for a0 in arcs.iter().filter(|a| a.dashed) {
        let bound = arcs
            .iter()
            .filter(|d| d.dashed && d.j < a0.i)
            .map(|d| d.j)
            .max()
            .unwrap_or(i32::MIN);
        let mut chain: Vec<Arc> = outer
            .iter()
            .copied()
            .filter(|a| !a.dashed && a.j < a0.i && a.i > bound)
            .collect();
        chain.reverse();
        arrow_chains.push(ArrowChain { from: *a0, chain });
    }

    LinkPattern {
        word: w.clone(),
        prepended,
        arcs,
        outer,
        arrow_chains,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }
    fn s(i: i32, j: i32) -> Arc {
        Arc { i, j, dashed: false }
    }
    fn d(i: i32, j: i32) -> Arc {
        Arc { i, j, dashed: true }
    }

    #[test]
    fn pairing_examples() {
        let a = pair_arcs(&w("UUUU"));
        assert!(a.simple.is_empty());
        assert_eq!(a.dashed, vec![d(1, 2), d(3, 4)]);

        let a = pair_arcs(&w("UUDD"));
        assert_eq!(a.simple, vec![s(1, 4), s(2, 3)]);

        let a = pair_arcs(&w("DUUDUU"));
        assert_eq!(a.simple, vec![s(3, 4)]);
        assert_eq!(a.dashed, vec![d(5, 6)]);
        assert_eq!(a.unpaired_d, vec![1]);
        assert_eq!(a.unpaired_u, vec![2]);
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(&w("UUUU"), &[d(3, 4)]).unwrap(), w("UUDD"));
        assert_eq!(flip(&w("UUDD"), &[s(1, 4)]).unwrap(), w("DUDU"));
        assert_eq!(flip(&w("UDUD"), &[]).unwrap(), w("UDUD"));
        assert_eq!(
            flip(&w("UUDD"), &[s(1, 2)]),
            Err(Error::ArcNotPresent(1, 2))
        );
    }

    #[test]
    fn weight_examples() {
        let mq = |k| PolyQ::monomial(-1, k);
        assert_eq!(weight_i(&w("UUUU"), &[d(3, 4)]).unwrap(), mq(1));
        assert_eq!(weight_i(&w("UUUU"), &[d(1, 2)]).unwrap(), mq(3));
        let both = [s(1, 4), s(2, 3)];
        assert_eq!(weight_i(&w("UUDD"), &both).unwrap(), PolyQ::monomial(1, 3));
        assert_eq!(weight_ii(&w("UUDD"), &both).unwrap(), PolyQ::monomial(1, 2));
        assert_eq!(weight_i(&w("UD"), &[]).unwrap(), PolyQ::one());
    }

    #[test]
    fn link_pattern_ddudud() {
        let lp = link_pattern(&w("DDUDUUD"));
        assert_eq!(lp.prepended, 3);
        assert_eq!(lp.arcs, vec![d(-2, 5), s(-1, 2), s(0, 1), s(3, 4), d(6, 7)]);
        assert!(lp.outer.contains(&d(-2, 5)) && lp.outer.contains(&d(6, 7)));
    }

    #[test]
    fn link_pattern_duuduu() {
        let lp = link_pattern(&w("DUUDUU"));
        assert_eq!(lp.prepended, 2);
        assert_eq!(lp.arcs, vec![d(-1, 2), s(0, 1), s(3, 4), d(5, 6)]);
        let chain = lp
            .arrow_chains
            .iter()
            .find(|c| c.from == d(5, 6))
            .unwrap();
        assert_eq!(chain.chain, vec![s(3, 4)]);
        assert_eq!(lp.arrows(), vec![(d(5, 6), s(3, 4))]);
    }

    #[test]
    fn link_pattern_ud() {
        let lp = link_pattern(&w("UD"));
        assert_eq!(lp.prepended, 0);
        // The final D's arc is dashed even here.
        assert_eq!(lp.arcs, vec![d(1, 2)]);
    }

    #[test]
    fn all_flips_lists_every_subset() {
        let f = all_flips(&w("UUDD"));
        assert_eq!(f.len(), 4);
        assert_eq!(f[0].word, w("UUDD"));
        assert!(f.iter().any(|o| o.word == w("DDUU") && o.weight_ii == PolyQ::monomial(1, 2)));
    }
}
