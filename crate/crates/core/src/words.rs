//! Words over positive-integer alphabets and consecutive pattern matching.
//!
//! A [`Word`] is a finite sequence of letters `>= 1`. A [`Pattern`] is a
//! reduced word over `{1, 2}` of length at least two; a word has a match of
//! the pattern at position `p` when the length-`k` window starting at `p`
//! reduces to the pattern. Positions are 1-based throughout.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive-integer letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(&zero) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::ZeroLetter(zero));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `letter` repeated `times` times.
    pub fn repeat(letter: u32, times: usize) -> Self {
        assert!(letter >= 1, "letters are positive");
        Word(vec![letter; times])
    }

    /// The permutation `1 2 ... n`.
    pub fn identity(n: u32) -> Self {
        Word((1..=n).collect())
    }

    /// Callers guarantee every letter is positive.
    pub(crate) fn from_vec(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word(letters)
    }

    /// Parses the compact digit form used for single-digit alphabets, e.g. `14213243`.
    pub fn parse_compact(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut letters = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) if d >= 1 => letters.push(d),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        column: idx + 1,
                        message: format!("expected a digit 1-9, found {ch:?}"),
                    })
                }
            }
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `A(w)`, the set of letters occurring in the word.
    pub fn alphabet(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Replaces the i-th smallest distinct letter by `i` everywhere.
    pub fn reduce(&self) -> Word {
        let ranks: BTreeMap<u32, u32> = self.alphabet().into_iter().zip(1..).collect();
        Word(self.0.iter().map(|l| ranks[l]).collect())
    }

    /// The subsequence of letters belonging to `keep`, in order.
    pub fn restrict(&self, keep: &BTreeSet<u32>) -> Word {
        Word(
            self.0
                .iter()
                .copied()
                .filter(|l| keep.contains(l))
                .collect(),
        )
    }

    pub fn restrict_pair(&self, x: u32, y: u32) -> Word {
        Word(
            self.0
                .iter()
                .copied()
                .filter(|&l| l == x || l == y)
                .collect(),
        )
    }

    /// Keeps only the leftmost occurrence of each letter.
    pub fn initial_permutation(&self) -> Word {
        let mut seen = BTreeSet::new();
        Word(self.0.iter().copied().filter(|&l| seen.insert(l)).collect())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Maps each letter `x` to `n + 1 - x` for the declared alphabet size `n`.
    pub fn complement(&self, n: u32) -> Result<Word> {
        if let Some(&letter) = self.0.iter().find(|&&l| l > n) {
            return Err(Error::AlphabetTooSmall { letter, n });
        }
        Ok(Word(self.0.iter().map(|&l| n + 1 - l).collect()))
    }

    /// Relabels letters through `map`, where `map[x - 1]` is the new label of `x`.
    pub fn relabel(&self, map: &[u32]) -> Word {
        Word(self.0.iter().map(|&l| map[l as usize - 1]).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Space-separated decimal letters, e.g. `1 3 1 2 3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let column = token.as_ptr() as usize - s.as_ptr() as usize + 1;
            match token.parse::<u32>() {
                Ok(l) if l >= 1 => letters.push(l),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        column,
                        message: format!("expected a positive integer letter, found {token:?}"),
                    })
                }
            }
        }
        Ok(Word(letters))
    }
}

impl From<Pattern> for Word {
    fn from(p: Pattern) -> Self {
        Word(p.0)
    }
}

/// A reduced word over `{1, 2}` of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let text: String = letters.iter().map(|l| l.to_string()).collect();
        let bad = |reason: &str| Error::BadPattern {
            text: text.clone(),
            reason: reason.to_string(),
        };
        if letters.len() < 2 {
            return Err(bad("length must be at least 2"));
        }
        if letters.iter().any(|&l| l != 1 && l != 2) {
            return Err(bad("letters must be 1 or 2"));
        }
        if !letters.contains(&1) {
            return Err(bad("a pattern containing 2 must also contain 1"));
        }
        Ok(Pattern(letters))
    }

    /// `1^ones 2^twos`.
    pub fn blocks(ones: usize, twos: usize) -> Result<Self> {
        let mut letters = vec![1; ones];
        letters.extend(std::iter::repeat_n(2, twos));
        Pattern::new(letters)
    }

    /// Every valid pattern of length `k`, in lexicographic order.
    pub fn all_of_length(k: usize) -> Vec<Pattern> {
        (0..1u64 << k)
            .filter_map(|bits| {
                let letters = (0..k)
                    .map(|pos| if bits >> (k - 1 - pos) & 1 == 1 { 2 } else { 1 })
                    .collect();
                Pattern::new(letters).ok()
            })
            .collect()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reverse(&self) -> Pattern {
        Pattern(self.0.iter().rev().copied().collect())
    }

    /// Complement relative to the pattern's own largest letter, so `1^k` maps
    /// to itself and any pattern containing a 2 swaps its letters.
    pub fn complement(&self) -> Pattern {
        let top = self.0.iter().copied().max().unwrap_or(1);
        Pattern(self.0.iter().map(|&l| top + 1 - l).collect())
    }

    /// `u[i,j]`: each 1 becomes `i`, each 2 becomes `j`.
    pub fn substitute(&self, i: u32, j: u32) -> Result<Word> {
        if i == 0 || i >= j {
            return Err(Error::BadEdgeOrder { i, j });
        }
        Ok(Word(
            self.0.iter().map(|&l| if l == 1 { i } else { j }).collect(),
        ))
    }

    /// Whether `window` (of exactly the pattern's length) reduces to the pattern.
    ///
    /// Over `{1, 2}` this holds iff all 1-positions carry one letter, all
    /// 2-positions carry one letter, and the former is smaller.
    #[inline]
    pub fn matches_window(&self, window: &[u32]) -> bool {
        debug_assert_eq!(window.len(), self.0.len());
        let mut low = None;
        let mut high = None;
        for (&p, &l) in self.0.iter().zip(window) {
            let slot = if p == 1 { &mut low } else { &mut high };
            match *slot {
                None => *slot = Some(l),
                Some(seen) if seen != l => return false,
                Some(_) => {}
            }
        }
        match (low, high) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }

    /// 1-based position of the leftmost match in `letters`.
    pub fn first_match(&self, letters: &[u32]) -> Option<usize> {
        letters
            .windows(self.0.len())
            .position(|w| self.matches_window(w))
            .map(|p| p + 1)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Contiguous digits over `{1, 2}`, e.g. `112`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = s
            .chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::BadPattern {
                    text: s.to_string(),
                    reason: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(letters)
    }
}

/// Start positions of every match, ascending and 1-based; overlaps included.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchReport {
    pub positions: Vec<usize>,
}

impl MatchReport {
    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

impl fmt::Display for MatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(" "))
    }
}

pub fn find_matches(w: &Word, u: &Pattern) -> MatchReport {
    let positions = w
        .letters()
        .windows(u.len())
        .enumerate()
        .filter(|(_, win)| u.matches_window(win))
        .map(|(p, _)| p + 1)
        .collect();
    MatchReport { positions }
}

pub fn has_match(w: &Word, u: &Pattern) -> bool {
    u.first_match(w.letters()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse_compact(s).unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    /// Matching straight from the definition: reduce each window and compare.
    fn matches_by_reduction(word: &Word, u: &Pattern) -> Vec<usize> {
        let k = u.len();
        if word.len() < k {
            return vec![];
        }
        (0..=word.len() - k)
            .filter(|&i| {
                Word::from_vec(word.letters()[i..i + k].to_vec())
                    .reduce()
                    .letters()
                    == u.letters()
            })
            .map(|i| i + 1)
            .collect()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("247429").reduce(), w("123214"));
        assert_eq!(w("112").reduce(), w("112"));
        assert_eq!(w("22").reduce(), w("11"));
        assert_eq!(Word::empty().reduce(), Word::empty());
    }

    #[test]
    fn restrict_examples() {
        let word = w("4513113458");
        assert_eq!(word.restrict(&[1, 3, 5].into()), w("5131135"));
        assert_eq!(word.restrict(&word.alphabet()), word);
        assert!(word.restrict(&BTreeSet::new()).is_empty());
        assert_eq!(word.restrict_pair(1, 5), word.restrict(&[1, 5].into()));
    }

    #[test]
    fn initial_permutation_examples() {
        assert_eq!(w("31443266275887").initial_permutation(), w("31426758"));
        assert_eq!(w("123").initial_permutation(), w("123"));
        assert_eq!(w("1111").initial_permutation(), w("1"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("123").reverse(), w("321"));
        assert_eq!(w("11").reverse(), w("11"));
        assert_eq!(w("31426758").reverse(), w("85762413"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w("14213243").complement(4).unwrap(), w("41342312"));
        assert_eq!(w("12").complement(2).unwrap(), w("21"));
        assert_eq!(w("1").complement(5).unwrap(), w("5"));
        assert_eq!(
            w("153").complement(4),
            Err(Error::AlphabetTooSmall { letter: 5, n: 4 })
        );
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p("1121").substitute(3, 5).unwrap(), w("3353"));
        assert_eq!(p("12").substitute(1, 2).unwrap(), w("12"));
        assert_eq!(p("1122").substitute(1, 2).unwrap(), w("1122"));
        assert_eq!(
            p("12").substitute(2, 2),
            Err(Error::BadEdgeOrder { i: 2, j: 2 })
        );
        assert!(p("12").substitute(3, 1).is_err());
    }

    #[test]
    fn find_matches_examples() {
        assert_eq!(find_matches(&w("112212"), &p("112")).positions, vec![1]);
        assert_eq!(find_matches(&w("1212"), &p("12")).positions, vec![1, 3]);
        assert!(find_matches(&w("14213243"), &p("11")).is_empty());
        assert!(find_matches(&Word::empty(), &p("11")).is_empty());
    }

    #[test]
    fn has_match_examples() {
        assert!(has_match(&w("1122"), &p("1122")));
        assert!(!has_match(&w("12"), &p("112")));
        assert!(has_match(&w("1133"), &p("11")));
    }

    #[test]
    fn pattern_validation() {
        assert!("1".parse::<Pattern>().is_err());
        assert!("22".parse::<Pattern>().is_err());
        assert!("123".parse::<Pattern>().is_err());
        assert!("".parse::<Pattern>().is_err());
        assert_eq!(p("211").to_string(), "211");
        assert_eq!(p("211").complement(), p("122"));
        assert_eq!(p("111").complement(), p("111"));
        assert_eq!(p("112").reverse(), p("211"));
    }

    #[test]
    fn pattern_counts_by_length() {
        // 2^k words over {1,2}, minus the all-2 word
        assert_eq!(Pattern::all_of_length(3).len(), 7);
        assert_eq!(Pattern::all_of_length(4).len(), 15);
        assert_eq!(Pattern::all_of_length(2), vec![p("11"), p("12"), p("21")]);
    }

    #[test]
    fn word_text_forms() {
        let word: Word = "1 3 1 2 3".parse().unwrap();
        assert_eq!(word.to_string(), "1 3 1 2 3");
        assert_eq!("  ".parse::<Word>().unwrap(), Word::empty());
        assert!(matches!(
            "1 0 2".parse::<Word>(),
            Err(Error::Parse { column: 3, .. })
        ));
        assert!("1 x".parse::<Word>().is_err());
        assert!(Word::parse_compact("1203").is_err());
        assert!(Word::new(vec![1, 0]).is_err());
    }

    fn word_strategy(max_letter: u32) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=max_letter, 0..24).prop_map(Word::from_vec)
    }

    fn pattern_strategy() -> impl Strategy<Value = Pattern> {
        prop::collection::vec(1u32..=2, 2..6).prop_filter_map("unreduced", |v| Pattern::new(v).ok())
    }

    proptest! {
        #[test]
        fn matcher_agrees_with_reduction(word in word_strategy(4), u in pattern_strategy()) {
            prop_assert_eq!(find_matches(&word, &u).positions, matches_by_reduction(&word, &u));
        }

        #[test]
        fn reduce_is_idempotent(word in word_strategy(9)) {
            let once = word.reduce();
            prop_assert_eq!(once.reduce(), once.clone());
            prop_assert_eq!(once.alphabet(), (1..=word.alphabet().len() as u32).collect());
        }

        #[test]
        fn restriction_composes(
            word in word_strategy(6),
            b in prop::collection::btree_set(1u32..=6, 0..6),
            c in prop::collection::btree_set(1u32..=6, 0..6),
        ) {
            let both: BTreeSet<u32> = b.intersection(&c).copied().collect();
            prop_assert_eq!(word.restrict(&b).restrict(&c), word.restrict(&both));
            prop_assert_eq!(
                word.initial_permutation().restrict(&b),
                word.restrict(&b).initial_permutation()
            );
            prop_assert_eq!(word.initial_permutation().len(), word.alphabet().len());
        }

        #[test]
        fn reverse_duality(word in word_strategy(4), u in pattern_strategy()) {
            let forward = find_matches(&word, &u).positions;
            let backward = find_matches(&word.reverse(), &u.reverse()).positions;
            let k = u.len();
            let mut mapped: Vec<usize> = forward.iter().map(|&p| word.len() + 2 - k - p).collect();
            mapped.sort_unstable();
            prop_assert_eq!(mapped, backward);
        }

        #[test]
        fn complement_duality(word in word_strategy(4), u in pattern_strategy(), extra in 0u32..3) {
            let n = word.max_letter().unwrap_or(1) + extra;
            let c = word.complement(n).unwrap();
            prop_assert_eq!(find_matches(&word, &u), find_matches(&c, &u.complement()));
            prop_assert_eq!(c.complement(n).unwrap(), word);
        }

        #[test]
        fn matching_ignores_ambient_reduction(word in word_strategy(9), u in pattern_strategy()) {
            prop_assert_eq!(has_match(&word, &u), has_match(&word.reduce(), &u));
        }
    }
}
