//! Words, patterns, compositions and pattern sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{join_usize, parse_usize_list};

/// A finite word over the positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse(format!(
                "word letters must be positive: {letters:?}"
            )));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `x ⊕ y`: `x` followed by `y` shifted up by `max(x)`.
    pub fn direct_sum(&self, other: &Word) -> Word {
        let shift = self.max_letter();
        Word(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&l| l + shift))
                .collect(),
        )
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Replaces each letter `l` by `max + 1 - l`.
    pub fn complement(&self) -> Word {
        let m = self.max_letter();
        Word(self.0.iter().map(|&l| m + 1 - l).collect())
    }

    /// Multiplicity of each letter `1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.max_letter()];
        for &l in &self.0 {
            c[l - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            f.write_str(&join_usize(&self.0))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Word::empty());
        }
        Word::new(parse_usize_list(s)?)
    }
}

/// A pattern: a non-empty word using every letter `1..=k` for `k = max`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Pattern(Word);

impl Pattern {
    pub fn new(word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidPattern {
                pattern: String::new(),
                reason: "pattern is empty".into(),
            });
        }
        if let Some(missing) = word.content().iter().position(|&c| c == 0) {
            return Err(Error::InvalidPattern {
                pattern: word.to_string(),
                reason: format!("letter {} is missing", missing + 1),
            });
        }
        Ok(Pattern(word))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[usize] {
        self.0.letters()
    }

    /// Number of distinct letters, i.e. rows of `M(x)`.
    pub fn num_values(&self) -> usize {
        self.0.max_letter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_permutation(&self) -> bool {
        self.len() == self.num_values()
    }

    pub fn reverse_complement(&self) -> Pattern {
        Pattern(self.0.reverse().complement())
    }

    /// `12⋯k`.
    pub fn increasing(k: usize) -> Pattern {
        Pattern(Word((1..=k).collect()))
    }

    /// `k⋯21`.
    pub fn decreasing(k: usize) -> Pattern {
        Pattern(Word((1..=k).rev().collect()))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.0)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word: Word = s.parse().map_err(|e: Error| Error::InvalidPattern {
            pattern: s.to_string(),
            reason: e.to_string(),
        })?;
        Pattern::new(word)
    }
}

impl TryFrom<String> for Pattern {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Pattern> for String {
    fn from(p: Pattern) -> String {
        p.to_string()
    }
}

impl TryFrom<Word> for Pattern {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        Pattern::new(w)
    }
}

/// A finite set of patterns, kept sorted and deduplicated. Text form joins
/// the patterns with `+`, e.g. `231+221`; the empty set is written `-`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PatternSet(Vec<Pattern>);

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Pattern>) -> Self {
        let mut v: Vec<Pattern> = patterns.into_iter().collect();
        v.sort();
        v.dedup();
        PatternSet(v)
    }

    pub fn empty() -> Self {
        PatternSet(Vec::new())
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pattern> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &PatternSet) -> bool {
        self.0.iter().all(|p| other.0.contains(p))
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet({self})")
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(PatternSet::empty());
        }
        s.split('+')
            .map(|p| p.trim().parse::<Pattern>())
            .collect::<Result<Vec<_>>>()
            .map(PatternSet::new)
    }
}

impl TryFrom<String> for PatternSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PatternSet> for String {
    fn from(p: PatternSet) -> String {
        p.to_string()
    }
}

impl FromIterator<Pattern> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Pattern>>(iter: I) -> Self {
        PatternSet::new(iter)
    }
}

/// A sequence of positive integers `a₁,…,a_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse("composition has no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(1,1,…,1)` with `m` parts.
    pub fn ones(m: usize) -> Composition {
        Composition(vec![1; m])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_usize(&self.0))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_usize_list(s)?)
    }
}

impl TryFrom<String> for Composition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Composition> for String {
    fn from(c: Composition) -> String {
        c.to_string()
    }
}

/// Convenience for tests and fixtures: parses a pattern, panicking on bad
/// input.
pub fn pat(s: &str) -> Pattern {
    s.parse()
        .unwrap_or_else(|e| panic!("bad pattern {s:?}: {e}"))
}

/// Parses a `+`-joined pattern set, panicking on bad input.
pub fn pats(s: &str) -> PatternSet {
    s.parse()
        .unwrap_or_else(|e| panic!("bad pattern set {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn direct_sums() {
        assert_eq!(w("231").direct_sum(&w("12")), w("23145"));
        assert_eq!(w("231").direct_sum(&w("1")), w("2314"));
        assert_eq!(w("312").direct_sum(&w("12")), w("31245"));
        assert_eq!(w("231").direct_sum(&Word::empty()), w("231"));
    }

    #[test]
    fn pattern_with_gap_rejected() {
        assert!(matches!(
            "13".parse::<Pattern>(),
            Err(Error::InvalidPattern { .. })
        ));
        assert!(matches!(
            "".parse::<Pattern>(),
            Err(Error::InvalidPattern { .. })
        ));
        assert!("221".parse::<Pattern>().is_ok());
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(pat("23145").reverse_complement(), pat("12534"));
        assert_eq!(pat("231").reverse_complement(), pat("312"));
        assert_eq!(pat("2314").reverse_complement(), pat("1423"));
    }

    #[test]
    fn pattern_set_text() {
        let s = pats("231+221");
        assert_eq!(s.to_string(), "221+231");
        assert_eq!(pats("-"), PatternSet::empty());
        assert_eq!(PatternSet::empty().to_string(), "-");
        assert!(pats("231").is_subset(&s));
    }

    #[test]
    fn long_letters_use_commas() {
        let long = Word::new(vec![10, 2, 1]).unwrap();
        assert_eq!(long.to_string(), "10,2,1");
        assert_eq!("10,2,1".parse::<Word>().unwrap(), long);
    }

    #[test]
    fn composition_text() {
        let c: Composition = "2,2,3,1,1,1".parse().unwrap();
        assert_eq!(c.total(), 10);
        assert_eq!("(221)".parse::<Composition>().unwrap().parts(), &[2, 2, 1]);
        assert!("2,0,1".parse::<Composition>().is_err());
    }
}
