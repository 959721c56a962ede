use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A classical pattern in canonical form: each term is the rank of the
/// original term among the distinct values, so the values form an initial
/// segment of the naturals and equal terms stay equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pattern(Vec<u64>);

impl Pattern {
    /// Builds the canonical pattern of a nonempty sequence.
    ///
    /// # Panics
    ///
    /// Panics on an empty sequence: patterns have length at least 1.
    pub fn new(seq: &[u64]) -> Pattern {
        assert!(!seq.is_empty(), "patterns have length at least 1");
        let mut ranks: Vec<u64> = seq.to_vec();
        ranks.sort_unstable();
        ranks.dedup();
        Pattern(
            seq.iter()
                .map(|v| ranks.binary_search(v).unwrap() as u64)
                .collect(),
        )
    }

    pub fn terms(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            debug_assert!(v < 10, "display is defined for single-digit values");
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = ParseError;

    /// Parses a digit string such as `"102"`. The text must already be in
    /// canonical form, so `"213"` is rejected even though it canonicalizes
    /// to a valid pattern.
    fn from_str(text: &str) -> Result<Pattern, ParseError> {
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut terms = Vec::with_capacity(text.len());
        for c in text.chars() {
            let d = c.to_digit(10).ok_or(ParseError::InvalidChar(c))?;
            terms.push(d as u64);
        }
        let canonical = Pattern::new(&terms);
        if canonical.terms() != terms {
            return Err(ParseError::NotCanonical(text.to_string()));
        }
        Ok(canonical)
    }
}

/// A finite set of patterns, kept sorted and deduplicated. The textual key
/// joins the patterns with commas, so the set `{201, 102}` has key
/// `"102,201"` regardless of construction order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PatternSet(Vec<Pattern>);

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Pattern>) -> PatternSet {
        let mut v: Vec<Pattern> = patterns.into_iter().collect();
        v.sort();
        v.dedup();
        PatternSet(v)
    }

    /// The empty set: nothing is forbidden.
    pub fn empty() -> PatternSet {
        PatternSet(Vec::new())
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Pattern> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The canonical comma-joined key, e.g. `"102,201"`.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FromStr for PatternSet {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<PatternSet, ParseError> {
        let mut patterns = Vec::new();
        for part in text.split(',') {
            patterns.push(part.parse::<Pattern>()?);
        }
        Ok(PatternSet::new(patterns))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty pattern")]
    Empty,
    #[error("invalid character {0:?} in pattern")]
    InvalidChar(char),
    #[error("pattern {0:?} is not in canonical form")]
    NotCanonical(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_canonical_text() {
        let p: Pattern = "102".parse().unwrap();
        assert_eq!(p.terms(), &[1, 0, 2]);
        assert_eq!(p.to_string(), "102");
    }

    #[test]
    fn parse_rejects_non_canonical_text() {
        assert_eq!(
            "213".parse::<Pattern>(),
            Err(ParseError::NotCanonical("213".to_string()))
        );
        assert_eq!("".parse::<Pattern>(), Err(ParseError::Empty));
        assert_eq!("1x0".parse::<Pattern>(), Err(ParseError::InvalidChar('x')));
    }

    #[test]
    fn set_key_is_sorted() {
        let set: PatternSet = "201,102".parse().unwrap();
        assert_eq!(set.key(), "102,201");
        let dup: PatternSet = "010,010".parse().unwrap();
        assert_eq!(dup.len(), 1);
    }

    #[test]
    fn set_parse_rejects_bad_members() {
        assert!("102,,201".parse::<PatternSet>().is_err());
        assert!("102,211".parse::<PatternSet>().is_err());
    }
}
