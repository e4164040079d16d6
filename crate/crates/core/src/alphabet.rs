//! Ordered finite alphabets.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An ordered set of distinct letters drawn from `a`–`z`.
///
/// The order is fixed at construction time and is the order in which
/// automaton transitions are enumerated. Complementation is always taken
/// relative to an explicit alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be non-empty".into()));
        }
        for &c in &letters {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(format!(
                    "letter '{c}' is not in a-z"
                )));
            }
        }
        for (i, &c) in letters.iter().enumerate() {
            if letters[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter '{c}'")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().copied()
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    /// All words over this alphabet of length at most `max_len`, in
    /// length-then-letter order (starts with the empty word).
    pub fn words_up_to(&self, max_len: usize) -> Vec<String> {
        let mut words = vec![String::new()];
        let mut start = 0;
        for _ in 0..max_len {
            let end = words.len();
            for i in start..end {
                for c in self.iter() {
                    let mut w = words[i].clone();
                    w.push(c);
                    words.push(w);
                }
            }
            start = end;
        }
        words
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Alphabet::new(s.chars())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert!(Alphabet::new([]).is_err());
        assert!(Alphabet::new(['a', 'a']).is_err());
        assert!(Alphabet::new(['A']).is_err());
        assert!(Alphabet::new(['a', '1']).is_err());
    }

    #[test]
    fn keeps_declared_order() {
        let ab: Alphabet = "ba".parse().unwrap();
        assert_eq!(ab.letters(), &['b', 'a']);
        assert_eq!(ab.index_of('a'), Some(1));
    }

    #[test]
    fn enumerates_words() {
        let ab: Alphabet = "ab".parse().unwrap();
        let words = ab.words_up_to(2);
        assert_eq!(words, vec!["", "a", "b", "aa", "ab", "ba", "bb"]);
    }
}
