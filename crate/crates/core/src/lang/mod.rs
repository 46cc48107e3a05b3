//! Alphabets, words, rational expressions and the automaton file format.

mod dfa_file;
mod regex;

pub use dfa_file::{read_dfa, write_dfa, DfaFile};
pub use regex::{parse_regex, Regex};

use serde::Serialize;

use crate::error::{Error, Result};

/// A letter is an index into its [`Alphabet`].
pub type Letter = usize;

/// Words are sequences of letter indices.
pub type Word = Vec<Letter>;

/// An ordered set of single lowercase ASCII letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        for (i, &c) in symbols.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(format!("'{c}' is not a lowercase letter")));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol '{c}'")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Parses `"ab"` or `"a b"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars().filter(|c| !c.is_whitespace() && *c != ','))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter]
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.symbols.iter().position(|&s| s == c)
    }

    pub fn letter(&self, c: char) -> Result<Letter> {
        self.index_of(c).ok_or(Error::UnknownSymbol(c))
    }

    /// Parses a word written as letters; `1` or the empty string denote the empty word.
    pub fn word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" {
            return Ok(Vec::new());
        }
        text.chars().map(|c| self.letter(c)).collect()
    }

    pub fn render(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter().map(|&l| self.symbols[l]).collect()
    }

    /// Sorted union of two alphabets.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut s: Vec<char> = self.symbols.iter().chain(&other.symbols).copied().collect();
        s.sort_unstable();
        s.dedup();
        Alphabet { symbols: s }
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols.iter().all(|c| other.symbols.contains(c))
    }
}

/// All words of length at most `max_len`, in length-lexicographic order.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet_size);
        for w in &layer {
            for a in 0..alphabet_size {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn reversed(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::parse("ab").is_ok());
        assert!(matches!(Alphabet::parse("aa"), Err(Error::InvalidAlphabet(_))));
        assert!(matches!(Alphabet::parse("aB"), Err(Error::InvalidAlphabet(_))));
    }

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(words_up_to(2, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(words_up_to(1, 4).len(), 5);
        assert_eq!(words_up_to(2, 0), vec![Vec::<Letter>::new()]);
    }

    #[test]
    fn word_roundtrip() {
        let a = Alphabet::parse("ab").unwrap();
        assert_eq!(a.word("1").unwrap(), Vec::<Letter>::new());
        assert_eq!(a.render(&a.word("abba").unwrap()), "abba");
        assert_eq!(a.word("abc"), Err(Error::UnknownSymbol('c')));
    }
}
