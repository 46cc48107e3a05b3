//! Line-oriented automaton files.
//!
//! ```text
//! # the even automaton
//! alphabet: a b
//! states: 2
//! initial: 0
//! finals: 0
//! 0 a 1
//! 0 b 0
//! 1 a 0
//! ```
//!
//! The `initial:` line is omitted for automata without an initial state.
//! Everything after `#` on a line is ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lang::Alphabet;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DfaFile {
    pub alphabet: Alphabet,
    pub state_count: usize,
    pub initial: Option<usize>,
    pub finals: BTreeSet<usize>,
    /// Sorted by state, then by the symbol's position in the alphabet.
    pub transitions: Vec<(usize, char, usize)>,
}

impl DfaFile {
    /// Validates determinism and ranges, and sorts the transitions.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: Option<usize>,
        finals: BTreeSet<usize>,
        mut transitions: Vec<(usize, char, usize)>,
    ) -> Result<Self> {
        let check = |s: usize| {
            if s < state_count {
                Ok(())
            } else {
                Err(Error::StateOutOfRange { state: s, count: state_count })
            }
        };
        if let Some(i) = initial {
            check(i)?;
        }
        for &f in &finals {
            check(f)?;
        }
        for &(p, c, q) in &transitions {
            check(p)?;
            check(q)?;
            alphabet.letter(c)?;
        }
        transitions.sort_by_key(|&(p, c, _)| (p, alphabet.index_of(c)));
        for w in transitions.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::DuplicateTransition { state: w[0].0, symbol: w[0].1 });
            }
        }
        Ok(DfaFile { alphabet, state_count, initial, finals, transitions })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet = None;
        let mut states = None;
        let mut initial = None;
        let mut finals = BTreeSet::new();
        let mut raw = Vec::new();

        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::MalformedLine { line: lineno, message };
            if let Some((key, value)) = line.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "alphabet" => alphabet = Some(Alphabet::new(symbols(value, &bad)?)?),
                    "states" => states = Some(number(value, &bad)?),
                    "initial" => initial = Some(number(value, &bad)?),
                    "finals" => {
                        for tok in value.split_whitespace() {
                            finals.insert(number(tok, &bad)?);
                        }
                    }
                    other => return Err(bad(format!("unknown key '{other}'"))),
                }
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [p, c, q] = toks[..] else {
                return Err(bad("expected 'state symbol state'".into()));
            };
            let mut cs = c.chars();
            let (Some(sym), None) = (cs.next(), cs.next()) else {
                return Err(bad(format!("'{c}' is not a single symbol")));
            };
            raw.push((number(p, &bad)?, sym, number(q, &bad)?));
        }
        let alphabet = alphabet.ok_or(Error::MalformedLine { line: 0, message: "missing 'alphabet:' line".into() })?;
        let states = states.ok_or(Error::MalformedLine { line: 0, message: "missing 'states:' line".into() })?;
        DfaFile::new(alphabet, states, initial, finals, raw)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let syms: Vec<String> = self.alphabet.symbols().iter().map(|c| c.to_string()).collect();
        writeln!(out, "alphabet: {}", syms.join(" ")).unwrap();
        writeln!(out, "states: {}", self.state_count).unwrap();
        if let Some(i) = self.initial {
            writeln!(out, "initial: {i}").unwrap();
        }
        let finals: Vec<String> = self.finals.iter().map(|f| f.to_string()).collect();
        writeln!(out, "finals: {}", finals.join(" ")).unwrap();
        for (p, c, q) in &self.transitions {
            writeln!(out, "{p} {c} {q}").unwrap();
        }
        out
    }
}

fn symbols(value: &str, bad: &dyn Fn(String) -> Error) -> Result<Vec<char>> {
    value
        .split_whitespace()
        .map(|tok| {
            let mut cs = tok.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(bad(format!("'{tok}' is not a single symbol"))),
            }
        })
        .collect()
}

fn number(tok: &str, bad: &dyn Fn(String) -> Error) -> Result<usize> {
    tok.parse().map_err(|_| bad(format!("'{tok}' is not a state number")))
}

pub fn read_dfa(path: impl AsRef<Path>) -> Result<DfaFile> {
    DfaFile::parse(&std::fs::read_to_string(path)?)
}

pub fn write_dfa(dfa: &DfaFile) -> String {
    dfa.to_text()
}
