//! Deterministic automata: construction from expressions, minimization,
//! boolean operations, residuals and reversal.

mod nfa;
mod ops;

pub use nfa::{compile, Nfa};
pub use ops::{
    accessible_reversal, boolean_combine, complement, equivalent, is_strongly_connected, minimize,
    residual, reverse, BoolOp, Side, SubsetDfa,
};

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::lang::{Alphabet, DfaFile, Letter};

/// A deterministic, possibly partial, finite automaton. States are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    n: usize,
    initial: Option<usize>,
    finals: Vec<bool>,
    delta: Vec<Option<usize>>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        initial: Option<usize>,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, Letter, usize)>,
    ) -> Result<Self> {
        let k = alphabet.len();
        let range = |s: usize| {
            if s < n {
                Ok(s)
            } else {
                Err(Error::StateOutOfRange { state: s, count: n })
            }
        };
        if let Some(i) = initial {
            range(i)?;
        }
        let mut fin = vec![false; n];
        for f in finals {
            fin[range(f)?] = true;
        }
        let mut delta = vec![None; n * k];
        for (p, a, q) in transitions {
            range(p)?;
            range(q)?;
            if a >= k {
                return Err(Error::InvalidAlphabet(format!("letter index {a} out of range")));
            }
            if delta[p * k + a].is_some() {
                return Err(Error::DuplicateTransition { state: p, symbol: alphabet.symbol(a) });
            }
            delta[p * k + a] = Some(q);
        }
        Ok(Dfa { alphabet, n, initial, finals: fin, delta })
    }

    /// The automaton with no states, recognizing the empty set.
    pub fn empty(alphabet: Alphabet) -> Self {
        Dfa { alphabet, n: 0, initial: None, finals: Vec::new(), delta: Vec::new() }
    }

    /// One state with a loop on every letter, accepting everything.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa { alphabet, n: 1, initial: Some(0), finals: vec![true], delta: vec![Some(0); k] }
    }

    pub fn from_file(f: &DfaFile) -> Result<Self> {
        let trans: Result<Vec<_>> = f
            .transitions
            .iter()
            .map(|&(p, c, q)| Ok((p, f.alphabet.letter(c)?, q)))
            .collect();
        Dfa::new(f.alphabet.clone(), f.state_count, f.initial, f.finals.iter().copied(), trans?)
    }

    pub fn to_file(&self) -> DfaFile {
        let transitions = self
            .transitions()
            .map(|(p, a, q)| (p, self.alphabet.symbol(a), q))
            .collect();
        DfaFile::new(
            self.alphabet.clone(),
            self.n,
            self.initial,
            self.final_states().collect::<BTreeSet<_>>(),
            transitions,
        )
        .expect("a valid Dfa always yields a valid file")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn final_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&q| self.finals[q])
    }

    pub fn next(&self, q: usize, a: Letter) -> Option<usize> {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, Letter, usize)> + '_ {
        let k = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .filter_map(move |(i, t)| t.map(|q| (i / k, i % k, q)))
    }

    pub fn run_from(&self, q: usize, w: &[Letter]) -> Option<usize> {
        w.iter().try_fold(q, |s, &a| self.next(s, a))
    }

    pub fn accepts(&self, w: &[Letter]) -> bool {
        self.initial
            .and_then(|i| self.run_from(i, w))
            .is_some_and(|q| self.finals[q])
    }

    /// Same automaton with a different initial state.
    pub fn with_initial(&self, initial: Option<usize>) -> Self {
        Dfa { initial, ..self.clone() }
    }

    pub fn with_finals(&self, finals: impl IntoIterator<Item = usize>) -> Self {
        let mut f = vec![false; self.n];
        for q in finals {
            f[q] = true;
        }
        Dfa { finals: f, ..self.clone() }
    }

    /// Re-indexes the letters over a larger alphabet; new letters have no transitions.
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Self> {
        if !self.alphabet.is_subset_of(alphabet) {
            return Err(Error::AlphabetMismatch(format!(
                "{:?} is not contained in {:?}",
                self.alphabet.symbols(),
                alphabet.symbols()
            )));
        }
        let trans: Vec<_> = self
            .transitions()
            .map(|(p, a, q)| (p, alphabet.index_of(self.alphabet.symbol(a)).unwrap(), q))
            .collect();
        Dfa::new(alphabet.clone(), self.n, self.initial, self.final_states().collect::<Vec<_>>(), trans)
    }

    /// States reachable from `from` (including it).
    pub fn reachable_from(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(q) = queue.pop_front() {
            for a in 0..self.alphabet.len() {
                if let Some(r) = self.next(q, a) {
                    if !seen[r] {
                        seen[r] = true;
                        queue.push_back(r);
                    }
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        let mut seen = self.finals.clone();
        let mut queue: VecDeque<usize> = self.final_states().collect();
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    pub fn is_trim(&self) -> bool {
        let Some(i) = self.initial else {
            return false;
        };
        let acc = self.reachable_from(i);
        let co = self.coaccessible();
        (0..self.n).all(|q| acc[q] && co[q])
    }

    /// Shortest word leading from `from` to `to`, if any.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<Letter>> {
        let mut prev: Vec<Option<(usize, Letter)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            if q == to {
                let mut w = Vec::new();
                let mut cur = q;
                while let Some((p, a)) = prev[cur] {
                    w.push(a);
                    cur = p;
                }
                w.reverse();
                return Some(w);
            }
            for a in 0..self.alphabet.len() {
                if let Some(r) = self.next(q, a) {
                    if !seen[r] {
                        seen[r] = true;
                        prev[r] = Some((q, a));
                        queue.push_back(r);
                    }
                }
            }
        }
        None
    }
}

/// Small automata that recur in the examples and tests.
pub mod fixtures {
    use super::*;
    use crate::lang::Alphabet;

    pub fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    /// States 1, 2 of the even automaton become 0, 1: `a` swaps them, `b`
    /// loops on 0. Initial and final state 0.
    pub fn even() -> Dfa {
        Dfa::new(ab(), 2, Some(0), [0], [(0, 0, 1), (1, 0, 0), (0, 1, 0)]).unwrap()
    }

    /// Four-state strongly connected automaton with i = 1, T = {1, 2}
    /// (renumbered from 0).
    pub fn weakly() -> Dfa {
        Dfa::new(
            ab(),
            4,
            Some(0),
            [0, 1],
            [
                (0, 0, 1),
                (0, 1, 2),
                (1, 0, 2),
                (1, 1, 2),
                (2, 0, 3),
                (2, 1, 0),
                (3, 0, 0),
                (3, 1, 0),
            ],
        )
        .unwrap()
    }

    /// Minimal automaton of {a, ba}*: a loops on 0, b: 0 -> 1, a: 1 -> 0.
    pub fn bidelay() -> Dfa {
        Dfa::new(ab(), 2, Some(0), [0], [(0, 0, 0), (0, 1, 1), (1, 0, 0)]).unwrap()
    }
}
