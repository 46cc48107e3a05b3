use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::{minimize, Dfa};
use crate::error::{Error, Result};
use crate::lang::{Alphabet, Letter, Regex};

/// Nondeterministic automaton without epsilon edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    pub alphabet: Alphabet,
    pub state_count: usize,
    pub initial: BTreeSet<usize>,
    pub finals: BTreeSet<usize>,
    pub edges: Vec<(usize, Letter, usize)>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: BTreeSet<usize>,
        finals: BTreeSet<usize>,
        edges: Vec<(usize, Letter, usize)>,
    ) -> Result<Self> {
        let bad = |s: usize| Error::StateOutOfRange { state: s, count: state_count };
        if let Some(&s) = initial.iter().chain(&finals).find(|&&s| s >= state_count) {
            return Err(bad(s));
        }
        for &(p, a, q) in &edges {
            if p >= state_count {
                return Err(bad(p));
            }
            if q >= state_count {
                return Err(bad(q));
            }
            if a >= alphabet.len() {
                return Err(Error::InvalidAlphabet(format!("letter index {a} out of range")));
            }
        }
        Ok(Nfa { alphabet, state_count, initial, finals, edges })
    }

    /// Position (Glushkov) automaton: state 0 is initial, state `k` is the
    /// k-th letter occurrence of the expression.
    pub fn glushkov(regex: &Regex, alphabet: &Alphabet) -> Result<Self> {
        let mut g = Glushkov { letters: vec![usize::MAX], follow: vec![BTreeSet::new()], alphabet };
        let info = g.walk(regex)?;
        let n = g.letters.len();
        let mut edges = Vec::new();
        for &p in &info.first {
            edges.push((0, g.letters[p], p));
        }
        for (q, fol) in g.follow.iter().enumerate() {
            for &p in fol {
                edges.push((q, g.letters[p], p));
            }
        }
        let mut finals = info.last.clone();
        if info.nullable {
            finals.insert(0);
        }
        Nfa::new(alphabet.clone(), n, BTreeSet::from([0]), finals, edges)
    }

    /// Accessible subset construction. Empty subsets are dropped, so the result
    /// is partial. States are numbered in BFS order from the initial subset.
    pub fn determinize(&self) -> (Dfa, Vec<BTreeSet<usize>>) {
        let k = self.alphabet.len();
        let mut out: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); self.state_count];
        for &(p, a, q) in &self.edges {
            out[p].push((a, q));
        }
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
        let mut trans = Vec::new();
        let mut queue = VecDeque::new();
        if !self.initial.is_empty() {
            index.insert(self.initial.clone(), 0);
            subsets.push(self.initial.clone());
            queue.push_back(0);
        }
        while let Some(s) = queue.pop_front() {
            let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
            for &p in &subsets[s] {
                for &(a, q) in &out[p] {
                    succ[a].insert(q);
                }
            }
            for (a, t) in succ.into_iter().enumerate() {
                if t.is_empty() {
                    continue;
                }
                let id = *index.entry(t.clone()).or_insert_with(|| {
                    subsets.push(t);
                    queue.push_back(subsets.len() - 1);
                    subsets.len() - 1
                });
                trans.push((s, a, id));
            }
        }
        let finals: Vec<usize> = (0..subsets.len())
            .filter(|&s| subsets[s].iter().any(|q| self.finals.contains(q)))
            .collect();
        let initial = if subsets.is_empty() { None } else { Some(0) };
        let dfa = Dfa::new(self.alphabet.clone(), subsets.len(), initial, finals, trans)
            .expect("subset construction is deterministic");
        (dfa, subsets)
    }
}

struct PosInfo {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

struct Glushkov<'a> {
    letters: Vec<Letter>,
    follow: Vec<BTreeSet<usize>>,
    alphabet: &'a Alphabet,
}

impl Glushkov<'_> {
    fn walk(&mut self, r: &Regex) -> Result<PosInfo> {
        Ok(match r {
            Regex::Zero => PosInfo { nullable: false, first: BTreeSet::new(), last: BTreeSet::new() },
            Regex::One => PosInfo { nullable: true, first: BTreeSet::new(), last: BTreeSet::new() },
            Regex::Letter(c) => {
                let a = self.alphabet.letter(*c)?;
                self.letters.push(a);
                self.follow.push(BTreeSet::new());
                let p = self.letters.len() - 1;
                PosInfo { nullable: false, first: BTreeSet::from([p]), last: BTreeSet::from([p]) }
            }
            Regex::Union(x, y) => {
                let x = self.walk(x)?;
                let y = self.walk(y)?;
                PosInfo {
                    nullable: x.nullable || y.nullable,
                    first: &x.first | &y.first,
                    last: &x.last | &y.last,
                }
            }
            Regex::Concat(x, y) => {
                let x = self.walk(x)?;
                let y = self.walk(y)?;
                for &p in &x.last {
                    self.follow[p].extend(y.first.iter().copied());
                }
                PosInfo {
                    nullable: x.nullable && y.nullable,
                    first: if x.nullable { &x.first | &y.first } else { x.first },
                    last: if y.nullable { &x.last | &y.last } else { y.last },
                }
            }
            Regex::Star(x) => {
                let x = self.walk(x)?;
                for &p in &x.last {
                    self.follow[p].extend(x.first.iter().copied());
                }
                PosInfo { nullable: true, first: x.first, last: x.last }
            }
        })
    }
}

/// Compiles an expression into a deterministic automaton over `alphabet`.
///
/// The accessible subset construction of the position automaton is reduced
/// to the minimal automaton. An empty language gives the automaton with no states.
pub fn compile(regex: &Regex, alphabet: &Alphabet) -> Result<Dfa> {
    let (dfa, _) = Nfa::glushkov(regex, alphabet)?.determinize();
    Ok(minimize(&dfa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::{parse_regex, words_up_to};

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn c(text: &str) -> Dfa {
        compile(&parse_regex(text, None).unwrap(), &ab()).unwrap()
    }

    #[test]
    fn even_powers_of_a() {
        let d = compile(&parse_regex("(aa)*", None).unwrap(), &Alphabet::parse("a").unwrap()).unwrap();
        assert_eq!(d.state_count(), 2);
        assert_eq!(d.initial(), Some(0));
        assert_eq!(d.next(0, 0), Some(1));
        assert_eq!(d.next(1, 0), Some(0));
        assert_eq!(d.final_states().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn empty_set_has_no_initial_state() {
        let d = c("0");
        assert_eq!(d.state_count(), 0);
        assert_eq!(d.initial(), None);
        assert!(!d.accepts(&[]));
    }

    #[test]
    fn finite_language_against_enumeration() {
        let d = c("a+ba");
        let a = ab();
        let expected = [a.word("a").unwrap(), a.word("ba").unwrap()];
        for w in words_up_to(2, 4) {
            assert_eq!(d.accepts(&w), expected.contains(&w), "word {}", a.render(&w));
        }
    }

    #[test]
    fn subset_construction_is_accessible() {
        let r = parse_regex("(a+b)*abb", None).unwrap();
        let (d, subsets) = Nfa::glushkov(&r, &ab()).unwrap().determinize();
        assert_eq!(subsets.len(), d.state_count());
        assert!(d.reachable_from(0).iter().all(|&x| x));
        let distinct: BTreeSet<_> = subsets.iter().collect();
        assert_eq!(distinct.len(), subsets.len());
    }

    #[test]
    fn letter_outside_alphabet() {
        let r = parse_regex("c", None).unwrap();
        assert_eq!(compile(&r, &ab()), Err(Error::UnknownSymbol('c')));
    }
}
