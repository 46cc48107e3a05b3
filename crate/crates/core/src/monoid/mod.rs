//! Transition and syntactic monoids as monoids of partial maps.

mod green;
mod suschkevitch;

pub use green::{green_relations, minimal_ideal, EggCell, GreenData, IdealReport};
pub use suschkevitch::{suschkevitch_idempotent, Suschkevitch};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::automata::{minimize, Dfa};
use crate::config::DEFAULT_MONOID_CAP;
use crate::error::{Error, Result};
use crate::lang::{Alphabet, Letter, Word};

const UNDEF: u32 = u32::MAX;

/// Partial map on `0..n`, acting on the right: `q·(st) = (q·s)·t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Transformation(Box<[u32]>);

impl Transformation {
    pub fn new(images: &[Option<usize>]) -> Self {
        Transformation(images.iter().map(|x| x.map_or(UNDEF, |q| q as u32)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, q: usize) -> Option<usize> {
        let r = self.0[q];
        (r != UNDEF).then_some(r as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation(
            self.0
                .iter()
                .map(|&r| if r == UNDEF { UNDEF } else { other.0[r as usize] })
                .collect(),
        )
    }

    /// Sorted image.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        for &r in self.0.iter() {
            if r != UNDEF {
                seen[r as usize] = true;
            }
        }
        (0..seen.len()).filter(|&q| seen[q]).collect()
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    /// The empty map.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == UNDEF)
    }

    pub fn to_vec(&self) -> Vec<Option<usize>> {
        (0..self.len()).map(|q| self.apply(q)).collect()
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (q, &r) in self.0.iter().enumerate() {
            if q > 0 {
                write!(f, " ")?;
            }
            if r == UNDEF {
                write!(f, "-")?;
            } else {
                write!(f, "{r}")?;
            }
        }
        write!(f, "]")
    }
}

/// Monoid generated by the letter maps of an automaton. Element 0 is the
/// identity; elements are numbered in BFS order, so the word of each element
/// is a shortest (and length-lexicographically least) representative.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    alphabet: Alphabet,
    state_count: usize,
    elements: Vec<Transformation>,
    index: HashMap<Transformation, usize>,
    /// `right[m * k + a]` is the index of `m·φ(a)`.
    right: Vec<usize>,
    /// BFS tree: element reached from `parent.0` by letter `parent.1`.
    parent: Vec<(usize, Letter)>,
}

impl FiniteMonoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, m: usize) -> &Transformation {
        &self.elements[m]
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn generator(&self, a: Letter) -> usize {
        self.right[a]
    }

    pub fn right_mul_letter(&self, m: usize, a: Letter) -> usize {
        self.right[m * self.alphabet.len() + a]
    }

    pub fn mul(&self, m: usize, n: usize) -> usize {
        self.index[&self.elements[m].then(&self.elements[n])]
    }

    pub fn element_of(&self, w: &[Letter]) -> usize {
        w.iter().fold(0, |m, &a| self.right_mul_letter(m, a))
    }

    /// Shortest representative word.
    pub fn word(&self, m: usize) -> Word {
        let mut w = Vec::new();
        let mut cur = m;
        while cur != 0 {
            let (p, a) = self.parent[cur];
            w.push(a);
            cur = p;
        }
        w.reverse();
        w
    }

    pub fn render(&self, m: usize) -> String {
        self.alphabet.render(&self.word(m))
    }

    pub fn rank(&self, m: usize) -> usize {
        self.elements[m].rank()
    }

    pub fn is_idempotent(&self, m: usize) -> bool {
        self.mul(m, m) == m
    }

    /// Two-sided absorbing element other than the identity.
    pub fn zero(&self) -> Option<usize> {
        let k = self.alphabet.len();
        (1..self.len()).find(|&z| {
            (0..k).all(|a| {
                self.right_mul_letter(z, a) == z && self.mul(self.generator(a), z) == z
            })
        })
    }

    /// The unique idempotent among the powers `x^k`, `k ≥ 1`.
    pub fn omega(&self, x: usize) -> usize {
        let mut p = x;
        loop {
            if self.is_idempotent(p) {
                return p;
            }
            p = self.mul(p, x);
        }
    }
}

/// Closure of the letter maps of `dfa` under composition.
pub fn transition_monoid(dfa: &Dfa) -> Result<FiniteMonoid> {
    transition_monoid_capped(dfa, DEFAULT_MONOID_CAP)
}

pub fn transition_monoid_capped(dfa: &Dfa, cap: usize) -> Result<FiniteMonoid> {
    let n = dfa.state_count();
    if n == 0 {
        return Err(Error::EmptyAutomaton);
    }
    let k = dfa.alphabet().len();
    let gens: Vec<Transformation> = (0..k)
        .map(|a| Transformation::new(&(0..n).map(|q| dfa.next(q, a)).collect::<Vec<_>>()))
        .collect();
    let id = Transformation::identity(n);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut parent = vec![(0, 0)];
    let mut right = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(m) = queue.pop_front() {
        for (a, g) in gens.iter().enumerate() {
            let t = elements[m].then(g);
            let id = match index.get(&t) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::MonoidTooLarge(cap));
                    }
                    elements.push(t.clone());
                    index.insert(t, elements.len() - 1);
                    parent.push((m, a));
                    queue.push_back(elements.len() - 1);
                    elements.len() - 1
                }
            };
            right.push(id);
        }
    }
    Ok(FiniteMonoid { alphabet: dfa.alphabet().clone(), state_count: n, elements, index, right, parent })
}

/// Syntactic monoid of a language given by an automaton: the transition
/// monoid of its minimal automaton, with the image `P` of the language.
#[derive(Clone, Debug)]
pub struct SyntacticMonoid {
    pub monoid: FiniteMonoid,
    pub minimal: Dfa,
    /// `accepting[m]` iff `i·m ∈ T`.
    pub accepting: Vec<bool>,
}

impl SyntacticMonoid {
    pub fn initial(&self) -> usize {
        self.minimal.initial().expect("nonempty language")
    }

    pub fn is_accepting(&self, m: usize) -> bool {
        self.accepting[m]
    }
}

pub fn syntactic_monoid(dfa: &Dfa) -> Result<SyntacticMonoid> {
    syntactic_monoid_capped(dfa, DEFAULT_MONOID_CAP)
}

pub fn syntactic_monoid_capped(dfa: &Dfa, cap: usize) -> Result<SyntacticMonoid> {
    let minimal = minimize(dfa);
    let Some(i) = minimal.initial() else {
        return Err(Error::EmptyLanguage);
    };
    let monoid = transition_monoid_capped(&minimal, cap)?;
    let accepting = monoid
        .elements()
        .iter()
        .map(|t| t.apply(i).is_some_and(|q| minimal.is_final(q)))
        .collect();
    Ok(SyntacticMonoid { monoid, minimal, accepting })
}
