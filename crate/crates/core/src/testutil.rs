//! Independent oracles shared by unit tests.

use std::collections::BTreeSet;

use proptest::prelude::*;

use crate::lang::{Alphabet, Letter, Regex};

/// Membership by direct recursion on the expression, without automata.
pub fn regex_matches(r: &Regex, alphabet: &Alphabet, w: &[Letter]) -> bool {
    ends(r, alphabet, w, 0).contains(&w.len())
}

/// Positions `j` such that `w[start..j]` matches `r`.
fn ends(r: &Regex, alphabet: &Alphabet, w: &[Letter], start: usize) -> BTreeSet<usize> {
    match r {
        Regex::Zero => BTreeSet::new(),
        Regex::One => BTreeSet::from([start]),
        Regex::Letter(c) => {
            if start < w.len() && alphabet.index_of(*c) == Some(w[start]) {
                BTreeSet::from([start + 1])
            } else {
                BTreeSet::new()
            }
        }
        Regex::Union(x, y) => &ends(x, alphabet, w, start) | &ends(y, alphabet, w, start),
        Regex::Concat(x, y) => ends(x, alphabet, w, start)
            .into_iter()
            .flat_map(|m| ends(y, alphabet, w, m))
            .collect(),
        Regex::Star(x) => {
            let mut reached = BTreeSet::from([start]);
            let mut frontier = vec![start];
            while let Some(p) = frontier.pop() {
                for q in ends(x, alphabet, w, p) {
                    if reached.insert(q) {
                        frontier.push(q);
                    }
                }
            }
            reached
        }
    }
}

pub fn arb_regex() -> impl Strategy<Value = Regex> {
    let leaf = prop_oneof![
        1 => Just(Regex::Zero),
        1 => Just(Regex::One),
        3 => Just(Regex::Letter('a')),
        3 => Just(Regex::Letter('b')),
    ];
    leaf.prop_recursive(4, 20, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::concat(a, b)),
            inner.prop_map(Regex::star),
        ]
    })
}
