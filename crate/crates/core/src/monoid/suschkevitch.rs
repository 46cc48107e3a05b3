use std::collections::BTreeSet;

use serde::Serialize;

use crate::automata::{accessible_reversal, Dfa};
use crate::error::{Error, Result};
use crate::lang::{reversed, Word};
use crate::monoid::{transition_monoid, FiniteMonoid};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Suschkevitch {
    /// Index of the idempotent `e` in the transition monoid.
    pub e: usize,
    /// A word `x` with `e = φ(x)^ω`.
    pub word: Word,
    /// Nonzero elements of `eMe`, sorted.
    pub group: Vec<usize>,
}

/// `i·e = i` and `q·e ∈ T ⇔ q ∈ T`.
fn fixes_i_and_t(m: &FiniteMonoid, dfa: &Dfa, e: usize) -> bool {
    let i = dfa.initial().expect("trim automaton");
    let t = m.element(e);
    t.apply(i) == Some(i)
        && (0..dfa.state_count()).all(|q| t.apply(q).is_some_and(|r| dfa.is_final(r)) == dfa.is_final(q))
}

/// Idempotent `e` with `i·e = i`, `eT = T` and `eMe = G ∪ 0` for the minimal
/// automaton of a birecurrent set, found by the constructive route: take `w` of
/// minimal nonzero rank, extend it to `w' = wu` with `i` in its image, prefix it
/// with `ṽ` so that `T` is fixed in the reversed automaton, and take the
/// idempotent power of `ṽw'`.
pub fn suschkevitch_idempotent(dfa: &Dfa) -> Result<(FiniteMonoid, Suschkevitch)> {
    let m = transition_monoid(dfa)?;
    let s = suschkevitch_in(&m, dfa)?;
    Ok((m, s))
}

pub(crate) fn suschkevitch_in(m: &FiniteMonoid, dfa: &Dfa) -> Result<Suschkevitch> {
    let rev = accessible_reversal(dfa)?;
    let i = dfa.initial().expect("trim automaton");
    let rank = (0..m.len()).map(|x| m.rank(x)).filter(|&r| r > 0).min().unwrap_or(0);

    let mut found = None;
    for w in (0..m.len()).filter(|&x| m.rank(x) == rank) {
        let Some(u) = m.element(w).image().into_iter().find_map(|q| dfa.shortest_path(q, i)) else {
            continue;
        };
        let mut w1 = m.word(w);
        w1.extend(u);
        // U = T·w̃' in the reversed automaton
        let Some(big_u) = rev.dfa.run_from(0, &reversed(&w1)) else {
            continue;
        };
        let Some(v) = rev.dfa.shortest_path(big_u, 0) else {
            continue;
        };
        let mut x = reversed(&v);
        x.extend(w1);
        let e = m.omega(m.element_of(&x));
        if fixes_i_and_t(m, dfa, e) {
            found = Some((e, x));
            break;
        }
    }
    let (e, word) = match found {
        Some(f) => f,
        None => {
            // exhaustive fallback over idempotents of minimal nonzero rank
            let e = (0..m.len())
                .find(|&x| m.rank(x) == rank && m.is_idempotent(x) && fixes_i_and_t(m, dfa, x))
                .ok_or_else(|| {
                    Error::NoSuschkevitchIdempotent(
                        "no idempotent of minimal nonzero rank fixes i and T".into(),
                    )
                })?;
            (e, m.word(e))
        }
    };
    let group: BTreeSet<usize> = (0..m.len())
        .map(|x| m.mul(m.mul(e, x), e))
        .filter(|&y| m.rank(y) > 0)
        .collect();
    let group: Vec<usize> = group.into_iter().collect();
    // the nonzero part of eMe must be a group with identity e
    let closed = group.iter().all(|&g| {
        group.iter().all(|&h| m.rank(m.mul(g, h)) > 0) && group.iter().any(|&h| m.mul(g, h) == e)
    });
    if !closed {
        return Err(Error::NoSuschkevitchIdempotent(format!(
            "eMe minus zero is not a group for e = {}",
            m.render(e)
        )));
    }
    Ok(Suschkevitch { e, word, group })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::automata::fixtures::*;
    use crate::lang::{parse_regex, Alphabet};

    #[test]
    fn weakly_idempotent_is_b_squared() {
        let d = weakly();
        let (m, s) = suschkevitch_idempotent(&d).unwrap();
        assert_eq!(s.e, m.element_of(&[1, 1]));
        assert_eq!(s.group.len(), 2);
        let g = *s.group.iter().find(|&&g| g != s.e).unwrap();
        assert_eq!(m.mul(g, g), s.e);
        assert_eq!(m.omega(m.element_of(&s.word)), s.e);
    }

    #[test]
    fn bifix_star() {
        let d = compile(&parse_regex("(aa+ab+ba+bb)*", None).unwrap(), &Alphabet::parse("ab").unwrap())
            .unwrap();
        let (m, s) = suschkevitch_idempotent(&d).unwrap();
        // exhaustive oracle: e must be among idempotents fixing i and T
        let i = d.initial().unwrap();
        let t = m.element(s.e);
        assert!(m.is_idempotent(s.e));
        assert_eq!(t.apply(i), Some(i));
        for q in 0..d.state_count() {
            assert_eq!(t.apply(q).is_some_and(|r| d.is_final(r)), d.is_final(q));
        }
    }

    #[test]
    fn single_state() {
        let d = Dfa::universal(Alphabet::parse("a").unwrap());
        let (m, s) = suschkevitch_idempotent(&d).unwrap();
        assert_eq!(s.e, m.identity());
        assert_eq!(s.group, vec![m.identity()]);
    }

    #[test]
    fn not_trim_is_rejected() {
        let d = Dfa::new(Alphabet::parse("a").unwrap(), 2, Some(0), [0], [(0, 0, 0)]).unwrap();
        assert_eq!(suschkevitch_idempotent(&d).unwrap_err(), Error::NotTrim);
    }
}
