//! Language classes: recurrent and birecurrent sets, cyclic and strongly
//! cyclic sets, the repeating condition, one-letter periodicity and the
//! character criterion on monoids.

use serde::Serialize;

use crate::automata::{accessible_reversal, equivalent, is_strongly_connected, minimize, Dfa};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lang::Word;
use crate::monoid::{syntactic_monoid_capped, transition_monoid_capped, FiniteMonoid, SyntacticMonoid};
use crate::poly::{minimal_polynomial, poly_gcd_squarefree};
use crate::representation::syntactic_rep;

/// The minimal automaton is strongly connected.
pub fn is_recurrent(dfa: &Dfa) -> Result<bool> {
    let m = minimize(dfa);
    if m.state_count() == 0 {
        return Err(Error::EmptyLanguage);
    }
    is_strongly_connected(&m)
}

/// `X` and its reversal are recurrent.
pub fn is_birecurrent(dfa: &Dfa) -> Result<bool> {
    let m = minimize(dfa);
    if m.state_count() == 0 {
        return Err(Error::EmptyLanguage);
    }
    Ok(is_strongly_connected(&m)? && is_strongly_connected(&accessible_reversal(&m)?.dfa)?)
}

/// Cyclicity checked on the syntactic monoid `(M, P)`: `uv ∈ P ⇔ vu ∈ P`, and
/// every power of `m` agrees with `m` on `P`. The empty set is cyclic.
pub fn is_cyclic(dfa: &Dfa) -> Result<bool> {
    is_cyclic_capped(dfa, Config::default().monoid_cap)
}

pub fn is_cyclic_capped(dfa: &Dfa, cap: usize) -> Result<bool> {
    let sm = match syntactic_monoid_capped(dfa, cap) {
        Ok(sm) => sm,
        Err(Error::EmptyLanguage) => return Ok(true),
        Err(e) => return Err(e),
    };
    let m = &sm.monoid;
    let i = sm.initial();
    let state: Vec<Option<usize>> = m.elements().iter().map(|t| t.apply(i)).collect();
    let in_p = |s: Option<usize>, v: usize| s.and_then(|q| m.element(v).apply(q)).is_some_and(|q| sm.minimal.is_final(q));
    for u in 0..m.len() {
        for v in 0..m.len() {
            if in_p(state[u], v) != in_p(state[v], u) {
                return Ok(false);
            }
        }
    }
    for x in 0..m.len() {
        let member = sm.is_accepting(x);
        let mut p = m.mul(x, x);
        let mut seen = vec![x];
        while !seen.contains(&p) {
            if sm.is_accepting(p) != member {
                return Ok(false);
            }
            seen.push(p);
            p = m.mul(p, x);
        }
    }
    Ok(true)
}

/// Cyclically nonzero words of `dfa`: `x` such that `Q·x^n ≠ ∅` for all `n`,
/// recognized through the transition monoid with `P = {m : m^ω ≠ 0}`.
/// Initial and final states of `dfa` are ignored.
pub fn strongly_cyclic_language(dfa: &Dfa, cfg: &Config) -> Result<Dfa> {
    let m = transition_monoid_capped(dfa, cfg.monoid_cap)?;
    let k = m.alphabet().len();
    let finals: Vec<usize> = (0..m.len()).filter(|&x| !m.element(m.omega(x)).is_zero()).collect();
    let transitions =
        (0..m.len()).flat_map(|x| (0..k).map(move |a| (x, a))).map(|(x, a)| (x, a, m.right_mul_letter(x, a)));
    let d = Dfa::new(m.alphabet().clone(), m.len(), Some(m.identity()), finals, transitions.collect::<Vec<_>>())?;
    Ok(minimize(&d))
}

/// Whether `X` is the set of cyclically nonzero words of its own minimal
/// automaton. This is sufficient for being strongly cyclic, not necessary.
/// The empty set is the set of cyclically nonzero words of the automaton
/// without states.
pub fn is_strongly_cyclic_heuristic(dfa: &Dfa, cfg: &Config) -> Result<bool> {
    let m = minimize(dfa);
    if m.state_count() == 0 {
        return Ok(true);
    }
    equivalent(&m, &strongly_cyclic_language(&m, cfg)?)
}

/// For every `x ∈ X` some `xuxv` lies in `X`. Otherwise returns the shortest
/// `x` with `xA*xA* ∩ X = ∅`.
pub fn is_repeating(dfa: &Dfa) -> Result<(bool, Option<Word>)> {
    is_repeating_capped(dfa, Config::default().monoid_cap)
}

pub fn is_repeating_capped(dfa: &Dfa, cap: usize) -> Result<(bool, Option<Word>)> {
    let sm = match syntactic_monoid_capped(dfa, cap) {
        Ok(sm) => sm,
        Err(Error::EmptyLanguage) => return Ok((true, None)),
        Err(e) => return Err(e),
    };
    Ok(match repeating_failure(&sm) {
        Some(x) => (false, Some(sm.monoid.word(x))),
        None => (true, None),
    })
}

/// In a trim automaton `xuxv ∈ X` for some `v` iff `i·xux` is defined.
fn repeating_failure(sm: &SyntacticMonoid) -> Option<usize> {
    let m = &sm.monoid;
    let i = sm.initial();
    (0..m.len()).filter(|&x| sm.is_accepting(x)).find(|&x| {
        let t = m.element(x);
        let s = t.apply(i).expect("accepting");
        let reach = sm.minimal.reachable_from(s);
        !(0..reach.len()).any(|r| reach[r] && t.apply(r).is_some())
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneLetterReport {
    pub field: String,
    /// Length of the path from the initial state to the cycle of the
    /// complete minimal automaton.
    pub index: usize,
    pub period: usize,
    /// `X ∩ a⁺` is periodic.
    pub periodic: bool,
    /// Periodic and the characteristic does not divide the period.
    pub completely_reducible: bool,
    /// The minimal polynomial of `ψ(a)` is squarefree.
    pub squarefree: bool,
}

impl OneLetterReport {
    pub fn consistent(&self) -> bool {
        self.completely_reducible == self.squarefree
    }
}

/// Index, period and the complete reducibility criterion for a language over
/// one letter, with the minimal polynomial test alongside.
pub fn one_letter_classify<F: Field>(dfa: &Dfa) -> Result<OneLetterReport> {
    if dfa.alphabet().len() != 1 {
        return Err(Error::NotOneLetter(dfa.alphabet().len()));
    }
    let m = minimize(dfa);
    let Some(start) = m.initial() else {
        return Err(Error::EmptyLanguage);
    };
    // walk a^k; None stands for the sink
    let mut path: Vec<Option<usize>> = vec![Some(start)];
    let (index, period) = loop {
        let next = path.last().copied().flatten().and_then(|q| m.next(q, 0));
        if let Some(pos) = path.iter().position(|&s| s == next) {
            break (pos, path.len() - pos);
        }
        path.push(next);
    };
    let member = |k: usize| {
        let s = if k < path.len() { path[k] } else { path[index + (k - index) % period] };
        s.is_some_and(|q| m.is_final(q))
    };
    let periodic = (1..=index + period).all(|k| member(k) == member(k + period));
    let p = F::characteristic();
    let completely_reducible = periodic && (p == 0 || !(period as u64).is_multiple_of(p));
    let rep = syntactic_rep::<F>(&m)?.rep;
    let squarefree = poly_gcd_squarefree(&minimal_polynomial(rep.mu(0))?)?;
    Ok(OneLetterReport { field: F::name(), index, period, periodic, completely_reducible, squarefree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McAlisterReport {
    /// `f(xy) = f(yx)` for all `x, y`.
    pub conjugation_invariant: bool,
    /// `f(x^ω x) = f(x)` for all `x`.
    pub omega_invariant: bool,
    /// Elements violating the first failing condition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

impl McAlisterReport {
    pub fn holds(&self) -> bool {
        self.conjugation_invariant && self.omega_invariant
    }
}

/// Checks the two conditions characterizing linear combinations of
/// irreducible characters of `m` (characteristic 0) for `f` given per element.
pub fn mcalister_check<F: Field>(m: &FiniteMonoid, f: &[F]) -> Result<McAlisterReport> {
    if F::characteristic() != 0 {
        return Err(Error::WrongCharacteristic { expected: "0".into(), actual: F::characteristic() });
    }
    if f.len() != m.len() {
        return Err(Error::DimensionMismatch(format!("{} values for {} elements", f.len(), m.len())));
    }
    let mut counterexample = None;
    let mut conj = true;
    'outer: for x in 0..m.len() {
        for y in x + 1..m.len() {
            if f[m.mul(x, y)] != f[m.mul(y, x)] {
                conj = false;
                counterexample = Some(vec![m.render(x), m.render(y)]);
                break 'outer;
            }
        }
    }
    let bad = (0..m.len()).find(|&x| f[m.mul(m.omega(x), x)] != f[x]);
    if counterexample.is_none() {
        counterexample = bad.map(|x| vec![m.render(x)]);
    }
    Ok(McAlisterReport { conjugation_invariant: conj, omega_invariant: bad.is_none(), counterexample })
}

/// Indicator of `P` on the syntactic monoid.
pub fn indicator<F: Field>(sm: &SyntacticMonoid) -> Vec<F> {
    sm.accepting.iter().map(|&b| if b { F::one() } else { F::zero() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub recurrent: bool,
    pub birecurrent: bool,
    pub cyclic: bool,
    /// `X` is the set of cyclically nonzero words of its own minimal
    /// automaton (a sufficient condition only).
    pub strongly_cyclic_heuristic: bool,
    pub repeating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_repeating_witness: Option<String>,
    /// Facts about the cyclically nonzero words of the input automaton.
    pub cyclically_nonzero: CyclicallyNonzero,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_letter: Option<OneLetterReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicallyNonzero {
    pub states: usize,
    pub cyclic: bool,
}

pub fn classify(dfa: &Dfa, cfg: &Config) -> Result<ClassificationReport> {
    let m = minimize(dfa);
    if m.state_count() == 0 {
        return Err(Error::EmptyLanguage);
    }
    let (repeating, witness) = is_repeating_capped(&m, cfg.monoid_cap)?;
    let birecurrent = is_birecurrent(&m)?;
    let recurrent = is_recurrent(&m)?;
    debug_assert!(!birecurrent || recurrent);
    let scl = strongly_cyclic_language(dfa, cfg)?;
    let one_letter = if m.alphabet().len() == 1 { Some(one_letter_classify::<crate::Rational>(&m)?) } else { None };
    Ok(ClassificationReport {
        recurrent,
        birecurrent,
        cyclic: is_cyclic_capped(&m, cfg.monoid_cap)?,
        strongly_cyclic_heuristic: is_strongly_cyclic_heuristic(&m, cfg)?,
        repeating,
        not_repeating_witness: witness.map(|w| m.alphabet().render(&w)),
        cyclically_nonzero: CyclicallyNonzero { states: scl.state_count(), cyclic: is_cyclic_capped(&scl, cfg.monoid_cap)? },
        one_letter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::*;
    use crate::automata::compile;
    use crate::lang::{parse_regex, words_up_to, Alphabet};
    use crate::monoid::syntactic_monoid;
    use crate::{Fp, Rational};

    type Q = Rational;

    fn dfa(x: &str, al: &str) -> Dfa {
        compile(&parse_regex(x, None).unwrap(), &Alphabet::parse(al).unwrap()).unwrap()
    }

    /// `Q·x^n ≠ ∅` for `n ≤ |Q|`, by direct simulation.
    fn cyclically_nonzero(d: &Dfa, x: &[usize]) -> bool {
        let n = d.state_count();
        let mut alive: Vec<usize> = (0..n).collect();
        for _ in 0..=n {
            alive = alive.into_iter().filter_map(|q| d.run_from(q, x)).collect();
            alive.sort_unstable();
            alive.dedup();
            if alive.is_empty() {
                return false;
            }
        }
        true
    }

    #[test]
    fn birecurrence() {
        assert!(is_birecurrent(&dfa("(a+ba)*", "ab")).unwrap());
        assert!(is_birecurrent(&weakly()).unwrap());
        assert!(!is_birecurrent(&dfa("ab*", "ab")).unwrap());
        assert_eq!(is_birecurrent(&dfa("0", "ab")).unwrap_err(), Error::EmptyLanguage);
        // the weakly set is not a submonoid: 1 ∈ X but aa ∉ X
        let w = weakly();
        assert!(w.accepts(&[]) && w.accepts(&[0]) && !w.accepts(&[0, 0]));
        // the star of a prefix code is recurrent
        let x = dfa("(b+ab)*", "ab");
        assert!(is_recurrent(&x).unwrap());
    }

    #[test]
    fn cyclicity() {
        assert!(is_cyclic(&dfa("(a+b)*a(a+b)*", "ab")).unwrap());
        assert!(!is_cyclic(&dfa("a", "ab")).unwrap());
        assert!(!is_cyclic(&even()).unwrap());
        for x in ["0", "1", "aa*", "a*"] {
            assert!(is_cyclic(&dfa(x, "a")).unwrap(), "{x}");
        }
        // among subsets of a*, only these four are cyclic
        for x in ["a", "(aa)*", "1+a", "a(aa)*"] {
            assert!(!is_cyclic(&dfa(x, "a")).unwrap(), "{x}");
        }
    }

    #[test]
    fn even_cyclically_nonzero_words() {
        let x = strongly_cyclic_language(&even(), &Config::default()).unwrap();
        let displayed = dfa("a* + (aa)*b(aa+b)* + a(aa)*b(aa+b)*a", "ab");
        assert!(equivalent(&x, &displayed).unwrap());
        assert_eq!(x.state_count(), 6);
        assert!(is_cyclic(&x).unwrap());
        for w in words_up_to(2, 6) {
            assert_eq!(x.accepts(&w), cyclically_nonzero(&even(), &w));
        }
    }

    #[test]
    fn cyclically_nonzero_trivial_and_partial() {
        let one = Dfa::universal(Alphabet::parse("ab").unwrap());
        assert!(equivalent(&strongly_cyclic_language(&one, &Config::default()).unwrap(), &one).unwrap());
        // b is nowhere defined
        let d = Dfa::new(Alphabet::parse("ab").unwrap(), 3, Some(0), [0], [(0, 0, 1), (1, 0, 2), (2, 0, 0)]).unwrap();
        let x = strongly_cyclic_language(&d, &Config::default()).unwrap();
        for w in words_up_to(2, 6) {
            assert_eq!(x.accepts(&w), cyclically_nonzero(&d, &w));
            if x.accepts(&w) {
                assert!(!w.contains(&1));
            }
        }
    }

    #[test]
    fn repeating() {
        assert_eq!(is_repeating(&dfa("ab*", "ab")).unwrap(), (false, Some(vec![0])));
        assert_eq!(is_repeating(&dfa("(ab)*", "ab")).unwrap(), (true, None));
        assert_eq!(is_repeating(&dfa("(a+b)*", "ab")).unwrap(), (true, None));
        assert!(!is_repeating(&dfa("a", "a")).unwrap().0);
    }

    /// Repeating straight from the definition on short words.
    fn repeating_oracle(d: &Dfa, len: usize) -> bool {
        let words = words_up_to(d.alphabet().len(), len);
        words.iter().filter(|x| d.accepts(x)).all(|x| {
            words.iter().any(|u| {
                words.iter().any(|v| {
                    let w: Vec<usize> = x.iter().chain(u).chain(x.iter()).chain(v).copied().collect();
                    d.accepts(&w)
                })
            })
        })
    }

    #[test]
    fn repeating_matches_definition() {
        for x in ["ab*", "(ab)*", "a(a+b)*", "(a+b)*b", "b*a", "aab+ba*"] {
            let d = dfa(x, "ab");
            assert_eq!(is_repeating(&d).unwrap().0, repeating_oracle(&d, 3), "{x}");
        }
    }

    #[test]
    fn one_letter() {
        let r = one_letter_classify::<Q>(&dfa("(aa)*", "a")).unwrap();
        assert_eq!((r.periodic, r.period, r.completely_reducible), (true, 2, true));
        assert!(r.consistent());
        let r = one_letter_classify::<Fp<2>>(&dfa("(aa)*", "a")).unwrap();
        assert!(!r.completely_reducible && !r.squarefree);
        let r = one_letter_classify::<Q>(&dfa("a", "a")).unwrap();
        assert!(!r.periodic && !r.completely_reducible && r.consistent());
        let r = one_letter_classify::<Q>(&dfa("1", "a")).unwrap();
        assert!(r.periodic && r.completely_reducible && r.consistent());
        let r = one_letter_classify::<Q>(&dfa("aaa(aaaa)*", "a")).unwrap();
        assert_eq!((r.index, r.period, r.periodic), (0, 4, true));
        let r = one_letter_classify::<Q>(&dfa("1+aa(aaa)*", "a")).unwrap();
        assert_eq!((r.index, r.period, r.periodic), (1, 3, true));
        let r = one_letter_classify::<Q>(&dfa("a+aa(aa)*", "a")).unwrap();
        assert_eq!((r.index, r.period, r.periodic), (2, 2, false));
        assert!(r.consistent());
        assert!(matches!(one_letter_classify::<Q>(&dfa("a", "ab")), Err(Error::NotOneLetter(2))));
    }

    #[test]
    fn mcalister() {
        let sm = syntactic_monoid(&dfa("(a+b)*a(a+b)*", "ab")).unwrap();
        assert!(mcalister_check::<Q>(&sm.monoid, &indicator(&sm)).unwrap().holds());
        let sm = syntactic_monoid(&dfa("a", "a")).unwrap();
        let r = mcalister_check::<Q>(&sm.monoid, &indicator(&sm)).unwrap();
        assert!(r.conjugation_invariant && !r.omega_invariant);
        assert_eq!(r.counterexample, Some(vec!["a".to_string()]));
        let ones = vec![Q::from_integer(1.into()); sm.monoid.len()];
        assert!(mcalister_check(&sm.monoid, &ones).unwrap().holds());
    }

    #[test]
    fn report_flags() {
        let r = classify(&even(), &Config::default()).unwrap();
        assert!(r.recurrent && !r.cyclic);
        assert!(r.cyclically_nonzero.cyclic);
        assert_eq!(r.cyclically_nonzero.states, 6);
        let r = classify(&dfa("ab*", "ab"), &Config::default()).unwrap();
        assert_eq!(r.not_repeating_witness.as_deref(), Some("a"));
        assert!(!r.birecurrent);
    }
}
