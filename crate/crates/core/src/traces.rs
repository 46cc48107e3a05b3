//! External powers of automata and the alternating trace formula for sets of
//! cyclically nonzero words.

use serde::Serialize;

use crate::automata::{boolean_combine, equivalent, BoolOp, Dfa};
use crate::classify::{is_strongly_cyclic_heuristic, strongly_cyclic_language};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::lang::{words_up_to, Alphabet, Letter};

/// The external power of order `k`: states are the `k`-subsets of the source
/// states in colexicographic order, and a letter sends `P` to the sorted image
/// `R` of `P` with the signature of the sorting permutation, when the image
/// has `k` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedAutomaton {
    k: usize,
    alphabet: Alphabet,
    subsets: Vec<Vec<usize>>,
    /// `delta[s * letters + a]`
    delta: Vec<Option<(usize, i8)>>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of a sorted subset in colex order.
fn colex_rank(s: &[usize]) -> usize {
    s.iter().enumerate().map(|(i, &p)| binomial(p, i + 1)).sum()
}

fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance the lowest position that can move
        let Some(i) = (0..k).find(|&i| cur[i] + 1 < cur.get(i + 1).copied().unwrap_or(n)) else {
            return out;
        };
        cur[i] += 1;
        for (j, c) in cur.iter_mut().enumerate().take(i) {
            *c = j;
        }
    }
}

/// Sign of the permutation sorting `v` (distinct entries).
fn sorting_sign(v: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl SignedAutomaton {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset(&self, s: usize) -> &[usize] {
        &self.subsets[s]
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn next(&self, s: usize, a: Letter) -> Option<(usize, i8)> {
        self.delta[s * self.alphabet.len() + a]
    }

    /// Entry `(s, t)` of the matrix of letter `a`.
    pub fn entry(&self, s: usize, a: Letter, t: usize) -> i8 {
        match self.next(s, a) {
            Some((u, sign)) if u == t => sign,
            _ => 0,
        }
    }

    /// Trace of the product of the letter matrices along `w`.
    pub fn trace(&self, w: &[Letter]) -> i64 {
        (0..self.state_count())
            .filter_map(|s| {
                let mut cur = s;
                let mut sign = 1i64;
                for &a in w {
                    let (t, e) = self.next(cur, a)?;
                    cur = t;
                    sign *= i64::from(e);
                }
                (cur == s).then_some(sign)
            })
            .sum()
    }

    pub fn to_report(&self) -> SignedAutomatonReport {
        let letters = self.alphabet.len();
        let transitions = (0..self.state_count())
            .flat_map(|s| (0..letters).map(move |a| (s, a)))
            .filter_map(|(s, a)| {
                self.next(s, a).map(|(t, sign)| SignedTransition {
                    from: s,
                    letter: self.alphabet.symbol(a),
                    to: t,
                    sign,
                })
            })
            .collect();
        SignedAutomatonReport { order: self.k, states: self.subsets.clone(), transitions }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedTransition {
    pub from: usize,
    pub letter: char,
    pub to: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedAutomatonReport {
    pub order: usize,
    pub states: Vec<Vec<usize>>,
    pub transitions: Vec<SignedTransition>,
}

pub fn external_power(dfa: &Dfa, k: usize) -> Result<SignedAutomaton> {
    let n = dfa.state_count();
    if k == 0 || k > n {
        return Err(Error::OrderOutOfRange { k, n });
    }
    let letters = dfa.alphabet().len();
    let subsets = colex_subsets(n, k);
    let mut delta = Vec::with_capacity(subsets.len() * letters);
    for p in &subsets {
        for a in 0..letters {
            let image: Option<Vec<usize>> = p.iter().map(|&q| dfa.next(q, a)).collect();
            delta.push(image.and_then(|img| {
                let sign = sorting_sign(&img);
                let mut sorted = img;
                sorted.sort_unstable();
                let before = sorted.len();
                sorted.dedup();
                (sorted.len() == before).then(|| (colex_rank(&sorted), sign))
            }));
        }
    }
    Ok(SignedAutomaton { k, alphabet: dfa.alphabet().clone(), subsets, delta })
}

/// Signed count of the `k`-subsets permuted by `w`.
pub fn trace_k(dfa: &Dfa, k: usize, w: &[Letter]) -> Result<i64> {
    Ok(external_power(dfa, k)?.trace(w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceIdentityReport {
    pub words_checked: usize,
    pub max_len: usize,
    pub holds: bool,
    /// First word where the alternating sum differs from membership, with
    /// both values.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(String, i64, bool)>,
}

/// Checks `1(x ∈ X) = Σ_k (-1)^(k+1) Trace_k(x)` for all words up to
/// `max_len`, where `X` is the set of cyclically nonzero words of `dfa`.
pub fn verify_trace_identity(dfa: &Dfa, max_len: usize, cfg: &Config) -> Result<TraceIdentityReport> {
    let n = dfa.state_count();
    let x = if n == 0 { Dfa::empty(dfa.alphabet().clone()) } else { strongly_cyclic_language(dfa, cfg)? };
    let powers: Vec<SignedAutomaton> = (1..=n).map(|k| external_power(dfa, k)).collect::<Result<_>>()?;
    let words = words_up_to(dfa.alphabet().len(), max_len);
    for w in &words {
        let sum: i64 = powers
            .iter()
            .map(|p| if p.order() % 2 == 1 { p.trace(w) } else { -p.trace(w) })
            .sum();
        let member = x.accepts(w);
        if sum != i64::from(member) {
            return Ok(TraceIdentityReport {
                words_checked: words.len(),
                max_len,
                holds: false,
                counterexample: Some((dfa.alphabet().render(w), sum, member)),
            });
        }
    }
    Ok(TraceIdentityReport { words_checked: words.len(), max_len, holds: true, counterexample: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub max_size: usize,
    pub permutations: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Signature of `π` restricted to the invariant set `r` (a bit mask).
fn restricted_sign(pi: &[usize], r: u32) -> i64 {
    let mut seen = 0u32;
    let mut sign = 1;
    for s in 0..pi.len() {
        if r & (1 << s) == 0 || seen & (1 << s) != 0 {
            continue;
        }
        let mut len = 0;
        let mut q = s;
        while seen & (1 << q) == 0 {
            seen |= 1 << q;
            q = pi[q];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// For every permutation `π` of a set of size at most `max_size`, the sum of
/// `(-1)^(|R|+1) ε(π|R)` over the nonempty `π`-invariant subsets `R` is 1.
/// Invariant subsets are found by testing all subsets.
pub fn permutation_lemma_oracle(max_size: usize) -> Result<LemmaReport> {
    if max_size > 8 {
        return Err(Error::Unsupported(format!("ground sets above 8 points (asked {max_size})")));
    }
    let mut count = 0;
    for n in 1..=max_size {
        let mut pi: Vec<usize> = (0..n).collect();
        loop {
            count += 1;
            let mut sum = 0i64;
            for r in 1u32..(1 << n) {
                let image = (0..n).filter(|&s| r & (1 << s) != 0).fold(0u32, |acc, s| acc | (1 << pi[s]));
                if image == r {
                    let parity = if r.count_ones() % 2 == 1 { 1 } else { -1 };
                    sum += parity * restricted_sign(&pi, r);
                }
            }
            if sum != 1 {
                return Ok(LemmaReport { max_size, permutations: count, holds: false, counterexample: Some(pi) });
            }
            if !next_permutation(&mut pi) {
                break;
            }
        }
    }
    Ok(LemmaReport { max_size, permutations: count, holds: true, counterexample: None })
}

/// A decreasing chain `X1 ⊇ X2 ⊇ ... ⊇ Xn`.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    links: Vec<Dfa>,
}

impl ChainSpec {
    pub fn new(links: Vec<Dfa>) -> Result<Self> {
        for i in 1..links.len() {
            let outside = boolean_combine(BoolOp::Difference, &links[i], Some(&links[i - 1]))?;
            if outside.state_count() != 0 {
                return Err(Error::NestingViolated(i, i + 1));
            }
        }
        Ok(ChainSpec { links })
    }

    pub fn links(&self) -> &[Dfa] {
        &self.links
    }
}

/// `(X1 - X2) ∪ (X3 - X4) ∪ ...`
pub fn chain_evaluate(chain: &ChainSpec) -> Result<Dfa> {
    let Some(first) = chain.links.first() else {
        return Err(Error::DimensionMismatch("empty chain".into()));
    };
    let mut acc = Dfa::empty(first.alphabet().clone());
    for pair in chain.links.chunks(2) {
        let part = match pair {
            [x, y] => boolean_combine(BoolOp::Difference, x, Some(y))?,
            [x] => x.clone(),
            _ => unreachable!(),
        };
        acc = boolean_combine(BoolOp::Union, &acc, Some(&part))?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub equal: bool,
    /// `1(target) = Σ (-1)^(i+1) 1(Xi)` on every word checked.
    pub alternating_sum: bool,
    pub words_checked: usize,
    /// Links (1-based) not recognized as strongly cyclic.
    pub not_strongly_cyclic: Vec<usize>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.equal && self.alternating_sum
    }
}

pub fn chain_verify(chain: &ChainSpec, target: &Dfa, max_len: usize, cfg: &Config) -> Result<ChainReport> {
    let value = chain_evaluate(chain)?;
    let equal = equivalent(&value, target)?;
    let words = words_up_to(target.alphabet().len(), max_len);
    let alternating_sum = words.iter().all(|w| {
        let s: i64 = chain
            .links
            .iter()
            .enumerate()
            .map(|(i, x)| if !x.accepts(w) { 0 } else if i % 2 == 0 { 1 } else { -1 })
            .sum();
        s == i64::from(target.accepts(w))
    });
    let mut not_strongly_cyclic = Vec::new();
    for (i, x) in chain.links.iter().enumerate() {
        if !is_strongly_cyclic_heuristic(x, cfg)? {
            not_strongly_cyclic.push(i + 1);
        }
    }
    Ok(ChainReport { equal, alternating_sum, words_checked: words.len(), not_strongly_cyclic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::automata::fixtures::*;
    use crate::lang::parse_regex;
    use proptest::prelude::*;

    fn dfa(x: &str, al: &str) -> Dfa {
        compile(&parse_regex(x, None).unwrap(), &Alphabet::parse(al).unwrap()).unwrap()
    }

    #[test]
    fn colex_order() {
        assert_eq!(colex_subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        for (i, s) in colex_subsets(6, 3).iter().enumerate() {
            assert_eq!(colex_rank(s), i);
        }
        assert_eq!(colex_subsets(5, 5).len(), 1);
    }

    #[test]
    fn even_second_power_is_a_signed_loop() {
        let p = external_power(&even(), 2).unwrap();
        assert_eq!(p.state_count(), 1);
        assert_eq!(p.next(0, 0), Some((0, -1)));
        assert_eq!(p.next(0, 1), None);
        assert_eq!(trace_k(&even(), 2, &[0]).unwrap(), -1);
        assert_eq!(trace_k(&even(), 1, &[1]).unwrap(), 1);
        assert_eq!(trace_k(&even(), 2, &[]).unwrap(), 1);
        assert_eq!(trace_k(&weakly(), 2, &[]).unwrap(), 6);
    }

    #[test]
    fn first_power_is_the_transition_matrix() {
        let d = weakly();
        let p = external_power(&d, 1).unwrap();
        for q in 0..4 {
            for a in 0..2 {
                for r in 0..4 {
                    let expected = i8::from(d.next(q, a) == Some(r));
                    assert_eq!(p.entry(q, a, r), expected);
                }
            }
        }
    }

    #[test]
    fn top_power_of_permutations() {
        // a is a 3-cycle (even), b a transposition (odd)
        let d = Dfa::new(
            Alphabet::parse("ab").unwrap(),
            3,
            Some(0),
            [0],
            [(0, 0, 1), (1, 0, 2), (2, 0, 0), (0, 1, 1), (1, 1, 0), (2, 1, 2)],
        )
        .unwrap();
        let p = external_power(&d, 3).unwrap();
        assert_eq!(p.next(0, 0), Some((0, 1)));
        assert_eq!(p.next(0, 1), Some((0, -1)));
        assert!(matches!(external_power(&d, 4), Err(Error::OrderOutOfRange { k: 4, n: 3 })));
        assert!(matches!(external_power(&d, 0), Err(Error::OrderOutOfRange { .. })));
    }

    #[test]
    fn trace_identity_on_small_automata() {
        let r = verify_trace_identity(&even(), 8, &Config::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.words_checked, 511);
        let loop_a = Dfa::universal(Alphabet::parse("a").unwrap());
        let r = verify_trace_identity(&loop_a, 5, &Config::default()).unwrap();
        assert!(r.holds);
        for len in 0..=5 {
            assert_eq!(trace_k(&loop_a, 1, &vec![0; len]).unwrap(), 1);
        }
    }

    #[test]
    fn lemma_oracle() {
        let r = permutation_lemma_oracle(6).unwrap();
        assert!(r.holds);
        assert_eq!(r.permutations, 873);
        assert!(permutation_lemma_oracle(9).is_err());
        // identity on 3 points: the 7 subsets give 3 - 3 + 1
        assert_eq!(restricted_sign(&[0, 1, 2], 0b111), 1);
        assert_eq!(restricted_sign(&[1, 0], 0b11), -1);
    }

    #[test]
    fn chains() {
        let ab = "ab";
        let all = dfa("(a+b)*", ab);
        let none = Dfa::empty(Alphabet::parse(ab).unwrap());
        let c = ChainSpec::new(vec![all.clone(), none.clone()]).unwrap();
        assert!(equivalent(&chain_evaluate(&c).unwrap(), &all).unwrap());
        let x = strongly_cyclic_language(&even(), &Config::default()).unwrap();
        let single = ChainSpec::new(vec![x.clone()]).unwrap();
        assert!(equivalent(&chain_evaluate(&single).unwrap(), &x).unwrap());
        let c = ChainSpec::new(vec![all.clone(), all.clone(), x.clone()]).unwrap();
        let r = chain_verify(&c, &x, 6, &Config::default()).unwrap();
        assert!(r.holds());
        assert!(r.not_strongly_cyclic.is_empty());
        assert_eq!(ChainSpec::new(vec![none, all]).unwrap_err(), Error::NestingViolated(1, 2));
    }

    fn arb_partial_dfa() -> impl Strategy<Value = Dfa> {
        (1usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(proptest::option::of(0..n), 2 * n).prop_map(move |t| {
                let transitions: Vec<(usize, usize, usize)> = t
                    .iter()
                    .enumerate()
                    .filter_map(|(i, r)| r.map(|r| (i / 2, i % 2, r)))
                    .collect();
                Dfa::new(Alphabet::parse("ab").unwrap(), n, Some(0), [0], transitions).unwrap()
            })
        })
    }

    /// Relabels source states by `perm`.
    fn relabel(d: &Dfa, perm: &[usize]) -> Dfa {
        let t: Vec<(usize, usize, usize)> = d.transitions().map(|(p, a, q)| (perm[p], a, perm[q])).collect();
        Dfa::new(d.alphabet().clone(), d.state_count(), d.initial().map(|i| perm[i]), d.final_states().map(|q| perm[q]).collect::<Vec<_>>(), t)
            .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn identity_and_sign_facts(d in arb_partial_dfa()) {
            let cfg = Config::default();
            prop_assert!(verify_trace_identity(&d, 6, &cfg).unwrap().holds);
            let x = strongly_cyclic_language(&d, &cfg).unwrap();
            let n = d.state_count();
            for w in words_up_to(2, 5) {
                let traces: Vec<i64> = (1..=n).map(|k| trace_k(&d, k, &w).unwrap()).collect();
                let s: i64 = traces.iter().enumerate().map(|(i, t)| if i % 2 == 0 { *t } else { -t }).sum();
                prop_assert!(s == 0 || s == 1);
                if !x.accepts(&w) {
                    prop_assert!(traces.iter().all(|&t| t == 0));
                }
            }
        }

        #[test]
        fn traces_ignore_state_names(d in arb_partial_dfa(), seed in 0u64..1000) {
            let n = d.state_count();
            let mut perm: Vec<usize> = (0..n).collect();
            // a fixed pseudo-random shuffle
            for i in (1..n).rev() {
                perm.swap(i, (seed as usize * 31 + i * 17) % (i + 1));
            }
            let e = relabel(&d, &perm);
            for w in words_up_to(2, 4) {
                for k in 1..=n {
                    prop_assert_eq!(trace_k(&d, k, &w).unwrap(), trace_k(&e, k, &w).unwrap());
                }
            }
        }
    }
}
