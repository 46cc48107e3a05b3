use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::{Dfa, Nfa};
use crate::error::{Error, Result};
use crate::graph::scc;
use crate::lang::{reversed, Letter};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BoolOp {
    Intersection,
    Union,
    Difference,
    Complement,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A deterministic automaton whose states are subsets of another automaton's states.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetDfa {
    pub dfa: Dfa,
    /// `subsets[s]` is the set of source states represented by state `s`.
    pub subsets: Vec<BTreeSet<usize>>,
}

/// Transition function of the completion of `d`; state `d.state_count()` is the sink.
fn total_next(d: &Dfa, q: usize, a: Letter) -> usize {
    let sink = d.state_count();
    if q == sink {
        sink
    } else {
        d.next(q, a).unwrap_or(sink)
    }
}

/// Minimal automaton, renumbered canonically: states in BFS order from the
/// initial state, letters in alphabet order. Two automata over the same
/// alphabet recognize the same language iff their minimizations are equal.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let alphabet = dfa.alphabet().clone();
    let k = alphabet.len();
    let Some(init) = dfa.initial() else {
        return Dfa::empty(alphabet);
    };
    let n = dfa.state_count();
    let sink = n;
    let total = n + 1;

    // Moore refinement over the completed automaton
    let mut class: Vec<usize> = (0..total).map(|q| usize::from(q < n && dfa.is_final(q))).collect();
    let mut count = class.iter().collect::<BTreeSet<_>>().len();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<usize> = (0..total)
            .map(|q| {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend((0..k).map(|a| class[total_next(dfa, q, a)]));
                let len = ids.len();
                *ids.entry(sig).or_insert(len)
            })
            .collect();
        let new_count = ids.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    let dead = class[sink];
    if class[init] == dead {
        return Dfa::empty(alphabet);
    }
    let rep: HashMap<usize, usize> = (0..n).rev().map(|q| (class[q], q)).collect();
    let mut number: HashMap<usize, usize> = HashMap::from([(class[init], 0)]);
    let mut order = vec![class[init]];
    let mut queue = VecDeque::from([class[init]]);
    let mut trans = Vec::new();
    while let Some(c) = queue.pop_front() {
        let q = rep[&c];
        for a in 0..k {
            let d = class[total_next(dfa, q, a)];
            if d == dead {
                continue;
            }
            let id = *number.entry(d).or_insert_with(|| {
                order.push(d);
                queue.push_back(d);
                order.len() - 1
            });
            trans.push((number[&c], a, id));
        }
    }
    let finals: Vec<usize> = (0..order.len()).filter(|&s| dfa.is_final(rep[&order[s]])).collect();
    Dfa::new(alphabet, order.len(), Some(0), finals, trans).expect("quotient is deterministic")
}

fn same_alphabet(a: &Dfa, b: &Dfa) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "{:?} vs {:?}",
            a.alphabet().symbols(),
            b.alphabet().symbols()
        )));
    }
    Ok(())
}

/// Boolean combination by the product of the completed automata, minimized.
/// `Complement` ignores `b`; the other operations require it.
pub fn boolean_combine(op: BoolOp, a: &Dfa, b: Option<&Dfa>) -> Result<Dfa> {
    let b = match (op, b) {
        (BoolOp::Complement, _) => a,
        (_, Some(b)) => {
            same_alphabet(a, b)?;
            b
        }
        (_, None) => {
            return Err(Error::DimensionMismatch(format!("{op:?} needs two automata")));
        }
    };
    let k = a.alphabet().len();
    let start = (a.initial().unwrap_or(a.state_count()), b.initial().unwrap_or(b.state_count()));
    let fin = |d: &Dfa, q: usize| q < d.state_count() && d.is_final(q);
    let accept = |(p, q): (usize, usize)| match op {
        BoolOp::Intersection => fin(a, p) && fin(b, q),
        BoolOp::Union => fin(a, p) || fin(b, q),
        BoolOp::Difference => fin(a, p) && !fin(b, q),
        BoolOp::Complement => !fin(a, p),
    };
    let mut index = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut queue = VecDeque::from([0]);
    let mut trans = Vec::new();
    while let Some(s) = queue.pop_front() {
        let (p, q) = states[s];
        for x in 0..k {
            let t = (total_next(a, p, x), total_next(b, q, x));
            let id = *index.entry(t).or_insert_with(|| {
                states.push(t);
                queue.push_back(states.len() - 1);
                states.len() - 1
            });
            trans.push((s, x, id));
        }
    }
    let finals: Vec<usize> = (0..states.len()).filter(|&s| accept(states[s])).collect();
    let product = Dfa::new(a.alphabet().clone(), states.len(), Some(0), finals, trans)?;
    Ok(minimize(&product))
}

pub fn complement(a: &Dfa) -> Dfa {
    boolean_combine(BoolOp::Complement, a, None).expect("complement needs one automaton")
}

/// Minimal automaton of the reversed language.
pub fn reverse(dfa: &Dfa) -> Dfa {
    let (d, _) = reversal_nfa(dfa).determinize();
    minimize(&d)
}

fn reversal_nfa(dfa: &Dfa) -> Nfa {
    let edges = dfa.transitions().map(|(p, a, q)| (q, a, p)).collect();
    Nfa::new(
        dfa.alphabet().clone(),
        dfa.state_count(),
        dfa.final_states().collect(),
        dfa.initial().into_iter().collect(),
        edges,
    )
    .expect("reversed edges stay in range")
}

/// `w⁻¹X` for `Side::Left`, `Xw⁻¹` for `Side::Right`. Minimized.
pub fn residual(dfa: &Dfa, w: &[Letter], side: Side) -> Dfa {
    match side {
        Side::Left => {
            let m = minimize(dfa);
            match m.initial().and_then(|i| m.run_from(i, w)) {
                Some(q) => minimize(&m.with_initial(Some(q))),
                None => Dfa::empty(dfa.alphabet().clone()),
            }
        }
        Side::Right => reverse(&residual(&reverse(dfa), &reversed(w), Side::Left)),
    }
}

/// Reverses the edges of a trim automaton and applies the accessible subset
/// construction. The state reached by `w` is `{q : q·w̃ ∈ T}`; the initial state
/// is `T` and final states are the subsets containing the initial state.
pub fn accessible_reversal(dfa: &Dfa) -> Result<SubsetDfa> {
    if !dfa.is_trim() {
        return Err(Error::NotTrim);
    }
    let (d, subsets) = reversal_nfa(dfa).determinize();
    Ok(SubsetDfa { dfa: d, subsets })
}

pub fn is_strongly_connected(dfa: &Dfa) -> Result<bool> {
    let n = dfa.state_count();
    if n == 0 {
        return Err(Error::EmptyAutomaton);
    }
    let k = dfa.alphabet().len();
    let (_, count) = scc(n, |q| (0..k).filter_map(|a| dfa.next(q, a)).collect());
    Ok(count == 1)
}

pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    same_alphabet(a, b)?;
    Ok(minimize(a) == minimize(b))
}
