use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::scc;
use crate::monoid::FiniteMonoid;

/// Green classes of a finite monoid. Each relation is given as a class id per
/// element; ids are numbered by the smallest element of the class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenData {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
    pub r_count: usize,
    pub l_count: usize,
    pub h_count: usize,
    pub d_count: usize,
    pub idempotent: Vec<bool>,
    pub zero: Option<usize>,
}

impl GreenData {
    pub fn r_equiv(&self, m: usize, n: usize) -> bool {
        self.r_class[m] == self.r_class[n]
    }

    pub fn l_equiv(&self, m: usize, n: usize) -> bool {
        self.l_class[m] == self.l_class[n]
    }

    pub fn members(classes: &[usize], c: usize) -> Vec<usize> {
        (0..classes.len()).filter(|&m| classes[m] == c).collect()
    }

    /// A D-class is regular when it contains an idempotent.
    pub fn is_regular_d(&self, d: usize) -> bool {
        (0..self.d_class.len()).any(|m| self.d_class[m] == d && self.idempotent[m])
    }
}

/// R-classes are the strongly connected components of the right Cayley graph,
/// L-classes those of the left Cayley graph and D = J those of their union.
pub fn green_relations(m: &FiniteMonoid) -> GreenData {
    let n = m.len();
    let k = m.alphabet().len();
    let left: Vec<usize> = (0..n)
        .flat_map(|x| (0..k).map(move |a| (x, a)))
        .map(|(x, a)| m.mul(m.generator(a), x))
        .collect();
    let (r_class, r_count) = scc(n, |x| (0..k).map(|a| m.right_mul_letter(x, a)).collect());
    let (l_class, l_count) = scc(n, |x| left[x * k..(x + 1) * k].to_vec());
    let (d_class, d_count) = scc(n, |x| {
        let mut s: Vec<usize> = (0..k).map(|a| m.right_mul_letter(x, a)).collect();
        s.extend_from_slice(&left[x * k..(x + 1) * k]);
        s
    });
    let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
    let h_class: Vec<usize> = (0..n)
        .map(|x| {
            let len = pairs.len();
            *pairs.entry((r_class[x], l_class[x])).or_insert(len)
        })
        .collect();
    let idempotent = (0..n).map(|x| m.is_idempotent(x)).collect();
    GreenData {
        r_class,
        l_class,
        h_count: pairs.len(),
        h_class,
        d_class,
        r_count,
        l_count,
        d_count,
        idempotent,
        zero: m.zero(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EggCell {
    pub elements: Vec<usize>,
    /// The H-class contains an idempotent, hence is a group.
    pub group: bool,
}

/// The elements of minimal nonzero rank, arranged as an egg-box: rows are
/// R-classes and columns L-classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub rank: usize,
    pub elements: Vec<usize>,
    pub cells: Vec<Vec<EggCell>>,
}

impl IdealReport {
    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    /// Row and column of an element of the ideal.
    pub fn position(&self, m: usize) -> Option<(usize, usize)> {
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if cell.elements.contains(&m) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Elements of minimal nonzero rank. For the transition monoid of a strongly
/// connected automaton they form a single regular D-class in which every
/// H-class is a group or squares to zero; a violation is reported as an error.
pub fn minimal_ideal(m: &FiniteMonoid, green: &GreenData) -> Result<IdealReport> {
    let rank = (0..m.len())
        .map(|x| m.rank(x))
        .filter(|&r| r > 0)
        .min()
        .ok_or_else(|| Error::HypothesisViolation("no element of nonzero rank".into()))?;
    let elements: Vec<usize> = (0..m.len()).filter(|&x| m.rank(x) == rank).collect();
    let d = green.d_class[elements[0]];
    if elements.iter().any(|&x| green.d_class[x] != d) {
        return Err(Error::HypothesisViolation(
            "elements of minimal nonzero rank span several D-classes".into(),
        ));
    }
    let class_size = green.d_class.iter().filter(|&&c| c == d).count();
    if class_size != elements.len() {
        return Err(Error::HypothesisViolation(
            "the D-class of minimal nonzero rank contains elements of other ranks".into(),
        ));
    }
    if !green.is_regular_d(d) {
        return Err(Error::HypothesisViolation("the minimal D-class is not regular".into()));
    }
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cols: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in &elements {
        let r = rows.len();
        rows.entry(green.r_class[x]).or_insert(r);
        let c = cols.len();
        cols.entry(green.l_class[x]).or_insert(c);
    }
    let mut cells =
        vec![vec![EggCell { elements: Vec::new(), group: false }; cols.len()]; rows.len()];
    for &x in &elements {
        let cell = &mut cells[rows[&green.r_class[x]]][cols[&green.l_class[x]]];
        cell.elements.push(x);
        cell.group |= green.idempotent[x];
    }
    for cell in cells.iter().flatten() {
        if !cell.group {
            for &x in &cell.elements {
                if m.rank(m.mul(x, x)) != 0 {
                    return Err(Error::HypothesisViolation(format!(
                        "element {} is neither in a group nor squares to zero",
                        m.render(x)
                    )));
                }
            }
        }
    }
    Ok(IdealReport { rank, elements, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::*;
    use crate::automata::{compile, Dfa};
    use crate::lang::{parse_regex, Alphabet};
    use crate::monoid::transition_monoid;
    use std::collections::BTreeSet;

    /// R-equivalence straight from the definition `mM = nM`.
    fn right_ideal(m: &FiniteMonoid, x: usize) -> BTreeSet<usize> {
        (0..m.len()).map(|y| m.mul(x, y)).collect()
    }

    fn left_ideal(m: &FiniteMonoid, x: usize) -> BTreeSet<usize> {
        (0..m.len()).map(|y| m.mul(y, x)).collect()
    }

    fn check_against_definitions(d: &Dfa) {
        let m = transition_monoid(d).unwrap();
        let g = green_relations(&m);
        let rid: Vec<_> = (0..m.len()).map(|x| right_ideal(&m, x)).collect();
        let lid: Vec<_> = (0..m.len()).map(|x| left_ideal(&m, x)).collect();
        for x in 0..m.len() {
            for y in 0..m.len() {
                assert_eq!(g.r_equiv(x, y), rid[x] == rid[y]);
                assert_eq!(g.l_equiv(x, y), lid[x] == lid[y]);
                assert_eq!(g.h_class[x] == g.h_class[y], g.r_equiv(x, y) && g.l_equiv(x, y));
                // Clifford-Miller
                let xy = m.mul(x, y);
                let in_rl = g.r_equiv(xy, x) && g.l_equiv(xy, y);
                let idem = (0..m.len()).any(|e| g.idempotent[e] && g.r_equiv(e, y) && g.l_equiv(e, x));
                assert_eq!(in_rl, idem, "x={} y={}", m.render(x), m.render(y));
            }
        }
        // every R- and L-class of a regular D-class holds an idempotent
        for dc in 0..g.d_count {
            if g.is_regular_d(dc) {
                for x in GreenData::members(&g.d_class, dc) {
                    assert!((0..m.len()).any(|e| g.idempotent[e] && g.r_equiv(e, x)));
                    assert!((0..m.len()).any(|e| g.idempotent[e] && g.l_equiv(e, x)));
                }
            }
        }
    }

    #[test]
    fn green_classes_match_ideal_definitions() {
        for d in [even(), weakly(), bidelay()] {
            check_against_definitions(&d);
        }
    }

    #[test]
    fn bidelay_zero_and_idempotent() {
        let m = transition_monoid(&bidelay()).unwrap();
        let g = green_relations(&m);
        assert_eq!(g.zero, Some(m.element_of(&[1, 1])));
        assert!(g.idempotent[m.generator(0)]);
        let ideal = minimal_ideal(&m, &g).unwrap();
        assert_eq!(ideal.rank, 1);
        let words: BTreeSet<String> = ideal.elements.iter().map(|&x| m.render(x)).collect();
        assert_eq!(words, ["a", "ab", "b", "ba"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn group_is_one_h_class() {
        let a = Alphabet::parse("a").unwrap();
        let d = compile(&parse_regex("(aaa)*", None).unwrap(), &a).unwrap();
        let m = transition_monoid(&d).unwrap();
        let g = green_relations(&m);
        assert_eq!((g.d_count, g.h_count), (1, 1));
        let ideal = minimal_ideal(&m, &g).unwrap();
        assert_eq!(ideal.elements.len(), 3);
    }

    #[test]
    fn commutative_idempotent_monoid() {
        // letters act as constant maps onto a shared final state: a semilattice {1, x}
        let d = Dfa::new(Alphabet::parse("ab").unwrap(), 2, Some(0), [1], [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let m = transition_monoid(&d).unwrap();
        let g = green_relations(&m);
        assert_eq!(g.h_count, m.len());
        assert!(g.idempotent.iter().all(|&b| b));
    }

    #[test]
    fn weakly_egg_box() {
        let m = transition_monoid(&weakly()).unwrap();
        let g = green_relations(&m);
        let ideal = minimal_ideal(&m, &g).unwrap();
        assert_eq!((ideal.rows(), ideal.cols()), (2, 2));
        assert!(ideal.cells.iter().flatten().all(|c| c.group));
        let a = m.alphabet().clone();
        let positions: BTreeSet<(usize, usize)> = ["b", "ba", "ab", "aba"]
            .iter()
            .map(|w| ideal.position(m.element_of(&a.word(w).unwrap())).unwrap())
            .collect();
        assert_eq!(positions.len(), 4);
        // b and ba share a row (bM = baM), b and ab share a column
        let pos = |w: &str| ideal.position(m.element_of(&a.word(w).unwrap())).unwrap();
        assert_eq!(pos("b").0, pos("ba").0);
        assert_eq!(pos("b").1, pos("ab").1);
    }
}
