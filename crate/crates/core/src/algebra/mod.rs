//! The syntactic algebra as a matrix algebra: radical, invariant complements,
//! decomposition into irreducibles and the condensation criterion.

mod complement;
mod condense;
mod decompose;
mod report;

pub use complement::{commutant, hom_space, invariant_complement};
pub use condense::{condensation_check, CondensationReport};
pub use decompose::{decompose, decompose_module, Component, Decomposition, IsotypicComponent};
pub use report::{
    completely_reducible_verdict, is_completely_reducible, radical_witness, reducibility_of, series_combine_cr, Method, ReducibilityReport,
};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lang::Word;
use crate::linalg::{dot, Echelon, FixedBasis, Matrix, Subspace};
use crate::poly::{minimal_polynomial, poly_gcd_squarefree};
use crate::representation::LinRep;

/// A subalgebra of `n×n` matrices given by a basis.
#[derive(Clone)]
pub struct MatrixAlgebra<F> {
    n: usize,
    generators: Vec<Matrix<F>>,
    basis: Vec<Matrix<F>>,
    /// For a syntactic algebra, `basis[i] = μ(words[i])`.
    words: Vec<Word>,
    coords: FixedBasis<F>,
}

impl<F: Field> MatrixAlgebra<F> {
    /// Unital algebra generated by `generators`: the span of all products,
    /// found by spinning the identity under right multiplication.
    pub fn generated_by(n: usize, generators: Vec<Matrix<F>>) -> Self {
        let mut coords = FixedBasis::new(n * n);
        let mut basis = Vec::new();
        let mut words: Vec<Word> = Vec::new();
        let id = Matrix::identity(n);
        let mut queue = VecDeque::new();
        if coords.insert(id.as_slice().to_vec()) {
            basis.push(id);
            words.push(Vec::new());
            queue.push_back(0);
        }
        while let Some(i) = queue.pop_front() {
            for (a, g) in generators.iter().enumerate() {
                let p = &basis[i] * g;
                if coords.insert(p.as_slice().to_vec()) {
                    let mut w = words[i].clone();
                    w.push(a);
                    basis.push(p);
                    words.push(w);
                    queue.push_back(basis.len() - 1);
                }
            }
        }
        MatrixAlgebra { n, generators, basis, words, coords }
    }

    /// Span of the given matrices, assumed closed under product.
    pub fn spanned_by(n: usize, matrices: impl IntoIterator<Item = Matrix<F>>) -> Self {
        let mut coords = FixedBasis::new(n * n);
        let mut basis = Vec::new();
        for m in matrices {
            if coords.insert(m.as_slice().to_vec()) {
                basis.push(m);
            }
        }
        MatrixAlgebra { n, generators: basis.clone(), basis, words: Vec::new(), coords }
    }

    /// Size of the matrices.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.generators
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn coordinates(&self, m: &Matrix<F>) -> Option<Vec<F>> {
        if m.rows() != self.n || m.cols() != self.n {
            return None;
        }
        self.coords.coordinates(m.as_slice())
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        self.coordinates(m).is_some()
    }

    pub fn element(&self, coords: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    /// Products of basis elements stay in the span.
    pub fn is_closed(&self) -> bool {
        self.basis.iter().all(|x| self.basis.iter().all(|y| self.contains(&(x * y))))
    }

    /// Whether the trace form detects the radical: characteristic 0 or `p > n`.
    pub fn trace_form_valid(&self) -> bool {
        let p = F::characteristic();
        p == 0 || p > self.n as u64
    }

    /// Kernel of the form `(x, y) ↦ Tr(xy)`, in coordinates of the basis.
    ///
    /// This is the Jacobson radical when the algebra contains the identity and
    /// the characteristic is 0 or exceeds the matrix size.
    pub fn radical(&self) -> Result<Subspace<F>> {
        if !self.trace_form_valid() {
            return Err(Error::WrongCharacteristic {
                expected: format!("0 or a prime above {}", self.n),
                actual: F::characteristic(),
            });
        }
        let d = self.dim();
        let transposed: Vec<Vec<F>> =
            self.basis.iter().map(|b| b.transpose().as_slice().to_vec()).collect();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = dot(self.basis[i].as_slice(), &transposed[j]);
                gram[(i, j)] = t.clone();
                gram[(j, i)] = t;
            }
        }
        Ok(gram.kernel())
    }

    /// Radical elements as matrices.
    pub fn radical_matrices(&self) -> Result<Vec<Matrix<F>>> {
        Ok(self.radical()?.basis().iter().map(|c| self.element(c)).collect())
    }

    /// Semisimplicity: squarefree minimal polynomial for one generator (any
    /// characteristic), trace form otherwise.
    pub fn is_semisimple(&self) -> Result<bool> {
        if self.generators.len() == 1 && self.words.len() == self.basis.len() {
            return poly_gcd_squarefree(&minimal_polynomial(&self.generators[0])?);
        }
        if !self.trace_form_valid() {
            return Err(Error::Unsupported(format!(
                "semisimplicity over {} for matrices of size {}",
                F::name(),
                self.n
            )));
        }
        Ok(self.radical()?.is_zero())
    }
}

/// Trace-form radical of an algebra over a field of characteristic 0.
pub fn radical_char0<F: Field>(alg: &MatrixAlgebra<F>) -> Result<Subspace<F>> {
    if F::characteristic() != 0 {
        return Err(Error::WrongCharacteristic { expected: "0".into(), actual: F::characteristic() });
    }
    alg.radical()
}

/// Smallest subspace of `F^n` containing `seeds` and stable under right
/// multiplication by every generator.
pub fn spin<F: Field>(gens: &[Matrix<F>], seeds: impl IntoIterator<Item = Vec<F>>, n: usize) -> Subspace<F> {
    let mut ech = Echelon::new(n);
    let mut queue: VecDeque<Vec<F>> = VecDeque::new();
    for v in seeds {
        if ech.insert(v.clone()) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.rank() == n {
            break;
        }
        for g in gens {
            let u = g.left_apply(&v);
            if ech.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    ech.into_subspace()
}

/// The algebra spanned by `μ(A*)` for a representation.
pub fn syntactic_algebra<F: Field>(rep: &LinRep<F>) -> MatrixAlgebra<F> {
    MatrixAlgebra::generated_by(rep.dim(), rep.generators().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::field::Fp;
    use crate::lang::{parse_regex, Alphabet};
    use crate::representation::syntactic_rep;
    use crate::Rational;

    type Q = Rational;

    pub(crate) fn alg<F: Field>(x: &str, al: &str) -> MatrixAlgebra<F> {
        let d = compile(&parse_regex(x, None).unwrap(), &Alphabet::parse(al).unwrap()).unwrap();
        syntactic_algebra(&syntactic_rep::<F>(&d).unwrap().rep)
    }

    #[test]
    fn dimensions_of_small_algebras() {
        // {a}: I, N, N² = 0, so rank 2 among the three monoid matrices
        let a = alg::<Q>("a", "a");
        assert_eq!(a.dim(), 2);
        assert_eq!(alg::<Q>("(aa)*", "a").dim(), 2);
        assert_eq!(alg::<Q>("(a+b)*", "ab").dim(), 1);
        assert!(a.is_closed());
    }

    #[test]
    fn radicals() {
        let a = alg::<Q>("a", "a");
        let r = a.radical_matrices().unwrap();
        assert_eq!(r.len(), 1);
        assert!((&r[0] * &r[0]).is_zero());
        assert!(alg::<Q>("(ab)*", "ab").radical().unwrap().is_zero());
        assert!(alg::<Q>("(a+b)*", "ab").radical().unwrap().is_zero());
    }

    #[test]
    fn trace_form_needs_large_characteristic() {
        let a = alg::<Fp<2>>("(ab)*", "ab");
        assert!(matches!(a.radical(), Err(Error::WrongCharacteristic { .. })));
        assert!(matches!(a.is_semisimple(), Err(Error::Unsupported(_))));
        // one generator always goes through the minimal polynomial
        assert!(!alg::<Fp<2>>("(aa)*", "a").is_semisimple().unwrap());
        assert!(alg::<Fp<3>>("(aa)*", "a").is_semisimple().unwrap());
    }

    #[test]
    fn radical_is_nilpotent_ideal() {
        for (x, al) in [("a", "a"), ("ab*", "ab"), ("a(a+b)*", "ab"), ("(ab)*a+b", "ab")] {
            let a = alg::<Q>(x, al);
            let rad = a.radical_matrices().unwrap();
            for r in &rad {
                assert!(r.pow(a.degree()).is_zero(), "{x}: radical element not nilpotent");
                for b in a.basis() {
                    let (left, right) = (b * r, r * b);
                    let radspace = a.radical().unwrap();
                    assert!(radspace.contains(&a.coordinates(&left).unwrap()));
                    assert!(radspace.contains(&a.coordinates(&right).unwrap()));
                }
            }
        }
    }

    mod props {
        use super::*;
        use crate::algebra::{decompose, invariant_complement, reducibility_of};
        use crate::config::Config;
        use crate::testutil::arb_regex;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn radical_is_a_nilpotent_ideal(r in arb_regex()) {
                let d = compile(&r, &Alphabet::parse("ab").unwrap()).unwrap();
                prop_assume!(d.state_count() > 0);
                let a = syntactic_algebra(&syntactic_rep::<Q>(&d).unwrap().rep);
                prop_assert!(a.is_closed());
                let rad = a.radical().unwrap();
                for c in rad.basis() {
                    let x = a.element(c);
                    prop_assert!(x.pow(a.degree()).is_zero());
                    for b in a.basis() {
                        prop_assert!(rad.contains(&a.coordinates(&(b * &x)).unwrap()));
                        prop_assert!(rad.contains(&a.coordinates(&(&x * b)).unwrap()));
                    }
                }
            }

            #[test]
            fn decomposition_covers_the_space(r in arb_regex()) {
                let d = compile(&r, &Alphabet::parse("ab").unwrap()).unwrap();
                prop_assume!(d.state_count() > 0);
                let rep = syntactic_rep::<Q>(&d).unwrap().rep;
                let report = reducibility_of(&rep, &Config::default()).unwrap();
                prop_assert_eq!(report.completely_reducible, report.radical_dim == 0);
                if !report.completely_reducible {
                    prop_assert!(report.witness.is_some());
                    return Ok(());
                }
                let dec = decompose(&rep, &Config::default()).unwrap();
                let mut total = Subspace::zero(rep.dim());
                for c in &dec.components {
                    let s = c.subspace();
                    for g in rep.generators() {
                        prop_assert!(s.is_invariant(g));
                    }
                    total = total.sum(&s).unwrap();
                }
                prop_assert!(total.is_full());
                prop_assert_eq!(dec.irreducible_dims().iter().sum::<usize>(), rep.dim());
                prop_assert_eq!(dec.isotypic.iter().map(|i| i.dim).sum::<usize>(), rep.dim());
                // every invariant piece has a complement in the semisimple case
                if let Some(c) = dec.components.first() {
                    prop_assert!(invariant_complement(rep.generators(), &c.subspace()).unwrap().is_some());
                }
            }
        }
    }
}
