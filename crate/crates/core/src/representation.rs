//! Linear representations `(λ, μ, γ)` of series and the syntactic representation.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::automata::{minimize, Dfa};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lang::{Alphabet, Letter, Word};
use crate::linalg::{dot, FixedBasis, Matrix};
use crate::monoid::FiniteMonoid;

/// A linear representation: `(S, w) = λ μ(w) γ`, with `λ` a row vector and
/// `γ` a column vector.
#[derive(Clone, PartialEq, Eq)]
pub struct LinRep<F> {
    alphabet: Alphabet,
    lambda: Vec<F>,
    mu: Vec<Matrix<F>>,
    gamma: Vec<F>,
}

impl<F: Field> LinRep<F> {
    pub fn new(alphabet: Alphabet, lambda: Vec<F>, mu: Vec<Matrix<F>>, gamma: Vec<F>) -> Result<Self> {
        let n = lambda.len();
        if gamma.len() != n {
            return Err(Error::DimensionMismatch(format!("λ has length {n}, γ has length {}", gamma.len())));
        }
        if mu.len() != alphabet.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} letters",
                mu.len(),
                alphabet.len()
            )));
        }
        if let Some(m) = mu.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} letter matrix in dimension {n}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(LinRep { alphabet, lambda, mu, gamma })
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn lambda(&self) -> &[F] {
        &self.lambda
    }

    pub fn gamma(&self) -> &[F] {
        &self.gamma
    }

    pub fn mu(&self, a: Letter) -> &Matrix<F> {
        &self.mu[a]
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.mu
    }

    pub fn mu_word(&self, w: &[Letter]) -> Matrix<F> {
        w.iter().fold(Matrix::identity(self.dim()), |acc, &a| &acc * &self.mu[a])
    }

    /// `λ μ(w)` without forming `μ(w)`.
    pub fn forward(&self, w: &[Letter]) -> Vec<F> {
        w.iter().fold(self.lambda.clone(), |v, &a| self.mu[a].left_apply(&v))
    }

    pub fn evaluate(&self, w: &[Letter]) -> F {
        dot(&self.forward(w), &self.gamma)
    }

    pub fn trace_of(&self, w: &[Letter]) -> F {
        self.mu_word(w).trace()
    }

    /// `(γᵗ, ν, λᵗ)` with `ν(a) = μ(a)ᵗ`, which represents the reversed series.
    pub fn reversed(&self) -> LinRep<F> {
        LinRep {
            alphabet: self.alphabet.clone(),
            lambda: self.gamma.clone(),
            mu: self.mu.iter().map(Matrix::transpose).collect(),
            gamma: self.lambda.clone(),
        }
    }

    /// Block diagonal sum with coefficients on the terminal vectors:
    /// represents `sum c_k S_k`.
    pub fn combine(parts: &[(F, &LinRep<F>)]) -> Result<LinRep<F>> {
        let alphabet = parts
            .first()
            .map(|(_, r)| r.alphabet.clone())
            .ok_or_else(|| Error::DimensionMismatch("empty combination".into()))?;
        if parts.iter().any(|(_, r)| r.alphabet != alphabet) {
            return Err(Error::AlphabetMismatch("representations over different alphabets".into()));
        }
        let n: usize = parts.iter().map(|(_, r)| r.dim()).sum();
        let mut lambda = Vec::with_capacity(n);
        let mut gamma = Vec::with_capacity(n);
        let mut mu = vec![Matrix::zeros(n, n); alphabet.len()];
        let mut off = 0;
        for (c, r) in parts {
            lambda.extend(r.lambda.iter().cloned());
            gamma.extend(r.gamma.iter().map(|g| c.clone() * g.clone()));
            for (a, m) in mu.iter_mut().enumerate() {
                for i in 0..r.dim() {
                    for j in 0..r.dim() {
                        m[(off + i, off + j)] = r.mu[a][(i, j)].clone();
                    }
                }
            }
            off += r.dim();
        }
        LinRep::new(alphabet, lambda, mu, gamma)
    }
}

impl<F: Field> fmt::Debug for LinRep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinRep")
            .field("lambda", &self.lambda)
            .field("mu", &self.mu)
            .field("gamma", &self.gamma)
            .finish()
    }
}

/// The representation associated with an automaton: `μ(a)_{p,q} = 1` iff
/// `p·a = q`, `λ` the indicator of the initial state, `γ` that of the finals.
pub fn rep_from_dfa<F: Field>(dfa: &Dfa) -> Result<LinRep<F>> {
    let n = dfa.state_count();
    let Some(i) = dfa.initial() else {
        return Err(Error::EmptyAutomaton);
    };
    let k = dfa.alphabet().len();
    let mut mu = vec![Matrix::zeros(n, n); k];
    for (p, a, q) in dfa.transitions() {
        mu[a][(p, q)] = F::one();
    }
    let mut lambda = vec![F::zero(); n];
    lambda[i] = F::one();
    let gamma = (0..n).map(|q| if dfa.is_final(q) { F::one() } else { F::zero() }).collect();
    LinRep::new(dfa.alphabet().clone(), lambda, mu, gamma)
}

/// A minimal representation whose basis vector `j` is the series `S·w_j`
/// (`u ↦ (S, w_j u)`) for the recorded word `w_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SyntacticRep<F: Field> {
    pub rep: LinRep<F>,
    pub basis_words: Vec<Word>,
}

impl<F: Field> SyntacticRep<F> {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

/// Backward reduction onto the span of the `μ(w)γ`, then forward reduction
/// onto the span of the `λμ(w)`, both explored in breadth-first word order.
pub fn reduce_to_minimal<F: Field>(rep: &LinRep<F>) -> SyntacticRep<F> {
    let back = reduce_backward(rep);
    reduce_forward(&back)
}

fn reduce_backward<F: Field>(rep: &LinRep<F>) -> LinRep<F> {
    let n = rep.dim();
    let k = rep.alphabet.len();
    let mut basis = FixedBasis::new(n);
    let mut queue = VecDeque::new();
    if basis.insert(rep.gamma.clone()) {
        queue.push_back(0);
    }
    while let Some(j) = queue.pop_front() {
        let v = basis.vectors()[j].clone();
        for a in 0..k {
            if basis.insert(rep.mu[a].right_apply(&v)) {
                queue.push_back(basis.dim() - 1);
            }
        }
    }
    let r = basis.dim();
    let cols = basis.vectors();
    let mu = (0..k)
        .map(|a| {
            let mut m = Matrix::zeros(r, r);
            for (j, b) in cols.iter().enumerate() {
                let c = basis.coordinates(&rep.mu[a].right_apply(b)).expect("span is invariant");
                for (i, x) in c.into_iter().enumerate() {
                    m[(i, j)] = x;
                }
            }
            m
        })
        .collect();
    let lambda = cols.iter().map(|b| dot(&rep.lambda, b)).collect();
    let gamma = (0..r).map(|j| if j == 0 { F::one() } else { F::zero() }).collect();
    LinRep { alphabet: rep.alphabet.clone(), lambda, mu, gamma }
}

fn reduce_forward<F: Field>(rep: &LinRep<F>) -> SyntacticRep<F> {
    let n = rep.dim();
    let k = rep.alphabet.len();
    let mut basis = FixedBasis::new(n);
    let mut words: Vec<Word> = Vec::new();
    let mut queue = VecDeque::new();
    if basis.insert(rep.lambda.clone()) {
        words.push(Vec::new());
        queue.push_back(0);
    }
    while let Some(j) = queue.pop_front() {
        let v = basis.vectors()[j].clone();
        for a in 0..k {
            if basis.insert(rep.mu[a].left_apply(&v)) {
                let mut w = words[j].clone();
                w.push(a);
                words.push(w);
                queue.push_back(basis.dim() - 1);
            }
        }
    }
    let r = basis.dim();
    let rows = basis.vectors();
    let mu = (0..k)
        .map(|a| {
            let data: Vec<Vec<F>> = rows
                .iter()
                .map(|f| basis.coordinates(&rep.mu[a].left_apply(f)).expect("span is invariant"))
                .collect();
            Matrix::from_rows(r, &data).expect("square")
        })
        .collect();
    let lambda = (0..r).map(|j| if j == 0 { F::one() } else { F::zero() }).collect();
    let gamma = rows.iter().map(|f| dot(f, &rep.gamma)).collect();
    SyntacticRep { rep: LinRep { alphabet: rep.alphabet.clone(), lambda, mu, gamma }, basis_words: words }
}

/// Syntactic representation of the language recognized by `dfa`.
pub fn syntactic_rep<F: Field>(dfa: &Dfa) -> Result<SyntacticRep<F>> {
    let m = minimize(dfa);
    if m.state_count() == 0 {
        return Err(Error::EmptyLanguage);
    }
    Ok(reduce_to_minimal(&rep_from_dfa(&m)?))
}

/// The monoid `μ(A*)` of matrices, with a shortest word for each matrix.
#[derive(Clone)]
pub struct MatrixMonoid<F> {
    pub matrices: Vec<Matrix<F>>,
    pub words: Vec<Word>,
}

impl<F: Field> MatrixMonoid<F> {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

impl<F: Field> fmt::Debug for MatrixMonoid<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixMonoid").field("matrices", &self.matrices).finish()
    }
}

/// Breadth-first closure of the letter matrices, stopping with an error once
/// more than `cap` matrices appear.
pub fn matrix_monoid<F: Field>(rep: &LinRep<F>, cap: usize) -> Result<MatrixMonoid<F>> {
    let id = Matrix::identity(rep.dim());
    let mut index = HashMap::from([(id.clone(), 0)]);
    let mut matrices = vec![id];
    let mut words = vec![Vec::new()];
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for (a, g) in rep.mu.iter().enumerate() {
            let p = &matrices[i] * g;
            if index.contains_key(&p) {
                continue;
            }
            if matrices.len() >= cap {
                return Err(Error::HypothesisViolation(format!(
                    "more than {cap} matrices in the image of the representation"
                )));
            }
            index.insert(p.clone(), matrices.len());
            let mut w = words[i].clone();
            w.push(a);
            matrices.push(p);
            words.push(w);
            queue.push_back(matrices.len() - 1);
        }
    }
    Ok(MatrixMonoid { matrices, words })
}

/// Checks that `w ↦ μ(w)` induces a bijection from the monoid onto the
/// matrix monoid, through the representative words of both sides.
pub fn is_isomorphic_to<F: Field>(rep: &LinRep<F>, mm: &MatrixMonoid<F>, m: &FiniteMonoid) -> bool {
    if mm.len() != m.len() {
        return false;
    }
    let index: HashMap<&Matrix<F>, usize> = mm.matrices.iter().zip(0..).collect();
    let mut hit = vec![false; mm.len()];
    for e in 0..m.len() {
        let Some(&j) = index.get(&rep.mu_word(&m.word(e))) else {
            return false;
        };
        if hit[j] {
            return false;
        }
        hit[j] = true;
    }
    // and the other direction: matrix words land on distinct monoid elements
    let mut seen = vec![false; m.len()];
    mm.words.iter().all(|w| !std::mem::replace(&mut seen[m.element_of(w)], true))
}
