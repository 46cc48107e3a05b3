//! Univariate polynomials over a [`Field`], with the pieces needed for
//! semisimplicity tests: derivative, gcd, squarefreeness, minimal polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix, Subspace};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![F::one()] }
    }

    /// `t - root`
    pub fn linear(root: F) -> Self {
        Poly::new(vec![-root, F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Poly::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect())
            }
        }
    }

    /// Formal derivative; in characteristic `p` the coefficient `i` is taken mod `p`.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d).max(1)];
        while rem.len() > d && !rem.is_empty() {
            let shift = rem.len() - 1 - d;
            let c = rem.last().unwrap().clone() * lead_inv.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i].sub_mul_assign(&c, b);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c.clone();
            }
        }
        acc
    }

    /// Roots lying in `F`, each listed once; `None` if the search gave up.
    pub fn roots(&self) -> Option<Vec<F>> {
        F::roots_in_field(&self.coeffs)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Self {
        if self.degree().is_none_or(|d| d == 0) {
            return Poly::one();
        }
        let d = self.derivative();
        if d.is_zero() {
            // f(t) = g(t^p) = g(t)^p, since the Frobenius map fixes F_p
            let p = F::characteristic() as usize;
            return Poly::new(self.coeffs.iter().step_by(p).cloned().collect()).radical();
        }
        let g = self.gcd(&d);
        let w = self.div_rem(&g).0.monic();
        let rg = g.radical();
        w.mul(&rg).div_rem(&w.gcd(&rg)).0.monic()
    }

    /// Multiplicity of `root` as a root.
    pub fn multiplicity(&self, root: &F) -> usize {
        let lin = Poly::linear(root.clone());
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// True iff `gcd(f, f')` is constant, i.e. `f` has no repeated factor.
///
/// In characteristic `p` a `p`-th power has zero derivative, which makes the
/// gcd equal to `f` itself and the test correctly fail.
pub fn poly_gcd_squarefree<F: Field>(f: &Poly<F>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.gcd(&f.derivative()).degree() == Some(0))
}

/// Monic polynomial of least degree annihilating the square matrix `x`,
/// found as the first linear dependency among `I, x, x^2, ...`.
pub fn minimal_polynomial<F: Field>(x: &Matrix<F>) -> Result<Poly<F>> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
    }
    let n = x.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut powers: Vec<Vec<F>> = Vec::new();
    let mut ech = Echelon::new(n * n);
    let mut cur = Matrix::identity(n);
    loop {
        let flat = cur.as_slice().to_vec();
        if !ech.insert(flat.clone()) {
            // cur = sum c_i x^i: solve for c through the stacked previous powers
            let k = powers.len();
            let cols = Matrix::from_rows(n * n, &powers)?.transpose();
            let sol = crate::linalg::solve(&cols, &flat)?.expect("dependent power lies in the span");
            let mut coeffs: Vec<F> = sol.into_iter().map(|c| -c).collect();
            debug_assert_eq!(coeffs.len(), k);
            coeffs.push(F::one());
            return Ok(Poly::new(coeffs));
        }
        powers.push(flat);
        cur = &cur * x;
    }
}

/// Kernel of `f(x)` acting on row vectors (`{v : v f(x) = 0}`).
pub fn kernel_of_poly_at<F: Field>(f: &Poly<F>, x: &Matrix<F>) -> Subspace<F> {
    f.eval_matrix(x).left_kernel()
}
