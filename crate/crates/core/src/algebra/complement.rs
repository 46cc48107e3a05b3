use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{solve, Matrix, Subspace};

/// Module homomorphisms between two representations of the same free monoid,
/// given by their generator matrices: all `X` with `r1[a]·X = X·r2[a]`, so that
/// `v ↦ vX` commutes with the actions.
pub fn hom_space<F: Field>(r1: &[Matrix<F>], r2: &[Matrix<F>]) -> Result<Vec<Matrix<F>>> {
    if r1.len() != r2.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} and {} generators",
            r1.len(),
            r2.len()
        )));
    }
    let n1 = r1.first().map_or(0, Matrix::rows);
    let n2 = r2.first().map_or(0, Matrix::rows);
    if r1.is_empty() {
        return Ok(Vec::new());
    }
    let unknowns = n1 * n2;
    let mut sys: Matrix<F> = Matrix::zeros(r1.len() * unknowns, unknowns);
    for (g, (a, b)) in r1.iter().zip(r2).enumerate() {
        for i in 0..n1 {
            for j in 0..n2 {
                let row = g * unknowns + i * n2 + j;
                // (aX)_ij - (Xb)_ij
                for k in 0..n1 {
                    let c = &a[(i, k)];
                    if !c.is_zero() {
                        sys[(row, k * n2 + j)] = sys[(row, k * n2 + j)].clone() + c.clone();
                    }
                }
                for k in 0..n2 {
                    let c = &b[(k, j)];
                    if !c.is_zero() {
                        sys[(row, i * n2 + k)] = sys[(row, i * n2 + k)].clone() - c.clone();
                    }
                }
            }
        }
    }
    sys.kernel()
        .basis()
        .iter()
        .map(|x| Matrix::from_flat(n1, n2, x.clone()))
        .collect()
}

/// Endomorphisms commuting with every generator.
pub fn commutant<F: Field>(gens: &[Matrix<F>]) -> Result<Vec<Matrix<F>>> {
    hom_space(gens, gens)
}

/// An invariant complement of the invariant subspace `w`, as the kernel of an
/// equivariant projection onto `w`, or `None` when no such projection exists.
pub fn invariant_complement<F: Field>(gens: &[Matrix<F>], w: &Subspace<F>) -> Result<Option<Subspace<F>>> {
    let n = w.ambient_dim();
    if gens.iter().any(|g| g.rows() != n || g.cols() != n) {
        return Err(Error::DimensionMismatch(format!("generators do not act on F^{n}")));
    }
    if !gens.iter().all(|g| w.is_invariant(g)) {
        return Err(Error::NotInvariant);
    }
    if w.is_zero() {
        return Ok(Some(Subspace::full(n)));
    }
    if w.is_full() {
        return Ok(Some(Subspace::zero(n)));
    }
    // unknown π_ij sits at i*n + j
    let ann = w.annihilator();
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut rhs: Vec<F> = Vec::new();
    for b in w.basis() {
        // b·π = b
        for j in 0..n {
            let mut r = vec![F::zero(); n * n];
            for (i, bi) in b.iter().enumerate() {
                r[i * n + j] = bi.clone();
            }
            rows.push(r);
            rhs.push(b[j].clone());
        }
    }
    for x in ann.basis() {
        // π·x = 0, i.e. every row of π lies in w
        for i in 0..n {
            let mut r = vec![F::zero(); n * n];
            for (j, xj) in x.iter().enumerate() {
                r[i * n + j] = xj.clone();
            }
            rows.push(r);
            rhs.push(F::zero());
        }
    }
    for g in gens {
        // g·π - π·g = 0
        for i in 0..n {
            for j in 0..n {
                let mut r = vec![F::zero(); n * n];
                for k in 0..n {
                    r[k * n + j] = r[k * n + j].clone() + g[(i, k)].clone();
                    r[i * n + k] = r[i * n + k].clone() - g[(k, j)].clone();
                }
                rows.push(r);
                rhs.push(F::zero());
            }
        }
    }
    let sys = Matrix::from_rows(n * n, &rows)?;
    let Some(pi) = solve(&sys, &rhs)? else {
        return Ok(None);
    };
    let pi = Matrix::from_flat(n, n, pi)?;
    Ok(Some(pi.left_kernel()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::weakly;
    use crate::automata::compile;
    use crate::lang::{parse_regex, Alphabet};
    use crate::representation::syntactic_rep;
    use crate::{Fp, Rational};

    type Q = Rational;

    fn q(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_i64_rows(rows)
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace<Q> {
        Subspace::span(n, vs.iter().map(|v| v.iter().map(|&x| Q::from_integer(x.into())).collect()))
    }

    #[test]
    fn single_letter_has_no_complement() {
        let a = Alphabet::parse("a").unwrap();
        let rep = syntactic_rep::<Q>(&compile(&parse_regex("a", None).unwrap(), &a).unwrap()).unwrap().rep;
        // the only nontrivial invariant subspace is spanned by the image of the nilpotent
        let n = rep.mu(0);
        let w = n.row_space();
        assert_eq!(w.dim(), 1);
        assert_eq!(invariant_complement(rep.generators(), &w).unwrap(), None);
    }

    #[test]
    fn weakly_complement_is_zero_sum() {
        let psi_a = q(&[&[0, 1, 0], &[0, 0, 1], &[1, -1, 1]]);
        let psi_b = q(&[&[0, 0, 1], &[0, 0, 1], &[1, 0, 0]]);
        let gens = [psi_a, psi_b];
        let w = span(3, &[&[1, 0, 1]]);
        let c = invariant_complement(&gens, &w).unwrap().unwrap();
        assert_eq!(c, span(3, &[&[1, -1, 0], &[0, 1, -1]]));
    }

    #[test]
    fn weakly_rep_matches_displayed_matrices() {
        let rep = syntactic_rep::<Q>(&weakly()).unwrap();
        assert_eq!(rep.rep.mu(0), &q(&[&[0, 1, 0], &[0, 0, 1], &[1, -1, 1]]));
        assert_eq!(rep.rep.mu(1), &q(&[&[0, 0, 1], &[0, 0, 1], &[1, 0, 0]]));
    }

    #[test]
    fn trivial_subspaces() {
        let gens = [q(&[&[0, 1], &[1, 0]])];
        assert_eq!(invariant_complement(&gens, &Subspace::full(2)).unwrap(), Some(Subspace::zero(2)));
        assert_eq!(invariant_complement(&gens, &Subspace::zero(2)).unwrap(), Some(Subspace::full(2)));
        assert_eq!(invariant_complement(&gens, &span(2, &[&[1, 0]])), Err(Error::NotInvariant));
    }

    #[test]
    fn swap_in_char_two() {
        // the swap fixes the diagonal, which has no complement when 2 = 0
        let swap = Matrix::<Fp<2>>::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let diag = Subspace::span(2, [vec![Fp::new(1), Fp::new(1)]]);
        assert_eq!(invariant_complement(std::slice::from_ref(&swap), &diag).unwrap(), None);
        let swap_q = q(&[&[0, 1], &[1, 0]]);
        let c = invariant_complement(&[swap_q], &span(2, &[&[1, 1]])).unwrap().unwrap();
        assert_eq!(c, span(2, &[&[1, -1]]));
    }

    #[test]
    fn commutant_dimensions() {
        // a generic diagonal matrix commutes only with diagonals
        let d = q(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(commutant(&[d]).unwrap().len(), 3);
        // a 3-cycle commutes with its own powers
        let c = q(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let com = commutant(std::slice::from_ref(&c)).unwrap();
        assert_eq!(com.len(), 3);
        for x in &com {
            assert_eq!(&c * x, x * &c);
        }
    }

    #[test]
    fn hom_between_inequivalent_is_zero() {
        let triv = [q(&[&[1]])];
        let sign = [q(&[&[-1]])];
        assert!(hom_space(&triv, &sign).unwrap().is_empty());
        assert_eq!(hom_space(&triv, &triv).unwrap().len(), 1);
        // trivial maps into the permutation module once
        let swap = [q(&[&[0, 1], &[1, 0]])];
        let h = hom_space(&triv, &swap).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!((&h[0] * &swap[0]), h[0]);
    }
}
