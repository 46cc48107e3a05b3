use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{commutant, hom_space, invariant_complement, spin, syntactic_algebra, MatrixAlgebra};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{minimal_polynomial, Poly};
use crate::representation::LinRep;

/// An invariant subspace together with the action restricted to it.
#[derive(Clone, Debug)]
pub struct Component<F: Field> {
    /// Rows span the subspace inside the representation space.
    pub basis: Matrix<F>,
    /// `basis · μ(a) = generators[a] · basis`.
    pub generators: Vec<Matrix<F>>,
    /// Irreducibility was proved, not just left unsplit.
    pub certified: bool,
}

impl<F: Field> Component<F> {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn subspace(&self) -> Subspace<F> {
        self.basis.row_space()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicComponent {
    pub dim: usize,
    pub irreducible_dim: usize,
    pub multiplicity: usize,
    /// Indices into [`Decomposition::components`].
    pub components: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub components: Vec<Component<F>>,
    pub isotypic: Vec<IsotypicComponent>,
}

impl<F: Field> Decomposition<F> {
    /// Dimensions of the components, ascending.
    pub fn irreducible_dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.components.iter().map(Component::dim).collect();
        d.sort_unstable();
        d
    }

    pub fn isotypic_dims(&self) -> Vec<usize> {
        self.isotypic.iter().map(|c| c.dim).collect()
    }

    /// Every component is proved irreducible.
    pub fn certified(&self) -> bool {
        self.components.iter().all(|c| c.certified)
    }
}

/// Splits a completely reducible representation into irreducible components
/// and groups equivalent ones.
pub fn decompose<F: Field>(rep: &LinRep<F>, cfg: &Config) -> Result<Decomposition<F>> {
    if !syntactic_algebra(rep).is_semisimple()? {
        return Err(Error::NotSemisimple);
    }
    decompose_module(rep.generators(), cfg)
}

/// Same as [`decompose`] for bare generator matrices, assumed to generate a
/// semisimple algebra. Fails with `NotSemisimple` if a split is found without
/// an invariant complement.
pub fn decompose_module<F: Field>(gens: &[Matrix<F>], cfg: &Config) -> Result<Decomposition<F>> {
    let n = gens.first().map_or(0, Matrix::rows);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut done: Vec<Component<F>> = Vec::new();
    let mut stack = Vec::new();
    if n > 0 {
        stack.push(Component { basis: Matrix::identity(n), generators: gens.to_vec(), certified: false });
    }
    while let Some(mut piece) = stack.pop() {
        match split(&piece.generators, &mut rng, cfg.trials)? {
            Outcome::Irreducible => {
                piece.certified = true;
                done.push(piece);
            }
            Outcome::Unknown => done.push(piece),
            Outcome::Split(u, v) => {
                for part in [u, v] {
                    stack.push(Component {
                        basis: &part.basis_matrix() * &piece.basis,
                        generators: piece
                            .generators
                            .iter()
                            .map(|g| part.restrict(g).expect("invariant part"))
                            .collect(),
                        certified: false,
                    });
                }
            }
        }
    }
    done.sort_by_key(Component::dim);
    let isotypic = group_isotypic(&done)?;
    Ok(Decomposition { components: done, isotypic })
}

fn group_isotypic<F: Field>(comps: &[Component<F>]) -> Result<Vec<IsotypicComponent>> {
    let mut class: Vec<usize> = (0..comps.len()).collect();
    for j in 0..comps.len() {
        for i in 0..j {
            if class[i] == i
                && comps[i].dim() == comps[j].dim()
                && !hom_space(&comps[i].generators, &comps[j].generators)?.is_empty()
            {
                class[j] = i;
                break;
            }
        }
    }
    let mut out: Vec<IsotypicComponent> = Vec::new();
    let mut slot = vec![usize::MAX; comps.len()];
    for (j, &c) in class.iter().enumerate() {
        if c == j {
            slot[j] = out.len();
            out.push(IsotypicComponent {
                dim: 0,
                irreducible_dim: comps[j].dim(),
                multiplicity: 0,
                components: Vec::new(),
            });
        }
        let iso = &mut out[slot[c]];
        iso.components.push(j);
        iso.multiplicity += 1;
        iso.dim += comps[j].dim();
    }
    Ok(out)
}

enum Outcome<F> {
    Irreducible,
    Unknown,
    Split(Subspace<F>, Subspace<F>),
}

fn split<F: Field>(gens: &[Matrix<F>], rng: &mut ChaCha8Rng, trials: usize) -> Result<Outcome<F>> {
    let d = gens.first().map_or(0, Matrix::rows);
    if d <= 1 {
        return Ok(Outcome::Irreducible);
    }
    let com = commutant(gens)?;
    if com.len() == 1 {
        return Ok(Outcome::Irreducible);
    }
    // Fitting decomposition along an endomorphism with an eigenvalue in F
    for c in &com {
        for alpha in minimal_polynomial(c)?.roots().unwrap_or_default() {
            let shifted = c - &Matrix::identity(d).scale(&alpha);
            if shifted.is_zero() {
                continue;
            }
            let p = shifted.pow(d);
            if p.is_zero() {
                return complement_of(gens, shifted.left_kernel());
            }
            return Ok(Outcome::Split(p.left_kernel(), p.row_space()));
        }
    }
    let alg = MatrixAlgebra::generated_by(d, gens.to_vec());
    let b = alg.basis();
    let mut candidates: Vec<Matrix<F>> = b.to_vec();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            candidates.push(&b[i] + &b[j]);
        }
    }
    let transposed: Vec<Matrix<F>> = gens.iter().map(Matrix::transpose).collect();
    let mut next = 0;
    for t in 0.. {
        let x = if next < candidates.len() {
            next += 1;
            candidates[next - 1].clone()
        } else if t < candidates.len() + trials {
            let coeffs: Vec<F> = (0..b.len()).map(|_| F::from_i64(rng.gen_range(-3..=3))).collect();
            alg.element(&coeffs)
        } else {
            break;
        };
        for p in known_irreducible_factors(&minimal_polynomial(&x)?) {
            let px = p.eval_matrix(&x);
            let kernel = px.left_kernel();
            for v in kernel.basis() {
                let s = spin(gens, [v.clone()], d);
                if !s.is_full() {
                    return complement_of(gens, s);
                }
            }
            if kernel.dim() != p.degree().unwrap_or(0) {
                continue;
            }
            // dual half of Norton's test
            let w = px.kernel().basis()[0].clone();
            let s = spin(&transposed, [w], d);
            if !s.is_full() {
                return complement_of(gens, s.annihilator());
            }
            return Ok(Outcome::Irreducible);
        }
    }
    Ok(Outcome::Unknown)
}

fn complement_of<F: Field>(gens: &[Matrix<F>], u: Subspace<F>) -> Result<Outcome<F>> {
    let c = invariant_complement(gens, &u)?.ok_or(Error::NotSemisimple)?;
    Ok(Outcome::Split(u, c))
}

/// Monic irreducible factors of `f` that can be identified without
/// factoring: linear ones, and the rest of the radical when it has degree 2
/// or 3 and no root.
fn known_irreducible_factors<F: Field>(f: &Poly<F>) -> Vec<Poly<F>> {
    let r = f.radical();
    let Some(roots) = r.roots() else {
        return Vec::new();
    };
    let mut rest = r;
    let mut out = Vec::new();
    for a in roots {
        let lin = Poly::linear(a);
        rest = rest.div_rem(&lin).0;
        out.push(lin);
    }
    if matches!(rest.degree(), Some(2 | 3)) {
        out.push(rest.monic());
    }
    out
}
