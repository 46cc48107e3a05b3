use serde::Serialize;

use super::{decompose_module, invariant_complement, spin, syntactic_algebra, IsotypicComponent, MatrixAlgebra};
use crate::automata::Dfa;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::poly::{minimal_polynomial, poly_gcd_squarefree, Poly};
use crate::representation::{syntactic_rep, LinRep};

/// How the radical was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// One letter: the algebra is `F[t]/(f)` for the minimal polynomial `f`.
    MinimalPolynomial,
    TraceForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub field: String,
    pub method: Method,
    pub rep_dim: usize,
    pub algebra_dim: usize,
    pub radical_dim: usize,
    pub completely_reducible: bool,
    /// Minimal polynomial of the single generator, lowest degree first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_polynomial: Option<Vec<String>>,
    pub isotypic: Vec<IsotypicComponent>,
    pub irreducible_dims: Vec<usize>,
    /// Every listed irreducible was proved irreducible.
    pub decomposition_certified: bool,
    /// Basis of an invariant subspace without invariant complement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
}

/// Decides complete reducibility of the language recognized by `dfa` from the
/// radical of its syntactic algebra, and decomposes the representation when
/// the radical vanishes.
pub fn is_completely_reducible<F: Field>(dfa: &Dfa, cfg: &Config) -> Result<ReducibilityReport> {
    let rep = syntactic_rep::<F>(dfa)?.rep;
    reducibility_of::<F>(&rep, cfg)
}

pub fn reducibility_of<F: Field>(rep: &LinRep<F>, cfg: &Config) -> Result<ReducibilityReport> {
    let alg = syntactic_algebra(rep);
    let (method, radical_dim, min_poly) = radical_dimension(rep, &alg)?;
    let min_poly = min_poly.map(|f| f.coeffs().iter().map(F::to_report_string).collect());
    let cr = radical_dim == 0;
    let mut report = ReducibilityReport {
        field: F::name(),
        method,
        rep_dim: rep.dim(),
        algebra_dim: alg.dim(),
        radical_dim,
        completely_reducible: cr,
        minimal_polynomial: min_poly,
        isotypic: Vec::new(),
        irreducible_dims: Vec::new(),
        decomposition_certified: false,
        witness: None,
    };
    if cr {
        let dec = decompose_module(rep.generators(), cfg)?;
        report.irreducible_dims = dec.irreducible_dims();
        report.decomposition_certified = dec.certified();
        report.isotypic = dec.isotypic;
    } else {
        let w = radical_witness(&alg)?;
        if invariant_complement(alg.generators(), &w)?.is_some() {
            return Err(Error::HypothesisViolation(
                "the radical image VJ has an invariant complement".into(),
            ));
        }
        report.witness = Some(w.to_report());
    }
    Ok(report)
}

/// The verdict alone, without decomposition or witness.
pub fn completely_reducible_verdict<F: Field>(dfa: &Dfa) -> Result<bool> {
    let rep = syntactic_rep::<F>(dfa)?.rep;
    let alg = syntactic_algebra(&rep);
    Ok(radical_dimension(&rep, &alg)?.1 == 0)
}

fn radical_dimension<F: Field>(rep: &LinRep<F>, alg: &MatrixAlgebra<F>) -> Result<(Method, usize, Option<Poly<F>>)> {
    if rep.alphabet().len() == 1 {
        let f = minimal_polynomial(rep.mu(0))?;
        let deg = |p: &Poly<F>| p.degree().unwrap_or(0);
        debug_assert_eq!(deg(&f), alg.dim());
        let rd = deg(&f) - deg(&f.radical());
        debug_assert_eq!(rd == 0, poly_gcd_squarefree(&f)?);
        return Ok((Method::MinimalPolynomial, rd, Some(f)));
    }
    if !alg.trace_form_valid() {
        return Err(Error::Unsupported(format!(
            "complete reducibility over {} for a representation of dimension {} on {} letters",
            F::name(),
            rep.dim(),
            rep.alphabet().len()
        )));
    }
    Ok((Method::TraceForm, alg.radical()?.dim(), None))
}

/// `VJ` for the radical `J`: a nonzero invariant subspace without invariant
/// complement when `J ≠ 0`. If `V = VJ ⊕ U` then `UJ = 0`, so `VJ = VJ²`, which
/// forces `VJ = 0` by nilpotency.
pub fn radical_witness<F: Field>(alg: &MatrixAlgebra<F>) -> Result<Subspace<F>> {
    let n = alg.degree();
    let rows: Vec<Vec<F>> = if alg.trace_form_valid() {
        alg.radical_matrices()?.iter().flat_map(|r| r.row_vectors()).collect()
    } else if alg.generators().len() == 1 {
        let x = &alg.generators()[0];
        minimal_polynomial(x)?.radical().eval_matrix(x).row_vectors()
    } else {
        return Err(Error::Unsupported(format!("radical over {} in dimension {n}", F::name())));
    };
    Ok(spin(alg.generators(), rows, n))
}

/// Whether `Σ c_k 1(X_k)` has a semisimple syntactic algebra, checked on the
/// direct sum of the syntactic representations. Empty languages contribute
/// nothing.
pub fn series_combine_cr<F: Field>(parts: &[(F, &Dfa)]) -> Result<bool> {
    let mut reps = Vec::new();
    for (c, d) in parts {
        match syntactic_rep::<F>(d) {
            Ok(r) => reps.push((c.clone(), r.rep)),
            Err(Error::EmptyLanguage) => {}
            Err(e) => return Err(e),
        }
    }
    if reps.is_empty() {
        return Ok(true);
    }
    let refs: Vec<(F, &LinRep<F>)> = reps.iter().map(|(c, r)| (c.clone(), r)).collect();
    let sum = LinRep::combine(&refs)?;
    syntactic_algebra(&sum).is_semisimple()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{boolean_combine, compile, BoolOp};
    use crate::automata::fixtures::weakly;
    use crate::lang::{parse_regex, Alphabet};
    use crate::{Fp, Rational};

    type Q = Rational;

    fn dfa(x: &str, al: &str) -> Dfa {
        compile(&parse_regex(x, None).unwrap(), &Alphabet::parse(al).unwrap()).unwrap()
    }

    fn cr(x: &str, al: &str) -> bool {
        is_completely_reducible::<Q>(&dfa(x, al), &Config::default()).unwrap().completely_reducible
    }

    #[test]
    fn verdicts_on_small_sets() {
        for (x, al) in [("(ab)*", "ab"), ("(ab)*a", "ab"), ("a*", "a"), ("aa*", "a"), ("1", "a")] {
            assert!(cr(x, al), "{x} should be completely reducible");
        }
        for (x, al) in [("a", "a"), ("ab*", "ab")] {
            assert!(!cr(x, al), "{x} should not be completely reducible");
        }
    }

    #[test]
    fn intersection_is_not_closed() {
        let abc = "abc";
        let x = dfa("(ab)*a", abc);
        let y = dfa("(ac)*a", abc);
        assert!(cr("(ab)*a", abc) && cr("(ac)*a", abc));
        let z = boolean_combine(BoolOp::Intersection, &x, Some(&y)).unwrap();
        assert!(!is_completely_reducible::<Q>(&z, &Config::default()).unwrap().completely_reducible);
    }

    #[test]
    fn witness_for_single_letter() {
        let r = is_completely_reducible::<Q>(&dfa("a", "a"), &Config::default()).unwrap();
        assert_eq!(r.radical_dim, 1);
        assert_eq!(r.witness, Some(vec![vec!["0/1".to_string(), "1/1".to_string()]]));
        assert_eq!(r.method, Method::MinimalPolynomial);
    }

    #[test]
    fn weakly_report() {
        let r = is_completely_reducible::<Q>(&weakly(), &Config::default()).unwrap();
        assert!(r.completely_reducible);
        assert_eq!(r.irreducible_dims, vec![1, 2]);
        assert_eq!(r.isotypic.iter().map(|i| i.dim).sum::<usize>(), 3);
        assert!(r.decomposition_certified);
    }

    #[test]
    fn characteristic_p_routes() {
        let cfg = Config::default();
        let even_a = dfa("(aa)*", "a");
        assert!(!is_completely_reducible::<Fp<2>>(&even_a, &cfg).unwrap().completely_reducible);
        assert!(is_completely_reducible::<Fp<3>>(&even_a, &cfg).unwrap().completely_reducible);
        let r = is_completely_reducible::<Fp<2>>(&even_a, &cfg).unwrap();
        assert_eq!(r.radical_dim, 1);
        assert!(r.witness.is_some());
        assert!(matches!(
            is_completely_reducible::<Fp<2>>(&dfa("(ab)*", "ab"), &cfg),
            Err(Error::Unsupported(_))
        ));
        // p above the dimension is fine
        assert!(is_completely_reducible::<Fp<5>>(&dfa("(ab)*", "ab"), &cfg).unwrap().completely_reducible);
    }

    #[test]
    fn empty_language_is_rejected() {
        assert_eq!(
            is_completely_reducible::<Q>(&dfa("0", "ab"), &Config::default()).unwrap_err(),
            Error::EmptyLanguage
        );
    }

    #[test]
    fn combinations() {
        let ab = "ab";
        let one = Q::from_integer(1.into());
        let univ = dfa("(a+b)*", ab);
        let x = dfa("(ab)*", ab);
        assert!(series_combine_cr(&[(one.clone(), &univ), (-one.clone(), &x)]).unwrap());
        assert!(series_combine_cr(&[(one.clone(), &x)]).unwrap());
        let plus = boolean_combine(BoolOp::Difference, &x, Some(&dfa("1", ab))).unwrap();
        assert!(series_combine_cr(&[(one.clone(), &x), (one.clone(), &plus)]).unwrap());
        assert!(!series_combine_cr(&[(one, &dfa("ab*", ab))]).unwrap());
    }
}
