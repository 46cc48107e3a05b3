use serde::Serialize;

use super::{spin, MatrixAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Outcome of the condensation criterion for an idempotent `e` of the algebra
/// `A` acting on `V`: `V` is completely reducible as soon as `Ve` is completely
/// reducible over `eAe`, `VeA = V` and no nonzero `v` has `vAe = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CondensationReport {
    pub e: Vec<Vec<String>>,
    pub dim_ve: usize,
    pub dim_eae: usize,
    pub ve_completely_reducible: bool,
    pub ve_generates: bool,
    pub annihilator_zero: bool,
    pub conclusion: bool,
}

pub fn condensation_check<F: Field>(alg: &MatrixAlgebra<F>, e: &Matrix<F>) -> Result<CondensationReport> {
    let n = alg.degree();
    if !alg.contains(e) {
        return Err(Error::NotInAlgebra);
    }
    if &(e * e) != e {
        return Err(Error::NotIdempotent);
    }
    let ve = e.row_space();
    // eAe acts on Ve, where e is the identity
    let corner = alg.basis().iter().map(|b| {
        let ebe = &(e * b) * e;
        ve.restrict(&ebe).expect("Ve is stable under eAe")
    });
    let eae = MatrixAlgebra::spanned_by(ve.dim(), corner);
    let ve_cr = eae.is_semisimple()?;
    let ve_generates = spin(alg.generators(), ve.basis().iter().cloned(), n).is_full();
    let stacked: Vec<Matrix<F>> = alg.basis().iter().map(|b| b * e).collect();
    let annihilator_zero = n == 0 || Matrix::hstack(&stacked)?.left_kernel().is_zero();
    Ok(CondensationReport {
        e: e.to_report(),
        dim_ve: ve.dim(),
        dim_eae: eae.dim(),
        ve_completely_reducible: ve_cr,
        ve_generates,
        annihilator_zero,
        conclusion: ve_cr && ve_generates && annihilator_zero,
    })
}
