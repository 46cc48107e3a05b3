//! Dense exact linear algebra: matrices, row reduction, subspaces, linear systems.
//!
//! Vectors are plain `Vec<F>`. Matrices act on row vectors from the right
//! (`v * m`), which is the convention used by the representations built on
//! top of this module.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<F>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    /// Row-major data of length `rows * cols`.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    out.data[i * rhs.cols + j].add_mul_assign(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "vector length does not match matrix rows");
        let mut out = vec![F::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                o.add_mul_assign(a, &self.data[k * self.cols + j]);
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn right_apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in c..cols {
                let v = self[(r, j)].clone() * inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..cols {
                    let (src, dst) = (r * cols + j, i * cols + j);
                    let pv = self.data[src].clone();
                    self.data[dst].sub_mul_assign(&f, &pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Right null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, _, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free.iter().map(|&f| {
            let mut x = vec![F::zero(); self.cols];
            x[f] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -r[(row, f)].clone();
            }
            x
        });
        Subspace::span(self.cols, vectors)
    }

    /// Left null space `{v : v * self = 0}`.
    pub fn left_kernel(&self) -> Subspace<F> {
        self.transpose().kernel()
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::span(self.cols, self.row_vectors())
    }

    /// Stacks matrices with the same column count on top of each other.
    pub fn vstack(parts: &[Matrix<F>]) -> Result<Self> {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            if m.cols != cols {
                return Err(Error::DimensionMismatch("vstack with differing column counts".into()));
            }
            data.extend(m.data.iter().cloned());
            rows += m.rows;
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn hstack(parts: &[Matrix<F>]) -> Result<Self> {
        let ts: Vec<Matrix<F>> = parts.iter().map(|m| m.transpose()).collect();
        Ok(Self::vstack(&ts)?.transpose())
    }

    pub fn to_report(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(F::to_report_string).collect())
            .collect()
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: Self) -> Matrix<F> {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: Self) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: Self) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul_assign(x, y);
    }
    acc
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Solves `a * x = b` for a column vector `x`; `None` when inconsistent.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Option<Vec<F>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "system with {} equations and right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let cols = a.cols();
    let bcol = Matrix::from_rows(1, &b.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>())?;
    let aug = Matrix::hstack(&[a.clone(), bcol])?;
    let (r, _, pivots) = aug.rref();
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, cols)].clone();
    }
    Ok(Some(x))
}

/// A subspace of `F^n`, stored as a reduced row echelon basis. Two equal
/// subspaces always have identical bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<F>>,
    {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            ech.insert(v);
        }
        ech.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.ambient, &self.basis).expect("basis rows have ambient length")
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (r, x) in rest.iter_mut().zip(b) {
                r.sub_mul_assign(c, x);
            }
        }
        is_zero_vec(&rest).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// Intersection through the left kernel of the stacked bases.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let stacked = Matrix::vstack(&[self.basis_matrix(), other.basis_matrix()])?;
        let k = stacked.left_kernel();
        let d = self.dim();
        let vectors = k.basis().iter().map(|coef| {
            let mut v = vec![F::zero(); self.ambient];
            for (c, b) in coef[..d].iter().zip(&self.basis) {
                for (x, y) in v.iter_mut().zip(b) {
                    x.add_mul_assign(c, y);
                }
            }
            v
        });
        Ok(Self::span(self.ambient, vectors))
    }

    /// `{x : b . x = 0 for every basis vector b}`.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// Image of the subspace under right multiplication by `m`.
    pub fn image(&self, m: &Matrix<F>) -> Self {
        Self::span(m.cols(), self.basis.iter().map(|v| m.left_apply(v)))
    }

    pub fn is_invariant(&self, m: &Matrix<F>) -> bool {
        self.basis.iter().all(|v| self.contains(&m.left_apply(v)))
    }

    /// Matrix of right multiplication by `m` restricted to this (invariant)
    /// subspace, in the echelon basis.
    pub fn restrict(&self, m: &Matrix<F>) -> Option<Matrix<F>> {
        let rows: Option<Vec<Vec<F>>> =
            self.basis.iter().map(|v| self.coordinates(&m.left_apply(v))).collect();
        Matrix::from_rows(self.dim(), &rows?).ok()
    }

    /// Embeds a coordinate vector back into the ambient space.
    pub fn embed(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(b) {
                x.add_mul_assign(c, y);
            }
        }
        v
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn to_report(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(F::to_report_string).collect())
            .collect()
    }
}

/// Incrementally maintained reduced echelon basis; answers "is this vector
/// new?" as vectors arrive.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    len: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                x.sub_mul_assign(&f, y);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                x.sub_mul_assign(&f, y);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace<F> {
        let mut pairs: Vec<(usize, Vec<F>)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let (pivots, basis) = pairs.into_iter().unzip();
        Subspace { ambient: self.len, basis, pivots }
    }
}

/// A basis kept in insertion order, with coordinates relative to those
/// vectors rather than to an echelon form.
#[derive(Clone, Debug)]
pub struct FixedBasis<F> {
    len: usize,
    vectors: Vec<Vec<F>>,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    /// `rows[r] = sum_j combos[r][j] * vectors[j]`
    combos: Vec<Vec<F>>,
}

impl<F: Field> FixedBasis<F> {
    pub fn new(len: usize) -> Self {
        FixedBasis { len, vectors: Vec::new(), rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<F>> {
        self.vectors
    }

    /// Appends `v` if it is independent of the current vectors.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let k = self.vectors.len();
        let mut red = v.clone();
        let mut combo = vec![F::zero(); k + 1];
        combo[k] = F::one();
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if red[p].is_zero() {
                continue;
            }
            let f = red[p].clone();
            for (x, y) in red.iter_mut().zip(row) {
                x.sub_mul_assign(&f, y);
            }
            for (x, y) in combo.iter_mut().zip(c) {
                x.sub_mul_assign(&f, y);
            }
        }
        let Some(p) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[p].inv().expect("nonzero");
        for x in red.iter_mut().chain(combo.iter_mut()) {
            *x = x.clone() * inv.clone();
        }
        for (row, c) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            c.push(F::zero());
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&red) {
                x.sub_mul_assign(&f, y);
            }
            for (x, y) in c.iter_mut().zip(&combo) {
                x.sub_mul_assign(&f, y);
            }
        }
        self.rows.push(red);
        self.pivots.push(p);
        self.combos.push(combo);
        self.vectors.push(v);
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coefficients `c` with `v = sum_j c[j] * vectors[j]`.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let mut rest = v.to_vec();
        let mut coords = vec![F::zero(); self.vectors.len()];
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if rest[p].is_zero() {
                continue;
            }
            let f = rest[p].clone();
            for (x, y) in rest.iter_mut().zip(row) {
                x.sub_mul_assign(&f, y);
            }
            for (x, y) in coords.iter_mut().zip(c) {
                x.add_mul_assign(&f, y);
            }
        }
        is_zero_vec(&rest).then_some(coords)
    }

    pub fn subspace(&self) -> Subspace<F> {
        Subspace::span(self.len, self.vectors.iter().cloned())
    }
}
