use std::fmt;

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Incremental reduced row-echelon basis.
///
/// Rows are kept sorted by pivot column, every pivot is 1 and every pivot
/// column is zero in all other rows, so the basis of a given row space is
/// unique.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Subtract the basis from `v` in place; what remains is zero on every pivot column.
    pub fn reduce(&self, v: &mut [F]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub_mul(&f, r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Field::is_zero)
    }

    /// Add `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let s = v[lead].inv().expect("nonzero");
        if !s.is_one() {
            for x in v.iter_mut().skip(lead) {
                if !x.is_zero() {
                    *x = x.mul_ref(&s);
                }
            }
        }
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = x.sub_mul(&f, r);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        true
    }

    pub fn into_subspace(self) -> Subspace<F> {
        Subspace { ambient: self.ncols, basis: self.rows, pivots: self.pivots }
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }
}

/// Canonical reduced row-echelon form: `(rank, basis)` with zero rows dropped.
pub fn rref<F: Field>(m: &Matrix<F>) -> (usize, Matrix<F>) {
    let s = Subspace::from_rows(m.cols(), m.row_vecs()).expect("rows of a matrix share a length");
    let rank = s.dim();
    let basis = if rank == 0 { Matrix::zeros(0, m.cols()) } else { Matrix::from_rows(s.basis.clone()).expect("rectangular") };
    (rank, basis)
}

/// Linear subspace of a coordinate space, stored as its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
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
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors.
    pub fn from_rows(ambient: usize, rows: impl IntoIterator<Item = Vec<F>>) -> Result<Self> {
        let mut e = Echelon::new(ambient);
        for r in rows {
            if r.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: r.len() });
            }
            e.insert(r);
        }
        Ok(e.into_subspace())
    }

    /// `{ x : <c, x> = 0 for every covector c }`.
    pub fn kernel_of(ambient: usize, covectors: impl IntoIterator<Item = Vec<F>>) -> Result<Self> {
        // Reduce with columns reversed: the null vectors read off a reversed
        // echelon form are already in (forward) reduced echelon form.
        let mut e = Echelon::new(ambient);
        for mut c in covectors {
            if c.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: c.len() });
            }
            c.reverse();
            e.insert(c);
            if e.rank() == ambient {
                break;
            }
        }
        Ok(Self::null_from_reversed(&e))
    }

    fn null_from_reversed(e: &Echelon<F>) -> Self {
        let n = e.ncols;
        let mut is_pivot = vec![false; n];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        // free reversed column f' becomes leading column n-1-f'; walk f' downwards
        for f in (0..n).rev().filter(|&f| !is_pivot[f]) {
            let mut w = vec![F::zero(); n];
            w[n - 1 - f] = F::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if !row[f].is_zero() {
                    w[n - 1 - p] = row[f].neg_ref();
                }
            }
            pivots.push(n - 1 - f);
            basis.push(w);
        }
        Subspace { ambient: n, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
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

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("rectangular")
    }

    fn echelon(&self) -> Echelon<F> {
        Echelon { ncols: self.ambient, rows: self.basis.clone(), pivots: self.pivots.clone() }
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: n });
        }
        Ok(())
    }

    /// `v` minus its projection along the basis onto the pivot coordinates.
    pub fn residual(&self, v: &[F]) -> Result<Vec<F>> {
        self.check_ambient(v.len())?;
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub_mul(&f, r);
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        Ok(self.residual(v)?.iter().all(Field::is_zero))
    }

    /// Non-pivot columns, in increasing order; they index the quotient coordinates.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of `v + self` in the quotient, read on the free columns.
    pub fn quotient_coords(&self, v: &[F]) -> Result<Vec<F>> {
        let r = self.residual(v)?;
        let free = self.free_columns();
        Ok(free.into_iter().map(|c| r[c].clone()).collect())
    }

    /// Covectors realizing [`Self::quotient_coords`]; together they span the annihilator.
    pub fn quotient_rows(&self) -> Vec<Vec<F>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut c = vec![F::zero(); self.ambient];
                c[f] = F::one();
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        c[p] = row[f].neg_ref();
                    }
                }
                c
            })
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> Result<bool> {
        other.check_ambient(self.ambient)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First basis vector of `self` not in `other`.
    pub fn first_escape(&self, other: &Subspace<F>) -> Result<Option<Vec<F>>> {
        other.check_ambient(self.ambient)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(Some(b.clone()));
            }
        }
        Ok(None)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut e = big.echelon();
        for b in &small.basis {
            e.insert(b.clone());
        }
        Ok(e.into_subspace())
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Annihilator under the coordinate pairing `<f, x> = sum f_i x_i`.
    pub fn annihilator(&self) -> Self {
        Self::kernel_of(self.ambient, self.basis.iter().cloned()).expect("consistent dims")
    }

    /// Span of `map(b)` over the basis.
    pub fn image(&self, target_dim: usize, mut map: impl FnMut(&[F]) -> Vec<F>) -> Result<Self> {
        Self::from_rows(target_dim, self.basis.iter().map(|b| map(b)))
    }

    /// Add vectors to the span.
    pub fn extend(&self, rows: impl IntoIterator<Item = Vec<F>>) -> Result<Self> {
        let mut e = self.echelon();
        for r in rows {
            self.check_ambient(r.len())?;
            e.insert(r);
        }
        Ok(e.into_subspace())
    }

    pub fn contains_all<'a>(&self, vs: impl IntoIterator<Item = &'a Vec<F>>) -> Result<bool> {
        for v in vs {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; ", self.dim(), self.ambient)?;
        f.debug_list().entries(self.basis.iter()).finish()?;
        write!(f, ")")
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add_ref(&x.mul_ref(y));
        }
    }
    acc
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Field::is_zero)
}
