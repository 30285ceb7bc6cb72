//! Exact sparse linear algebra over `Q(ζ_N)`.
//!
//! Elimination processes columns left to right; among the rows whose leading
//! entry sits in the current column it pivots on the one with the fewest
//! stored entries, which keeps fill-in down on the very sparse symmetrizer
//! matrices this crate produces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// A sparse vector: sorted, duplicate-free, nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector {
    dim: usize,
    modulus: u32,
    entries: Vec<(usize, ExactScalar)>,
}

impl SparseVector {
    pub fn zero(dim: usize, modulus: u32) -> Self {
        SparseVector { dim, modulus, entries: Vec::new() }
    }

    pub fn basis(dim: usize, modulus: u32, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range {dim}");
        SparseVector { dim, modulus, entries: vec![(index, ExactScalar::one(modulus))] }
    }

    /// Builds a vector from unsorted entries; duplicates are summed.
    pub fn from_entries(
        dim: usize,
        modulus: u32,
        entries: impl IntoIterator<Item = (usize, ExactScalar)>,
    ) -> Self {
        let mut acc = Accumulator::new(modulus);
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range {dim}");
            acc.add(i, v);
        }
        acc.into_vector(dim)
    }

    pub fn from_dense(modulus: u32, values: &[ExactScalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| {
                assert_eq!(v.modulus(), modulus, "mixed moduli in vector");
                (i, v.clone())
            })
            .collect();
        SparseVector { dim: values.len(), modulus, entries }
    }

    /// Caller guarantees the entries are sorted, distinct and nonzero.
    pub(crate) fn from_sorted(dim: usize, modulus: u32, entries: Vec<(usize, ExactScalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVector { dim, modulus, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, ExactScalar)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Option<&ExactScalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<&(usize, ExactScalar)> {
        self.entries.first()
    }

    pub fn to_dense(&self) -> Vec<ExactScalar> {
        let mut out = vec![ExactScalar::zero(self.modulus); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scaled(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim, self.modulus);
        }
        let entries = self.entries.iter().map(|(i, v)| (*i, v * s)).collect();
        SparseVector { dim: self.dim, modulus: self.modulus, entries }
    }

    /// `self + s · other`.
    pub fn add_scaled(&self, other: &SparseVector, s: &ExactScalar) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if s.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb * s));
                        b.next();
                    } else {
                        let v = va + &(vb * s);
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb * s));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector { dim: self.dim, modulus: self.modulus, entries: out }
    }

    pub fn add(&self, other: &SparseVector) -> Self {
        self.add_scaled(other, &ExactScalar::one(self.modulus))
    }

    pub fn sub(&self, other: &SparseVector) -> Self {
        self.add_scaled(other, &ExactScalar::from_integer(self.modulus, -1))
    }

    /// Kronecker product: index `i · other.dim + j`.
    pub fn tensor(&self, other: &SparseVector) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in tensor product");
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * other.dim + j, a * b));
            }
        }
        SparseVector { dim: self.dim * other.dim, modulus: self.modulus, entries }
    }

    /// Re-expresses the vector in a modulus that `N` divides.
    pub fn embed(&self, target: u32) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| Ok((*i, v.embed(target)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseVector { dim: self.dim, modulus: target, entries })
    }
}

/// Sums scalars per index; converts to a [`SparseVector`] dropping zeros.
pub(crate) struct Accumulator {
    modulus: u32,
    map: BTreeMap<usize, ExactScalar>,
}

impl Accumulator {
    pub(crate) fn new(modulus: u32) -> Self {
        Accumulator { modulus, map: BTreeMap::new() }
    }

    pub(crate) fn add(&mut self, index: usize, value: ExactScalar) {
        if value.is_zero() {
            return;
        }
        match self.map.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &value;
                *e.get_mut() = sum;
            }
        }
    }

    pub(crate) fn add_vector(&mut self, v: &SparseVector, s: &ExactScalar) {
        for (i, x) in v.entries() {
            self.add(*i, x * s);
        }
    }

    pub(crate) fn into_vector(self, dim: usize) -> SparseVector {
        let entries = self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        SparseVector { dim, modulus: self.modulus, entries }
    }
}

/// A sparse matrix over `Q(ζ_N)`, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    modulus: u32,
    columns: Vec<SparseVector>,
}

/// JSON form `{"rows": r, "cols": c, "entries": [[row, col, scalar], ...]}`.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, ExactScalar)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: u32) -> Self {
        SparseMatrix { rows, modulus, columns: vec![SparseVector::zero(rows, modulus); cols] }
    }

    pub fn identity(n: usize, modulus: u32) -> Self {
        SparseMatrix {
            rows: n,
            modulus,
            columns: (0..n).map(|i| SparseVector::basis(n, modulus, i)).collect(),
        }
    }

    pub fn from_columns(rows: usize, modulus: u32, columns: Vec<SparseVector>) -> Self {
        for c in &columns {
            assert_eq!(c.dim(), rows, "column length mismatch");
            assert_eq!(c.modulus(), modulus, "mixed moduli in matrix");
        }
        SparseMatrix { rows, modulus, columns }
    }

    pub fn from_rows(cols: usize, modulus: u32, rows: &[SparseVector]) -> Self {
        Self::from_triplets(
            rows.len(),
            cols,
            modulus,
            rows.iter().enumerate().flat_map(|(r, v)| v.entries().iter().map(move |(c, x)| (r, *c, x.clone()))),
        )
    }

    /// Duplicate positions are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        modulus: u32,
        triplets: impl IntoIterator<Item = (usize, usize, ExactScalar)>,
    ) -> Self {
        let mut per_col: Vec<Vec<(usize, ExactScalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of range {rows}x{cols}");
            per_col[c].push((r, v));
        }
        let columns = per_col
            .into_iter()
            .map(|es| SparseVector::from_entries(rows, modulus, es))
            .collect();
        SparseMatrix { rows, modulus, columns }
    }

    pub fn from_dense(modulus: u32, rows: &[Vec<ExactScalar>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_triplets(
            rows.len(),
            cols,
            modulus,
            rows.iter().enumerate().flat_map(|(r, row)| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn column(&self, j: usize) -> &SparseVector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> ExactScalar {
        self.columns[c].get(r).cloned().unwrap_or_else(|| ExactScalar::zero(self.modulus))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// All stored entries in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, ExactScalar)> {
        let mut t: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        t.sort_by_key(|(r, c, _)| (*r, *c));
        t
    }

    pub fn row_vectors(&self) -> Vec<SparseVector> {
        let mut per_row: Vec<Vec<(usize, ExactScalar)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.entries() {
                per_row[*r].push((c, v.clone()));
            }
        }
        let cols = self.cols();
        per_row
            .into_iter()
            .map(|es| SparseVector::from_sorted(cols, self.modulus, es))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix { rows: self.cols(), modulus: self.modulus, columns: self.row_vectors() }
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.cols(), "dimension mismatch in matrix-vector product");
        let mut acc = Accumulator::new(self.modulus);
        for (j, x) in v.entries() {
            acc.add_vector(&self.columns[*j], x);
        }
        acc.into_vector(self.rows)
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows(), "dimension mismatch in matrix product");
        let columns = other.columns.iter().map(|c| self.mul_vec(c)).collect();
        SparseMatrix { rows: self.rows, modulus: self.modulus, columns }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b)).collect();
        SparseMatrix { rows: self.rows, modulus: self.modulus, columns }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.sub(b)).collect();
        SparseMatrix { rows: self.rows, modulus: self.modulus, columns }
    }

    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.columns {
            for b in &other.columns {
                columns.push(a.tensor(b));
            }
        }
        SparseMatrix { rows: self.rows * other.rows, modulus: self.modulus, columns }
    }

    /// The submatrix on the given (sorted or not) row and column index lists.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut row_pos = vec![usize::MAX; self.rows];
        for (k, &r) in rows.iter().enumerate() {
            row_pos[r] = k;
        }
        let columns = cols
            .iter()
            .map(|&c| {
                SparseVector::from_entries(
                    rows.len(),
                    self.modulus,
                    self.columns[c]
                        .entries()
                        .iter()
                        .filter(|(r, _)| row_pos[*r] != usize::MAX)
                        .map(|(r, v)| (row_pos[*r], v.clone())),
                )
            })
            .collect();
        SparseMatrix { rows: rows.len(), modulus: self.modulus, columns }
    }

    pub fn embed(&self, target: u32) -> Result<SparseMatrix> {
        let columns = self.columns.iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { rows: self.rows, modulus: target, columns })
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn nullspace_basis(&self) -> Vec<SparseVector> {
        nullspace_basis(self)
    }

    /// Exact inverse via reduction of `[M | I]`.
    pub fn inverse(&self) -> Result<SparseMatrix> {
        let n = self.rows;
        if self.cols() != n {
            return Err(Error::Shape(format!("cannot invert a {}x{} matrix", n, self.cols())));
        }
        let one = ExactScalar::one(self.modulus);
        let aug: Vec<SparseVector> = self
            .row_vectors()
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                let mut es = row.entries().to_vec();
                es.push((n + i, one.clone()));
                SparseVector::from_sorted(2 * n, self.modulus, es)
            })
            .collect();
        let ech = RowEchelon::new(aug, 2 * n, self.modulus).into_reduced();
        if ech.rank() != n || ech.pivots.iter().enumerate().any(|(i, (c, _))| *c != i) {
            return Err(Error::Singular);
        }
        let rows: Vec<SparseVector> = ech
            .pivots
            .iter()
            .map(|(_, r)| {
                SparseVector::from_sorted(
                    n,
                    self.modulus,
                    r.entries().iter().filter(|(c, _)| *c >= n).map(|(c, v)| (c - n, v.clone())).collect(),
                )
            })
            .collect();
        Ok(SparseMatrix::from_rows(n, self.modulus, &rows))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { rows: self.rows, cols: self.cols(), entries: self.triplets() }
    }

    /// Entries are embedded into the smallest common cyclotomic field.
    pub fn from_json(j: MatrixJson) -> Result<SparseMatrix> {
        for (r, c, _) in &j.entries {
            if *r >= j.rows || *c >= j.cols {
                return Err(Error::Shape(format!("entry ({r}, {c}) outside a {}x{} matrix", j.rows, j.cols)));
            }
        }
        let values: Vec<ExactScalar> = j.entries.iter().map(|(_, _, v)| v.clone()).collect();
        let (modulus, values) = if values.is_empty() { (1, values) } else { crate::scalar::embed_common(&values)? };
        Ok(Self::from_triplets(
            j.rows,
            j.cols,
            modulus,
            j.entries.iter().zip(values).map(|((r, c, _), v)| (*r, *c, v)),
        ))
    }
}

/// Row echelon form of a set of row vectors, pivots sorted by column.
///
/// After [`RowEchelon::into_reduced`] every pivot is `1` and pivot columns
/// are zero in all other rows.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    modulus: u32,
    pivots: Vec<(usize, SparseVector)>,
    reduced: bool,
}

impl RowEchelon {
    pub fn new(rows: impl IntoIterator<Item = SparseVector>, ncols: usize, modulus: u32) -> Self {
        let mut buckets: Vec<Vec<SparseVector>> = vec![Vec::new(); ncols];
        for r in rows {
            assert_eq!(r.dim(), ncols, "row length mismatch");
            if let Some((c, _)) = r.leading() {
                buckets[*c].push(r);
            }
        }
        let mut pivots = Vec::new();
        for col in 0..ncols {
            let mut bucket = std::mem::take(&mut buckets[col]);
            if bucket.is_empty() {
                continue;
            }
            let best = bucket
                .iter()
                .enumerate()
                .min_by_key(|(_, r)| r.nnz())
                .map(|(i, _)| i)
                .unwrap();
            let raw = bucket.swap_remove(best);
            let lead_inv = raw.leading().unwrap().1.inverse().expect("leading entries are nonzero");
            let pivot = raw.scaled(&lead_inv);
            for r in bucket {
                let factor = -&r.leading().unwrap().1;
                let reduced = r.add_scaled(&pivot, &factor);
                if let Some((c, _)) = reduced.leading() {
                    debug_assert!(*c > col);
                    buckets[*c].push(reduced);
                }
            }
            pivots.push((col, pivot));
        }
        RowEchelon { ncols, modulus, pivots, reduced: false }
    }

    /// Back-substitution to reduced row echelon form.
    pub fn into_reduced(mut self) -> Self {
        if self.reduced {
            return self;
        }
        let mut pivot_of = vec![usize::MAX; self.ncols];
        for (k, (c, _)) in self.pivots.iter().enumerate() {
            pivot_of[*c] = k;
        }
        for i in (0..self.pivots.len()).rev() {
            let (col, row) = &self.pivots[i];
            let mut acc = row.clone();
            for (c, a) in row.entries() {
                let k = pivot_of[*c];
                if *c != *col && k != usize::MAX {
                    acc = acc.add_scaled(&self.pivots[k].1, &-a);
                }
            }
            self.pivots[i].1 = acc;
        }
        self.reduced = true;
        self
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.iter().map(|(c, _)| *c).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for (c, _) in &self.pivots {
            is_pivot[*c] = true;
        }
        (0..self.ncols).filter(|c| !is_pivot[*c]).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVector> {
        self.pivots.iter().map(|(_, r)| r)
    }

    /// Normal form of `v` modulo the row space: the unique representative
    /// supported on free columns. Requires reduced form.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        assert!(self.reduced, "reduce needs reduced row echelon form");
        let mut acc = v.clone();
        let mut k = 0;
        for (c, a) in v.entries() {
            while k < self.pivots.len() && self.pivots[k].0 < *c {
                k += 1;
            }
            if k < self.pivots.len() && self.pivots[k].0 == *c {
                acc = acc.add_scaled(&self.pivots[k].1, &-a);
            }
        }
        acc
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Basis of `{x : R x = 0}` for the rows `R`. Requires reduced form.
    pub fn nullspace_basis(&self) -> Vec<SparseVector> {
        assert!(self.reduced, "nullspace needs reduced row echelon form");
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, f) in free.iter().enumerate() {
            slot[*f] = k;
        }
        let one = ExactScalar::one(self.modulus);
        let mut basis: Vec<Vec<(usize, ExactScalar)>> = free.iter().map(|f| vec![(*f, one.clone())]).collect();
        for (col, row) in &self.pivots {
            for (c, a) in row.entries() {
                if slot[*c] != usize::MAX {
                    basis[slot[*c]].push((*col, -a));
                }
            }
        }
        basis
            .into_iter()
            .map(|es| SparseVector::from_entries(self.ncols, self.modulus, es))
            .collect()
    }
}

/// Exact rank.
pub fn rank(m: &SparseMatrix) -> usize {
    // Eliminate along the shorter side.
    if m.rows() < m.cols() {
        RowEchelon::new(m.columns().iter().cloned(), m.rows(), m.modulus()).rank()
    } else {
        RowEchelon::new(m.row_vectors(), m.cols(), m.modulus()).rank()
    }
}

/// Basis of the right kernel `{v : M v = 0}`.
pub fn nullspace_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    RowEchelon::new(m.row_vectors(), m.cols(), m.modulus()).into_reduced().nullspace_basis()
}

/// Dimension of the span of `vectors` inside a space of dimension `ambient_dim`.
pub fn span_rank(vectors: &[SparseVector], ambient_dim: usize) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    RowEchelon::new(vectors.iter().cloned(), ambient_dim, first.modulus()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> ExactScalar {
        ExactScalar::from_integer(1, v)
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let rows: Vec<Vec<ExactScalar>> = rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        SparseMatrix::from_dense(1, &rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SparseMatrix::identity(5, 1).rank(), 5);
        assert_eq!(dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(SparseMatrix::zero(3, 7, 1).rank(), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert!(SparseMatrix::identity(4, 1).nullspace_basis().is_empty());
        assert_eq!(SparseMatrix::zero(1, 3, 1).nullspace_basis().len(), 3);
        let ns = dense(&[&[1, 1]]).nullspace_basis();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(v.get(0).cloned().unwrap(), -v.get(1).cloned().unwrap());
    }

    #[test]
    fn span_rank_examples() {
        assert_eq!(span_rank(&[], 2), 0);
        let e1 = SparseVector::basis(2, 1, 0);
        let e2 = SparseVector::basis(2, 1, 1);
        assert_eq!(span_rank(&[e1.clone(), e1.add(&e2), e2.clone()], 2), 2);
        assert_eq!(span_rank(&[e1.add(&e2), e1.add(&e2).scaled(&q(2))], 2), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let m = dense(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), SparseMatrix::identity(3, 1));
        assert!(matches!(dense(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular)));
    }

    #[test]
    fn reduce_gives_free_column_normal_form() {
        let ech = RowEchelon::new(dense(&[&[1, 1, 0], &[0, 1, 1]]).row_vectors(), 3, 1).into_reduced();
        assert_eq!(ech.free_columns(), vec![2]);
        let v = SparseVector::basis(3, 1, 0);
        let nf = ech.reduce(&v);
        assert_eq!(nf.entries().len(), 1);
        assert_eq!(nf.entries()[0].0, 2);
    }

    #[test]
    fn cyclotomic_rank() {
        // [[1, ζ3], [ζ3², 1]] is singular: det = 1 - ζ3³ = 0.
        let z = ExactScalar::zeta(3);
        let m = SparseMatrix::from_dense(3, &[vec![ExactScalar::one(3), z.clone()], vec![&z * &z, ExactScalar::one(3)]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace_basis();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).is_zero());
    }
}
