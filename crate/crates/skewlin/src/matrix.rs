//! Dense matrices over a division ring, with the two products that
//! noncommutativity forces apart and the transports between them.
//!
//! RC product: `C[i][j] = sum_k A[i][k] * B[k][j]` (factors in written order).
//! CR product: `C[i][j] = sum_k B[k][j] * A[i][k]` (factors reversed).
//!
//! Three independent transports connect them and are used as mutual oracles:
//!
//! * transpose: `transpose(A rc* B) = transpose(B) cr* transpose(A)`
//! * conjugation: `A cr* B = conj(conj(A) rc* conj(B))` entrywise
//! * opposite ring: RC over `Opposite<T>` computes CR over `T`

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::par;
use crate::scalar::{DivisionRing, Opposite};

/// Which matrix product an operation is taken under.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Rc,
    Cr,
}

impl ProductKind {
    pub fn dual(self) -> Self {
        match self {
            ProductKind::Rc => ProductKind::Cr,
            ProductKind::Cr => ProductKind::Rc,
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductKind::Rc => write!(f, "RC"),
            ProductKind::Cr => write!(f, "CR"),
        }
    }
}

/// A strictly increasing list of 0-based indices selecting rows or columns.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self, Error> {
        for pos in 1..indices.len() {
            if indices[pos - 1] >= indices[pos] {
                return Err(Error::UnorderedIndexSet { position: pos });
            }
        }
        Ok(IndexSet(indices))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    /// Position of `index` within the set, when present.
    pub fn position(&self, index: usize) -> Option<usize> {
        self.0.binary_search(&index).ok()
    }

    /// The indices of `0..n` not in the set, in ascending order.
    pub fn complement(&self, n: usize) -> IndexSet {
        IndexSet((0..n).filter(|i| !self.contains(*i)).collect())
    }

    /// Errors unless every index lies below `dim`.
    pub fn check_within(&self, dim: usize) -> Result<(), Error> {
        match self.0.last() {
            Some(&last) if last >= dim => Err(Error::IndexOutOfRange {
                index: last,
                len: dim,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, index) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{index}")?;
        }
        write!(f, "}}")
    }
}

/// A dense `rows x cols` matrix stored row-major. Values are immutable in
/// spirit: every operation returns a fresh matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: DivisionRing> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                operation: "matrix construction",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != width {
                return Err(Error::DimensionMismatch {
                    operation: "matrix construction",
                    left: (1, width),
                    right: (1, row.len()),
                });
            }
        }
        Ok(Matrix {
            rows: height,
            cols: width,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..rows * cols).map(|n| f(n / cols, n % cols)).collect();
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn row_vector(entries: Vec<T>) -> Self {
        let cols = entries.len();
        Matrix {
            rows: 1,
            cols,
            entries,
        }
    }

    pub fn column_vector(entries: Vec<T>) -> Self {
        let rows = entries.len();
        Matrix {
            rows,
            cols: 1,
            entries,
        }
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

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        if i < self.rows && j < self.cols {
            Some(&self.entries[i * self.cols + j])
        } else {
            None
        }
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }

    pub fn map<U: DivisionRing>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_same_shape(&self, rhs: &Self, operation: &'static str) -> Result<(), Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                operation,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_same_shape(rhs, "matrix addition")?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_same_shape(rhs, "matrix subtraction")?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix::new(self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    /// `d * A`: every entry multiplied by `d` on the left.
    pub fn scale_left(&self, d: &T) -> Self {
        self.map(|a| d.mul(a))
    }

    /// `A * d`: every entry multiplied by `d` on the right.
    pub fn scale_right(&self, d: &T) -> Self {
        self.map(|a| a.mul(d))
    }

    /// RC product: `C[i][j] = sum_k self[i][k] * rhs[k][j]`.
    pub fn rc_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.product(rhs, false)
    }

    /// CR product: `C[i][j] = sum_k rhs[k][j] * self[i][k]`.
    pub fn cr_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.product(rhs, true)
    }

    pub fn mul(&self, rhs: &Self, product: ProductKind) -> Result<Self, Error> {
        match product {
            ProductKind::Rc => self.rc_mul(rhs),
            ProductKind::Cr => self.cr_mul(rhs),
        }
    }

    fn product(&self, rhs: &Self, reversed: bool) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                operation: "matrix product",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let (m, n, p) = (self.rows, self.cols, rhs.cols);
        // Inner dimension 0 yields the zero matrix.
        let rows = par::map_range(m, m * p * n.max(1) >= par::PRODUCT_CUTOFF, |i| {
            let mut row = Vec::with_capacity(p);
            for j in 0..p {
                let mut acc = T::zero();
                for k in 0..n {
                    let (a, b) = (&self[(i, k)], &rhs[(k, j)]);
                    let term = if reversed { b.mul(a) } else { a.mul(b) };
                    acc = acc.add(&term);
                }
                row.push(acc);
            }
            row
        });
        Matrix::new(m, p, rows.into_iter().flatten().collect())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise conjugation; composing with transpose and the opposite ring
    /// gives the three RC/CR transports.
    pub fn conjugate(&self) -> Self {
        self.map(T::conj)
    }

    /// The same matrix over the opposite ring.
    pub fn into_opposite(&self) -> Matrix<Opposite<T>> {
        self.map(|a| Opposite(a.clone()))
    }

    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Self, Error> {
        rows.check_within(self.rows)?;
        cols.check_within(self.cols)?;
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.iter() {
            for c in cols.iter() {
                entries.push(self[(r, c)].clone());
            }
        }
        Matrix::new(rows.len(), cols.len(), entries)
    }

    /// Row `i` as a `1 x cols` matrix.
    pub fn row(&self, i: usize) -> Result<Self, Error> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows,
            });
        }
        Ok(Matrix::row_vector(
            (0..self.cols).map(|j| self[(i, j)].clone()).collect(),
        ))
    }

    /// Column `j` as a `rows x 1` matrix.
    pub fn col(&self, j: usize) -> Result<Self, Error> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        Ok(Matrix::column_vector(
            (0..self.rows).map(|i| self[(i, j)].clone()).collect(),
        ))
    }

    /// `[self | rhs]` side by side.
    pub fn hstack(&self, rhs: &Self) -> Result<Self, Error> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                operation: "hstack",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        }))
    }
}

impl<T: DivisionRing> Matrix<Opposite<T>> {
    /// Unwraps an opposite-ring matrix back to the base ring.
    pub fn from_opposite(&self) -> Matrix<T> {
        self.map(|a| a.0.clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Aligned rows in brackets, e.g. `[ 1    1+k ]` per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[ ] ({}x{})", self.rows, self.cols);
        }
        let rendered: Vec<String> = self.entries.iter().map(T::to_string).collect();
        let mut widths = vec![0usize; self.cols];
        for (n, text) in rendered.iter().enumerate() {
            let j = n % self.cols;
            widths[j] = widths[j].max(text.len());
        }
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                write!(f, "{:width$}", rendered[i * self.cols + j], width = widths[j])?;
                if j + 1 < self.cols {
                    write!(f, "  ")?;
                }
            }
            write!(f, " ]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
