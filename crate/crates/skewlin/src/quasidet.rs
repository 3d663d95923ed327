//! RC and CR quasideterminants.
//!
//! For a square matrix the quasideterminant at `(i, j)` is
//!
//! ```text
//! |A|_ij = A[i][j] - row_i^j rc* inverse(A^ij) rc* col_j^i
//! ```
//!
//! where `A^ij` drops row `i` and column `j`, `row_i^j` is row `i` without
//! entry `j`, and `col_j^i` is column `j` without entry `i`. When the inner
//! minor has no RC inverse the quasideterminant is *undefined* — a value, not
//! an error: rank theory branches on it. On a 1x1 matrix it is the entry.
//!
//! The expansion recurses: the minor's inverse is first attempted through its
//! own quasideterminants (`inverse[q][p] = |M|_pq^{-1}`), which revisits the
//! same sub-minors combinatorially, so the engine memoizes every sub-inverse
//! by its live (row set, column set) pair. Whenever a needed quasideterminant
//! is undefined or zero — which happens for perfectly invertible matrices
//! whose inverses contain zeros — the engine falls back to elimination for
//! that minor. Every recursively built inverse is verified against its minor
//! before being trusted.
//!
//! The independent oracle (used in tests, never here) is the inverse-entry
//! relation: `|A|_ij = (B[j][i])^{-1}` for `B` the elimination RC inverse.

use std::collections::HashMap;

use crate::elim;
use crate::error::Error;
use crate::matrix::{IndexSet, Matrix};
use crate::scalar::DivisionRing;

/// Value of a quasideterminant: a scalar, or undefined with the minor whose
/// inversion failed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuasidetResult<T> {
    Defined(T),
    Undefined {
        minor_rows: IndexSet,
        minor_cols: IndexSet,
    },
}

impl<T> QuasidetResult<T> {
    pub fn is_defined(&self) -> bool {
        matches!(self, QuasidetResult::Defined(_))
    }

    pub fn defined(&self) -> Option<&T> {
        match self {
            QuasidetResult::Defined(v) => Some(v),
            QuasidetResult::Undefined { .. } => None,
        }
    }
}

/// Memo key: the live (row, column) index lists of a minor.
type MinorKey = (Vec<usize>, Vec<usize>);

/// Computes quasideterminants of one matrix, sharing sub-minor inverses
/// across positions. The memo lives as long as the engine: create one engine
/// per top-level computation.
pub struct QuasidetEngine<'a, T> {
    matrix: &'a Matrix<T>,
    memo: HashMap<MinorKey, Option<Matrix<T>>>,
}

impl<'a, T: DivisionRing> QuasidetEngine<'a, T> {
    /// The matrix must be square.
    pub fn new(matrix: &'a Matrix<T>) -> Result<Self, Error> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(QuasidetEngine {
            matrix,
            memo: HashMap::new(),
        })
    }

    /// RC quasideterminant at `(i, j)`.
    pub fn rc_quasidet(&mut self, i: usize, j: usize) -> Result<QuasidetResult<T>, Error> {
        let n = self.matrix.rows();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        if j >= n {
            return Err(Error::IndexOutOfRange { index: j, len: n });
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (0..n).collect();
        Ok(self.expand(&rows, &cols, i, j))
    }

    /// The full table of RC quasideterminants; positions share the memo.
    pub fn rc_table(&mut self) -> Result<Vec<Vec<QuasidetResult<T>>>, Error> {
        let n = self.matrix.rows();
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(self.rc_quasidet(i, j)?);
            }
            table.push(row);
        }
        Ok(table)
    }

    /// The expansion over live index lists; `pi`/`pj` are positions into them.
    fn expand(&mut self, rows: &[usize], cols: &[usize], pi: usize, pj: usize) -> QuasidetResult<T> {
        let k = rows.len();
        if k == 1 {
            return QuasidetResult::Defined(self.matrix[(rows[0], cols[0])].clone());
        }
        let sub_rows: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter_map(|(p, &r)| (p != pi).then_some(r))
            .collect();
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter_map(|(q, &c)| (q != pj).then_some(c))
            .collect();
        let Some(inverse) = self.minor_inverse(&sub_rows, &sub_cols) else {
            return QuasidetResult::Undefined {
                minor_rows: IndexSet::new(sub_rows).expect("sorted sublist"),
                minor_cols: IndexSet::new(sub_cols).expect("sorted sublist"),
            };
        };
        let row = Matrix::row_vector(
            sub_cols
                .iter()
                .map(|&c| self.matrix[(rows[pi], c)].clone())
                .collect(),
        );
        let col = Matrix::column_vector(
            sub_rows
                .iter()
                .map(|&r| self.matrix[(r, cols[pj])].clone())
                .collect(),
        );
        let correction = row
            .rc_mul(&inverse)
            .and_then(|ri| ri.rc_mul(&col))
            .expect("conformable by construction");
        let value = self.matrix[(rows[pi], cols[pj])].sub(&correction[(0, 0)]);
        QuasidetResult::Defined(value)
    }

    /// RC inverse of the minor on the given live index lists, memoized.
    /// `None` means the minor is RC-singular.
    fn minor_inverse(&mut self, rows: &[usize], cols: &[usize]) -> Option<Matrix<T>> {
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(cached) = self.memo.get(&key) {
            return cached.clone();
        }
        let result = self.minor_inverse_uncached(rows, cols);
        self.memo.insert(key, result.clone());
        result
    }

    fn minor_inverse_uncached(&mut self, rows: &[usize], cols: &[usize]) -> Option<Matrix<T>> {
        let k = rows.len();
        if k == 1 {
            return self.matrix[(rows[0], cols[0])]
                .inv()
                .map(|v| Matrix::row_vector(vec![v]));
        }
        if let Some(candidate) = self.recursive_inverse(rows, cols) {
            return Some(candidate);
        }
        let minor = self.live_minor(rows, cols);
        elim::rc_inverse(&minor).expect("minor is square")
    }

    /// Inverse built from quasideterminant entries, `B[q][p] = |M|_pq^{-1}`.
    /// Returns `None` when any entry is undefined or zero, or when the
    /// verification product fails; the caller then decides by elimination.
    fn recursive_inverse(&mut self, rows: &[usize], cols: &[usize]) -> Option<Matrix<T>> {
        let k = rows.len();
        let mut entries = vec![T::zero(); k * k];
        for p in 0..k {
            for q in 0..k {
                let value = match self.expand(rows, cols, p, q) {
                    QuasidetResult::Defined(v) => v,
                    QuasidetResult::Undefined { .. } => return None,
                };
                entries[q * k + p] = value.inv()?;
            }
        }
        let candidate = Matrix::new(k, k, entries).expect("square by construction");
        let minor = self.live_minor(rows, cols);
        let identity = Matrix::identity(k);
        let left_ok = minor.rc_mul(&candidate).ok()? == identity;
        let right_ok = candidate.rc_mul(&minor).ok()? == identity;
        (left_ok && right_ok).then_some(candidate)
    }

    fn live_minor(&self, rows: &[usize], cols: &[usize]) -> Matrix<T> {
        Matrix::from_fn(rows.len(), cols.len(), |p, q| {
            self.matrix[(rows[p], cols[q])].clone()
        })
    }
}

/// RC quasideterminant of `a` at `(i, j)` with a fresh engine.
pub fn rc_quasidet<T: DivisionRing>(
    a: &Matrix<T>,
    i: usize,
    j: usize,
) -> Result<QuasidetResult<T>, Error> {
    QuasidetEngine::new(a)?.rc_quasidet(i, j)
}

/// CR quasideterminant through the conjugation transport:
/// `|A|^cr_ij = conj(|conj(A)|^rc_ij)`. Equivalently the expansion with every
/// scalar product reversed. Undefined results keep the same minor index sets,
/// since conjugation preserves which minors invert.
pub fn cr_quasidet<T: DivisionRing>(
    a: &Matrix<T>,
    i: usize,
    j: usize,
) -> Result<QuasidetResult<T>, Error> {
    match rc_quasidet(&a.conjugate(), i, j)? {
        QuasidetResult::Defined(v) => Ok(QuasidetResult::Defined(v.conj())),
        undefined => Ok(undefined),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Quaternion, Rational};

    fn q(text: &str) -> Quaternion {
        Quaternion::parse(text).unwrap()
    }

    fn witness() -> Matrix<Quaternion> {
        Matrix::from_rows(vec![vec![q("1"), q("1+k")], vec![q("j"), q("i+j")]]).unwrap()
    }

    #[test]
    fn one_by_one_is_the_entry() {
        let a = Matrix::from_rows(vec![vec![q("2-3i+j")]]).unwrap();
        assert_eq!(
            rc_quasidet(&a, 0, 0).unwrap(),
            QuasidetResult::Defined(q("2-3i+j"))
        );
        assert_eq!(
            cr_quasidet(&a, 0, 0).unwrap(),
            QuasidetResult::Defined(q("2-3i+j"))
        );
    }

    #[test]
    fn two_by_two_rational() {
        let a = Matrix::from_rows(vec![
            vec![Rational::from_int(1), Rational::from_int(2)],
            vec![Rational::from_int(3), Rational::from_int(4)],
        ])
        .unwrap();
        // 4 - 3 * 1^{-1} * 2 = -2, and CR collapses to the same value.
        assert_eq!(
            rc_quasidet(&a, 1, 1).unwrap(),
            QuasidetResult::Defined(Rational::from_int(-2))
        );
        assert_eq!(
            cr_quasidet(&a, 1, 1).unwrap(),
            QuasidetResult::Defined(Rational::from_int(-2))
        );
    }

    #[test]
    fn witness_splits_rc_from_cr() {
        let a = witness();
        // (j+i) - j*(1+k) = 0: the RC-singular witness.
        assert_eq!(
            rc_quasidet(&a, 1, 1).unwrap(),
            QuasidetResult::Defined(Quaternion::zero())
        );
        // (j+i) - (1+k)*j = 2i: CR-nonsingular.
        assert_eq!(
            cr_quasidet(&a, 1, 1).unwrap(),
            QuasidetResult::Defined(q("2i"))
        );
    }

    #[test]
    fn undefined_carries_the_failing_minor() {
        // Deleting row 0 / col 0 leaves the zero minor [[0]].
        let a = Matrix::from_rows(vec![
            vec![Rational::from_int(1), Rational::from_int(0)],
            vec![Rational::from_int(0), Rational::from_int(0)],
        ])
        .unwrap();
        match rc_quasidet(&a, 0, 0).unwrap() {
            QuasidetResult::Undefined {
                minor_rows,
                minor_cols,
            } => {
                assert_eq!(minor_rows.as_slice(), &[1]);
                assert_eq!(minor_cols.as_slice(), &[1]);
            }
            other => panic!("expected undefined, got {other:?}"),
        }
    }

    #[test]
    fn non_square_and_range_errors() {
        let a = Matrix::<Rational>::zero(2, 3);
        assert!(matches!(
            rc_quasidet(&a, 0, 0),
            Err(Error::NotSquare { .. })
        ));
        let b = Matrix::<Rational>::identity(2);
        assert!(matches!(
            rc_quasidet(&b, 2, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
