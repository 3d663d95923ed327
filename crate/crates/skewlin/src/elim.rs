//! Noncommutative Gauss-Jordan elimination.
//!
//! Every row operation is a LEFT multiplication by an elementary matrix:
//! scaling a row means `row_r <- c * row_r`, elimination means
//! `row_i <- row_i - f * row_r`. Left operations compose with the RC product
//! as `(L rc* A) rc* X = L rc* (A rc* X)`, which is what makes the reduction
//! valid for solving `A rc* x = b` over a division ring. The CR side is
//! reached exclusively through the conjugation transport, never by a second
//! kernel.
//!
//! The pivot rule is the first nonzero entry scanning top to bottom; with
//! exact arithmetic there is no pivot-magnitude heuristic to apply, and the
//! choice makes every reduction deterministic.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::DivisionRing;

/// Outcome of a full Gauss-Jordan pass.
pub(crate) struct Reduction<T> {
    /// Reduced row echelon form of the input.
    pub rref: Matrix<T>,
    /// Pivot columns in ascending order; its length is the rank.
    pub pivot_cols: Vec<usize>,
    /// `row_origin[p]` is the original index of the row now in position `p`.
    /// The first `pivot_cols.len()` entries are the pivot rows.
    pub row_origin: Vec<usize>,
}

/// Reduces `a` to reduced row echelon form with left row operations only.
pub(crate) fn reduce<T: DivisionRing>(a: &Matrix<T>) -> Reduction<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut row_origin: Vec<usize> = (0..m).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&row| !w[(row, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for col in 0..n {
                let tmp = w[(p, col)].clone();
                w[(p, col)] = w[(r, col)].clone();
                w[(r, col)] = tmp;
            }
            row_origin.swap(p, r);
        }
        let inv = w[(r, c)].inv().expect("pivot is nonzero");
        for col in 0..n {
            w[(r, col)] = inv.mul(&w[(r, col)]);
        }
        for i in 0..m {
            if i == r || w[(i, c)].is_zero() {
                continue;
            }
            let factor = w[(i, c)].clone();
            for col in 0..n {
                let t = factor.mul(&w[(r, col)]);
                w[(i, col)] = w[(i, col)].sub(&t);
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    Reduction {
        rref: w,
        pivot_cols,
        row_origin,
    }
}

/// RC inverse by Gauss-Jordan on `[A | I]`. `Ok(None)` means RC-singular.
pub(crate) fn rc_inverse<T: DivisionRing>(a: &Matrix<T>) -> Result<Option<Matrix<T>>, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Some(Matrix::identity(0)));
    }
    let augmented = a.hstack(&Matrix::identity(n))?;
    let reduction = reduce(&augmented);
    // Nonsingular exactly when the pivots fill the left block.
    if reduction.pivot_cols.len() != n || reduction.pivot_cols[n - 1] != n - 1 {
        return Ok(None);
    }
    let inverse = Matrix::from_fn(n, n, |i, j| reduction.rref[(i, n + j)].clone());
    Ok(Some(inverse))
}

/// Rank with the pivot positions: `(rank, major row set, major column set)`.
/// Row indices are reported in ascending order.
pub(crate) fn rank_core<T: DivisionRing>(a: &Matrix<T>) -> (usize, Vec<usize>, Vec<usize>) {
    let reduction = reduce(a);
    let k = reduction.pivot_cols.len();
    let mut rows: Vec<usize> = reduction.row_origin[..k].to_vec();
    rows.sort_unstable();
    (k, rows, reduction.pivot_cols)
}
