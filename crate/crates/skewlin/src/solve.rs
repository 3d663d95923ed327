//! RC/CR inverses and the complete solution of linear systems: unique,
//! parametric or inconsistent.
//!
//! A system carries a side. `Side::Right` is the column form `A rc* x = b`
//! (the unknown stands on the right of `A`); `Side::Left` is the row form
//! `x rc* A = b`, which acts on the rows of `A` from the left. Over a
//! noncommutative ring the two are genuinely different systems. Each of the
//! four (side, product) combinations is transported to one RC column kernel
//! by transpose and conjugation; there is no second elimination path.
//!
//! Solvability follows the rank criterion: a system has a solution exactly
//! when the coefficient matrix and the extended matrix have equal rank. A
//! consistent system with rank `k` and `u` unknowns leaves `u - k` free
//! variables: the non-major columns in ascending order. The particular
//! solution sets them to zero; each homogeneous basis vector sets one free
//! variable to one and the rest to zero.

use serde::{Deserialize, Serialize};

use crate::elim;
use crate::error::Error;
use crate::matrix::{IndexSet, Matrix, ProductKind};
use crate::quasidet::{QuasidetEngine, QuasidetResult};
use crate::rank;
use crate::scalar::DivisionRing;

/// Which side of the coefficient matrix the unknown stands on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `x * A = b`: a row unknown acting on the rows of `A` from the left.
    Left,
    /// `A * x = b`: a column unknown.
    Right,
}

/// Coefficient matrix with right-hand columns adjoined, jointly addressable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedMatrix<T> {
    coefficient: Matrix<T>,
    rhs: Matrix<T>,
}

impl<T: DivisionRing> ExtendedMatrix<T> {
    pub fn new(coefficient: Matrix<T>, rhs: Matrix<T>) -> Result<Self, Error> {
        if coefficient.rows() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                operation: "extended matrix",
                left: (coefficient.rows(), coefficient.cols()),
                right: (rhs.rows(), rhs.cols()),
            });
        }
        Ok(ExtendedMatrix { coefficient, rhs })
    }

    pub fn coefficient(&self) -> &Matrix<T> {
        &self.coefficient
    }

    pub fn rhs(&self) -> &Matrix<T> {
        &self.rhs
    }

    /// `[A | b]` as one matrix.
    pub fn adjoined(&self) -> Matrix<T> {
        self.coefficient
            .hstack(&self.rhs)
            .expect("row counts checked at construction")
    }
}

/// Result of solving a linear system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolveOutcome<T> {
    /// The single solution, shaped like the unknown (column for `Side::Right`,
    /// row for `Side::Left`).
    Unique(Matrix<T>),
    /// Solutions form `particular + span(homogeneous_basis)` where basis
    /// vector `p` has one at free variable `p` and zero at the others.
    Parametric {
        particular: Matrix<T>,
        free: IndexSet,
        homogeneous_basis: Vec<Matrix<T>>,
    },
    /// No solution: the extended matrix has strictly larger rank.
    Inconsistent {
        coefficient_rank: usize,
        extended_rank: usize,
    },
}

impl<T> SolveOutcome<T> {
    pub fn is_consistent(&self) -> bool {
        !matches!(self, SolveOutcome::Inconsistent { .. })
    }

    fn map_matrices(self, f: impl Fn(Matrix<T>) -> Matrix<T>) -> Self {
        match self {
            SolveOutcome::Unique(x) => SolveOutcome::Unique(f(x)),
            SolveOutcome::Parametric {
                particular,
                free,
                homogeneous_basis,
            } => SolveOutcome::Parametric {
                particular: f(particular),
                free,
                homogeneous_basis: homogeneous_basis.into_iter().map(f).collect(),
            },
            inconsistent => inconsistent,
        }
    }
}

/// RC inverse by elimination. `Ok(None)` reports an RC-singular matrix.
pub fn rc_inverse<T: DivisionRing>(a: &Matrix<T>) -> Result<Option<Matrix<T>>, Error> {
    elim::rc_inverse(a)
}

/// CR inverse through the conjugation transport of [`rc_inverse`].
pub fn cr_inverse<T: DivisionRing>(a: &Matrix<T>) -> Result<Option<Matrix<T>>, Error> {
    Ok(elim::rc_inverse(&a.conjugate())?.map(|b| b.conjugate()))
}

pub fn inverse<T: DivisionRing>(
    a: &Matrix<T>,
    product: ProductKind,
) -> Result<Option<Matrix<T>>, Error> {
    match product {
        ProductKind::Rc => rc_inverse(a),
        ProductKind::Cr => cr_inverse(a),
    }
}

/// The quasideterminant route to the RC inverse: `B[j][i] = |A|_ij^{-1}`,
/// zero where the quasideterminant is undefined. Kept independent of the
/// elimination route as its oracle; the result is verified two-sidedly and
/// `Ok(None)` is returned when verification fails or a quasideterminant is
/// defined but zero (both certify singularity).
pub fn rc_inverse_quasidet<T: DivisionRing>(a: &Matrix<T>) -> Result<Option<Matrix<T>>, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut engine = QuasidetEngine::new(a)?;
    let mut b = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            match engine.rc_quasidet(i, j)? {
                QuasidetResult::Defined(v) => match v.inv() {
                    Some(entry) => b[(j, i)] = entry,
                    // A defined zero quasideterminant certifies singularity.
                    None => return Ok(None),
                },
                // Undefined positions correspond to zero inverse entries.
                QuasidetResult::Undefined { .. } => {}
            }
        }
    }
    let identity = Matrix::identity(n);
    if a.rc_mul(&b)? == identity && b.rc_mul(a)? == identity {
        Ok(Some(b))
    } else {
        Ok(None)
    }
}

/// Unique solution of `A rc* x = b` for square RC-nonsingular `A`, computed
/// as `rc_inverse(A) rc* b`. A singular matrix is an error here; the general
/// classification lives in [`solve_general`].
pub fn solve_nonsingular<T: DivisionRing>(
    a: &Matrix<T>,
    b: &Matrix<T>,
) -> Result<Matrix<T>, Error> {
    check_column_system(a, b)?;
    let inverse = rc_inverse(a)?.ok_or(Error::Singular { product: "RC" })?;
    inverse.rc_mul(b)
}

/// The theorem's second form of the same solution: entries through
/// quasideterminant inverses. Must agree with [`solve_nonsingular`].
pub fn solve_nonsingular_quasidet<T: DivisionRing>(
    a: &Matrix<T>,
    b: &Matrix<T>,
) -> Result<Matrix<T>, Error> {
    check_column_system(a, b)?;
    let inverse = rc_inverse_quasidet(a)?.ok_or(Error::Singular { product: "RC" })?;
    inverse.rc_mul(b)
}

fn check_column_system<T: DivisionRing>(a: &Matrix<T>, b: &Matrix<T>) -> Result<(), Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if b.rows() != a.rows() || b.cols() != 1 {
        return Err(Error::DimensionMismatch {
            operation: "linear system",
            left: (a.rows(), a.cols()),
            right: (b.rows(), b.cols()),
        });
    }
    Ok(())
}

/// Classifies and solves the system given by `side` and `product`.
///
/// * `(Side::Right, Rc)`: `A rc* x = b`, `b` a column of height `A.rows()`.
/// * `(Side::Left, Rc)`: `x rc* A = b`, `b` a row of width `A.cols()`.
/// * CR variants likewise under the CR product.
///
/// Orientation is handled by the transpose/conjugation transports around one
/// RC column kernel.
pub fn solve_general<T: DivisionRing>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    side: Side,
    product: ProductKind,
) -> Result<SolveOutcome<T>, Error> {
    match (side, product) {
        (Side::Right, ProductKind::Rc) => {
            check_general_shapes(a, b, Side::Right)?;
            solve_rc_column(a, b)
        }
        (Side::Left, ProductKind::Rc) => {
            // x rc* A = b  <=>  conj(A^t) rc* conj(x^t) = conj(b^t)
            check_general_shapes(a, b, Side::Left)?;
            let outcome = solve_rc_column(
                &a.transpose().conjugate(),
                &b.transpose().conjugate(),
            )?;
            Ok(outcome.map_matrices(|x| x.conjugate().transpose()))
        }
        (Side::Right, ProductKind::Cr) => {
            // A cr* x = b  <=>  conj(A) rc* conj(x) = conj(b)
            check_general_shapes(a, b, Side::Right)?;
            let outcome = solve_rc_column(&a.conjugate(), &b.conjugate())?;
            Ok(outcome.map_matrices(|x| x.conjugate()))
        }
        (Side::Left, ProductKind::Cr) => {
            // x cr* A = b  <=>  A^t rc* x^t = b^t
            check_general_shapes(a, b, Side::Left)?;
            let outcome = solve_rc_column(&a.transpose(), &b.transpose())?;
            Ok(outcome.map_matrices(|x| x.transpose()))
        }
    }
}

fn check_general_shapes<T: DivisionRing>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    side: Side,
) -> Result<(), Error> {
    let ok = match side {
        Side::Right => b.rows() == a.rows() && b.cols() == 1,
        Side::Left => b.cols() == a.cols() && b.rows() == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            operation: "linear system",
            left: (a.rows(), a.cols()),
            right: (b.rows(), b.cols()),
        })
    }
}

/// The single kernel: classifies `A rc* x = b` with `b` a column.
fn solve_rc_column<T: DivisionRing>(
    a: &Matrix<T>,
    b: &Matrix<T>,
) -> Result<SolveOutcome<T>, Error> {
    let n = a.cols();
    let (k, major_rows, major_cols) = rank::rc_rank_core(a);
    let extended = ExtendedMatrix::new(a.clone(), b.clone())?.adjoined();
    let (k_ext, _, _) = rank::rc_rank_core(&extended);
    if k_ext > k {
        return Ok(SolveOutcome::Inconsistent {
            coefficient_rank: k,
            extended_rank: k_ext,
        });
    }
    // Equations outside the major rows are left combinations of those inside
    // and drop out; the core k x k system is nonsingular.
    let rows = IndexSet::new(major_rows).expect("ascending pivot rows");
    let cols = IndexSet::new(major_cols).expect("ascending pivot cols");
    let major = a.submatrix(&rows, &cols)?;
    let major_inverse = rc_inverse(&major)?.expect("major minor is RC-nonsingular");
    let b_major = b.submatrix(&rows, &IndexSet::full(1))?;
    let x_major = major_inverse.rc_mul(&b_major)?;

    let mut particular = Matrix::zero(n, 1);
    for (pos, t) in cols.iter().enumerate() {
        particular[(t, 0)] = x_major[(pos, 0)].clone();
    }
    let free = cols.complement(n);
    if free.is_empty() {
        return Ok(SolveOutcome::Unique(particular));
    }
    let mut homogeneous_basis = Vec::with_capacity(free.len());
    for f in free.iter() {
        let column_f = a.submatrix(&rows, &IndexSet::new(vec![f])?)?;
        let v_major = major_inverse.rc_mul(&column_f)?.neg();
        let mut v = Matrix::zero(n, 1);
        v[(f, 0)] = T::one();
        for (pos, t) in cols.iter().enumerate() {
            v[(t, 0)] = v_major[(pos, 0)].clone();
        }
        homogeneous_basis.push(v);
    }
    Ok(SolveOutcome::Parametric {
        particular,
        free,
        homogeneous_basis,
    })
}

/// Evaluates the system's residual for a candidate solution.
pub fn residual<T: DivisionRing>(
    a: &Matrix<T>,
    x: &Matrix<T>,
    b: &Matrix<T>,
    side: Side,
    product: ProductKind,
) -> Result<Matrix<T>, Error> {
    let applied = match side {
        Side::Right => a.mul(x, product)?,
        Side::Left => x.mul(a, product)?,
    };
    applied.sub(b)
}

/// True when `x` solves the system exactly.
pub fn is_solution<T: DivisionRing>(
    a: &Matrix<T>,
    x: &Matrix<T>,
    b: &Matrix<T>,
    side: Side,
    product: ProductKind,
) -> Result<bool, Error> {
    Ok(residual(a, x, b, side, product)?.is_zero())
}

/// The side on which scalars act on solutions of the homogeneous system for
/// a given orientation: `A rc* (x d) = (A rc* x) d`, `(d x) rc* A = d (x rc* A)`,
/// and the CR cases mirrored.
pub fn homogeneous_scalar_side(side: Side, product: ProductKind) -> Side {
    match (side, product) {
        (Side::Right, ProductKind::Rc) | (Side::Left, ProductKind::Cr) => Side::Right,
        (Side::Left, ProductKind::Rc) | (Side::Right, ProductKind::Cr) => Side::Left,
    }
}

/// Test-harness utility for the closure of homogeneous solution sets: checks
/// that every given solution solves `A x = 0` (in the orientation's sense),
/// that pairwise sums still solve it, and that multiplying by each scalar in
/// `scalars` on the orientation's scalar side still solves it. The empty
/// solution list is vacuously closed.
pub fn homogeneous_closure_check<T: DivisionRing>(
    a: &Matrix<T>,
    solutions: &[Matrix<T>],
    side: Side,
    product: ProductKind,
    scalars: &[T],
) -> Result<bool, Error> {
    let zero = match side {
        Side::Right => Matrix::zero(a.rows(), 1),
        Side::Left => Matrix::zero(1, a.cols()),
    };
    for x in solutions {
        if !is_solution(a, x, &zero, side, product)? {
            return Ok(false);
        }
    }
    for x in solutions {
        for y in solutions {
            let sum = x.add(y)?;
            if !is_solution(a, &sum, &zero, side, product)? {
                return Ok(false);
            }
        }
        for d in scalars {
            let scaled = match homogeneous_scalar_side(side, product) {
                Side::Right => x.scale_right(d),
                Side::Left => x.scale_left(d),
            };
            if !is_solution(a, &scaled, &zero, side, product)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
