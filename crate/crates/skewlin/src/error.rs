//! Crate-wide error type.

use std::fmt;

/// Errors reported by matrix and solver operations.
///
/// Mathematical negatives (a singular matrix, an inconsistent system, an
/// undefined quasideterminant) are *not* errors; they are ordinary values of
/// the respective result types. `Error` covers contract violations: shape
/// mismatches, bad indices, division by zero and malformed input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands have incompatible shapes for the requested operation.
    DimensionMismatch {
        operation: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// An index fell outside the referenced dimension.
    IndexOutOfRange { index: usize, len: usize },
    /// An index set was not strictly increasing.
    UnorderedIndexSet { position: usize },
    /// Scalar inversion of zero, or a rational with zero denominator.
    DivisionByZero,
    /// A matrix that had to be nonsingular under the requested product was not.
    Singular { product: &'static str },
    /// Malformed scalar text or JSON input; `position` is a byte offset where known.
    Parse { position: usize, message: String },
    /// A family of vectors was used as a basis but is not one.
    NotABasis { reason: String },
    /// Two objects with different orientations were combined.
    OrientationMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                operation,
                left,
                right,
            } => write!(
                f,
                "dimension mismatch in {operation}: {}x{} against {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for dimension {len}")
            }
            Error::UnorderedIndexSet { position } => {
                write!(f, "index set not strictly increasing at position {position}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Singular { product } => {
                write!(f, "matrix is {product}-singular; use solve_general for the general case")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::NotABasis { reason } => write!(f, "not a basis: {reason}"),
            Error::OrientationMismatch => write!(f, "orientations do not match"),
        }
    }
}

impl std::error::Error for Error {}
