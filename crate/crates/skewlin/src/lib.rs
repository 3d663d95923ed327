//! Exact linear algebra over noncommutative division rings.
//!
//! The concrete scalar types are arbitrary-precision rationals and quaternions
//! with rational coefficients. Every operation is exact: there is no floating
//! point anywhere, so algebraic identities hold with zero tolerance.
//!
//! Because scalar multiplication does not commute, a matrix product comes in
//! two flavours that differ in the order of the scalar factors:
//!
//! * the RC product `C[i][j] = sum_k A[i][k] * B[k][j]`
//! * the CR product `C[i][j] = sum_k B[k][j] * A[i][k]`
//!
//! Over commutative scalars the two coincide. Over quaternions they do not,
//! and a matrix can be RC-singular while CR-nonsingular (see [`witness`]).
//! The crate provides quasideterminants, inverses, rank with dependency
//! certificates, a complete linear-system solver and a vector-space layer
//! (bases, coordinates, linear maps), each under both products.
//!
//! Heavier batch work (the exhaustive minor oracle, large products) runs on
//! rayon when the default `parallel` feature is enabled and falls back to
//! sequential loops without it; results are identical either way.

pub mod error;
pub mod matrix;
pub mod quasidet;
pub mod rank;
pub mod sample;
pub mod scalar;
pub mod solve;
pub mod space;
pub mod wire;
pub mod witness;

mod elim;
mod par;

pub use error::Error;
pub use matrix::{IndexSet, Matrix, ProductKind};
pub use quasidet::{cr_quasidet, rc_quasidet, QuasidetEngine, QuasidetResult};
pub use rank::{
    cr_rank, is_cr_singular, is_rc_singular, minor_rank_oracle, minor_rank_oracle_seq,
    product_singularity_check, rc_rank, Dependency, RankReport,
};
pub use scalar::{DivisionRing, Opposite, Quaternion, Rational};
pub use solve::{
    cr_inverse, homogeneous_closure_check, inverse, is_solution, rc_inverse, rc_inverse_quasidet,
    solve_general, solve_nonsingular, solve_nonsingular_quasidet, ExtendedMatrix, Side,
    SolveOutcome,
};
pub use space::{Basis, LinearMap, Orientation, VectorFamily};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
