//! Scalar arithmetic: the division-ring abstraction and its two instances,
//! arbitrary-precision rationals (commutative) and quaternions over the
//! rationals (noncommutative).

mod quaternion;
mod rational;
mod text;

pub use quaternion::Quaternion;
pub use rational::Rational;

use std::fmt;

/// A division ring: a ring with identity in which every nonzero element has a
/// two-sided multiplicative inverse. Multiplication need not commute.
///
/// `conj` must be an involutive anti-automorphism, `conj(a*b) = conj(b)*conj(a)`,
/// used by the matrix layer to transport statements between the RC and CR
/// products. For commutative scalars the identity map qualifies.
pub trait DivisionRing:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Whether multiplication commutes. Commutative scalars collapse the
    /// RC/CR duality and the matrix layer exploits that in tests.
    const COMMUTATIVE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Two-sided inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Involutive anti-automorphism.
    fn conj(&self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

/// An element of the opposite ring: same set, multiplication reversed.
///
/// Mapping a matrix into the opposite ring, taking the RC product there and
/// mapping back computes the CR product. This is one of the three duality
/// oracles (with transpose and conjugation) and is kept as an independent code
/// path on purpose.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Opposite<T>(pub T);

impl<T: fmt::Display> fmt::Display for Opposite<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<T: DivisionRing> DivisionRing for Opposite<T> {
    const COMMUTATIVE: bool = T::COMMUTATIVE;

    fn zero() -> Self {
        Opposite(T::zero())
    }

    fn one() -> Self {
        Opposite(T::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        Opposite(self.0.add(&rhs.0))
    }

    fn neg(&self) -> Self {
        Opposite(self.0.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        // Reversed factor order is the whole point.
        Opposite(rhs.0.mul(&self.0))
    }

    fn inv(&self) -> Option<Self> {
        self.0.inv().map(Opposite)
    }

    fn conj(&self) -> Self {
        Opposite(self.0.conj())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
