//! Quaternions with exact rational coefficients: the concrete noncommutative
//! division ring of the crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{DivisionRing, Rational};
use crate::error::Error;

/// `w + x*i + y*j + z*k` with the Hamilton relations
/// `i*j = k`, `j*k = i`, `k*i = j`, `i^2 = j^2 = k^2 = -1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn j() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn k() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn from_rational(w: Rational) -> Self {
        Quaternion {
            w,
            x: Rational::zero(),
            y: Rational::zero(),
            z: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// `(w, -x, -y, -z)`; an involutive anti-automorphism.
    pub fn conjugate(&self) -> Self {
        Quaternion {
            w: self.w.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    /// `w^2 + x^2 + y^2 + z^2`, zero only for the zero quaternion.
    pub fn norm_sq(&self) -> Rational {
        &(&self.w * &self.w) + &(&(&self.x * &self.x) + &(&(&self.y * &self.y) + &(&self.z * &self.z)))
    }

    /// Two-sided inverse `conj(q) / normSq(q)`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        let n_inv = n.inverse()?;
        let c = self.conjugate();
        Some(Quaternion {
            w: &c.w * &n_inv,
            x: &c.x * &n_inv,
            y: &c.y * &n_inv,
            z: &c.z * &n_inv,
        })
    }

    /// Parses the scalar text grammar, e.g. `"1+k"`, `"-1/2i"`, `"3/4 j - 2"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        super::text::parse_quaternion(text)
    }
}

impl fmt::Display for Quaternion {
    /// Canonical text form of the scalar grammar: terms in `1, i, j, k` order,
    /// zero components skipped, unit coefficients elided (`"1+k"`, `"-i+j"`,
    /// `"-1/2+3/4i"`). Round-trips through [`Quaternion::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let parts = [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ];
        for (coeff, unit) in parts {
            if coeff.is_zero() {
                continue;
            }
            let negative = coeff.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let magnitude = coeff.abs();
            if unit.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if magnitude != Rational::one() {
                    out.push_str(&magnitude.to_string());
                }
                out.push_str(unit);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            w: &self.w + &rhs.w,
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z,
        }
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            w: &self.w - &rhs.w,
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            z: &self.z - &rhs.z,
        }
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    /// Hamilton product in the written order: `self` on the left.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a, b) = (self, rhs);
        Quaternion {
            w: &(&(&a.w * &b.w) - &(&a.x * &b.x)) - &(&(&a.y * &b.y) + &(&a.z * &b.z)),
            x: &(&(&a.w * &b.x) + &(&a.x * &b.w)) + &(&(&a.y * &b.z) - &(&a.z * &b.y)),
            y: &(&(&a.w * &b.y) - &(&a.x * &b.z)) + &(&(&a.y * &b.w) + &(&a.z * &b.x)),
            z: &(&(&a.w * &b.z) + &(&a.x * &b.y)) - &(&(&a.y * &b.x) - &(&a.z * &b.w)),
        }
    }
}

macro_rules! quaternion_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

quaternion_owned_binop!(Add, add);
quaternion_owned_binop!(Sub, sub);
quaternion_owned_binop!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl DivisionRing for Quaternion {
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        Quaternion::zero()
    }

    fn one() -> Self {
        Quaternion::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        self.inverse()
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Quaternion {
        Quaternion::parse(text).unwrap()
    }

    #[test]
    fn hamilton_table() {
        assert_eq!(&Quaternion::i() * &Quaternion::j(), Quaternion::k());
        assert_eq!(&Quaternion::j() * &Quaternion::k(), Quaternion::i());
        assert_eq!(&Quaternion::k() * &Quaternion::i(), Quaternion::j());
        for u in [Quaternion::i(), Quaternion::j(), Quaternion::k()] {
            assert_eq!(&u * &u, -&Quaternion::one());
        }
    }

    #[test]
    fn noncommutativity_witness() {
        let ij = &Quaternion::i() * &Quaternion::j();
        let ji = &Quaternion::j() * &Quaternion::i();
        assert_eq!(ij, Quaternion::k());
        assert_eq!(ji, -&Quaternion::k());
        assert_ne!(ij, ji);
    }

    #[test]
    fn products_from_the_singular_witness() {
        // (1+k)*j = j - i while j*(1+k) = j + i.
        assert_eq!(&q("1+k") * &q("j"), q("-i+j"));
        assert_eq!(&q("j") * &q("1+k"), q("i+j"));
    }

    #[test]
    fn inverses() {
        assert_eq!(q("1").inverse().unwrap(), q("1"));
        assert_eq!(q("1+k").inverse().unwrap(), q("1/2-1/2k"));
        assert_eq!(q("j").inverse().unwrap(), q("-j"));
        assert_eq!(Quaternion::zero().inverse(), None);
        let a = q("2-3i+1/2j-k");
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Quaternion::one());
        assert_eq!(&inv * &a, Quaternion::one());
    }

    #[test]
    fn conjugation_is_anti_automorphism() {
        let a = q("1+2i-j+3k");
        let b = q("-1/2+i+j");
        assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
        assert_eq!(a.conjugate().conjugate(), a);
        // conj(i*j) = conj(k) = -k equals conj(j)*conj(i) = (-j)*(-i) = j*i.
        assert_eq!(
            (&Quaternion::i() * &Quaternion::j()).conjugate(),
            &Quaternion::j().conjugate() * &Quaternion::i().conjugate()
        );
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = q("1+2i-j+3k");
        let b = q("-1/2+i+j");
        assert_eq!((&a * &b).norm_sq(), &a.norm_sq() * &b.norm_sq());
    }
}
