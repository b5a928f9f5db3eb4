//! Exact coefficient rings.
//!
//! The series engine is generic over [`Ring`]: a commutative ring with
//! exact equality, an optional inverse, and an embedding of the
//! rationals. Three rings implement it: [`Rat`](crate::Rat) (the
//! rationals), [`YPoly`](crate::YPoly) (polynomials in the marker `y`),
//! and [`YRat`](crate::YRat) (rational functions in `y`). Because the
//! ring is a type parameter, mixing coefficient rings in one operation
//! is a compile error rather than a runtime one.

use crate::rat::Rat;

/// A commutative ring with exact arithmetic and an embedding of `Q`.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, when `self` is a unit.
    fn try_invert(&self) -> Option<Self>;
    /// Embedding of the rationals. Every ring used here contains `Q`.
    fn from_rat(r: &Rat) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_int(n))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Marker for rings in which every nonzero element is a unit.
pub trait Field: Ring {
    fn invert(&self) -> Self {
        self.try_invert().expect("inverse of zero")
    }
}
