//! Rational functions in `y`: the fraction field of [`YPoly`].
//!
//! Invariant: the denominator is nonzero, monic, and coprime to the
//! numerator. This is the coefficient field used for symbolic Jacobi
//! continued-fraction extraction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::rat::Rat;
use crate::ring::{Field, Ring};
use crate::ypoly::YPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YRat {
    num: YPoly,
    den: YPoly,
}

impl YRat {
    /// Build `num/den` in canonical form. Panics when `den` is zero.
    pub fn new(num: YPoly, den: YPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return YRat { num, den: YPoly::one() };
        }
        let g = YPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            YRat { num, den }
        } else {
            let inv = lead.recip().unwrap();
            YRat { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        YRat { num: YPoly::zero(), den: YPoly::one() }
    }

    pub fn one() -> Self {
        YRat { num: YPoly::one(), den: YPoly::one() }
    }

    pub fn y() -> Self {
        YPoly::y().into()
    }

    pub fn num(&self) -> &YPoly {
        &self.num
    }

    pub fn den(&self) -> &YPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&YPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Evaluate at `y`, unless the denominator vanishes there.
    pub fn eval(&self, y: &Rat) -> Option<Rat> {
        let d = self.den.eval(y);
        (!d.is_zero()).then(|| &self.num.eval(y) / &d)
    }
}

impl From<YPoly> for YRat {
    fn from(p: YPoly) -> Self {
        YRat { num: p, den: YPoly::one() }
    }
}

impl From<Rat> for YRat {
    fn from(r: Rat) -> Self {
        YPoly::constant(r).into()
    }
}

impl Add for &YRat {
    type Output = YRat;
    fn add(self, rhs: &YRat) -> YRat {
        YRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &YRat {
    type Output = YRat;
    fn sub(self, rhs: &YRat) -> YRat {
        self + &(-rhs)
    }
}

impl Neg for &YRat {
    type Output = YRat;
    fn neg(self) -> YRat {
        YRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &YRat {
    type Output = YRat;
    fn mul(self, rhs: &YRat) -> YRat {
        YRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &YRat {
    type Output = YRat;
    fn div(self, rhs: &YRat) -> YRat {
        assert!(!rhs.is_zero(), "division by zero");
        YRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for YRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_polynomial() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl Ring for YRat {
    fn zero() -> Self {
        YRat::zero()
    }

    fn one() -> Self {
        YRat::one()
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

    fn is_zero(&self) -> bool {
        YRat::is_zero(self)
    }

    fn try_invert(&self) -> Option<Self> {
        (!self.is_zero()).then(|| YRat::new(self.den.clone(), self.num.clone()))
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone().into()
    }
}

impl Field for YRat {}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> YRat {
        YRat::y()
    }

    #[test]
    fn normalizes_to_monic_reduced_form() {
        // (2y^2 - 2) / (4y + 4) = (y - 1) / 2 after reduction
        let num = YPoly::from_ints(&[-2, 0, 2]);
        let den = YPoly::from_ints(&[4, 4]);
        let q = YRat::new(num, den);
        assert_eq!(q.den(), &YPoly::one());
        assert_eq!(q.num(), &YPoly::from_coeffs(vec![Rat::ratio(-1, 2), Rat::ratio(1, 2)]));
    }

    #[test]
    fn field_inverse() {
        let q = YRat::new(YPoly::from_ints(&[1, 1]), YPoly::from_ints(&[0, 0, 1]));
        let inv = q.try_invert().unwrap();
        assert_eq!((&q * &inv), YRat::one());
        assert!(YRat::zero().try_invert().is_none());
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let a = YRat::new(YPoly::from_ints(&[1, 2]), YPoly::from_ints(&[3, 0, 1]));
        let b = YRat::new(YPoly::from_ints(&[-1, 1]), YPoly::from_ints(&[1, 1]));
        let pt = Rat::ratio(5, 3);
        let sum = &a + &b;
        let prod = &a * &b;
        assert_eq!(sum.eval(&pt).unwrap(), &a.eval(&pt).unwrap() + &b.eval(&pt).unwrap());
        assert_eq!(prod.eval(&pt).unwrap(), &a.eval(&pt).unwrap() * &b.eval(&pt).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(y().to_string(), "y");
        let q = YRat::new(YPoly::one(), YPoly::from_ints(&[1, 1]));
        assert_eq!(q.to_string(), "(1)/(1 + y)");
    }
}
