//! Dense polynomials in the marker variable `y` over the rationals.
//!
//! Invariant: no trailing zero coefficients; the zero polynomial is the
//! empty coefficient list. Canonical text form is `c0 + c1*y + c2*y^2`
//! with minus signs folded into the separators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::rat::Rat;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct YPoly {
    coeffs: Vec<Rat>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPoly::constant(Rat::one())
    }

    /// The marker variable `y`.
    pub fn y() -> Self {
        YPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        YPoly::from_coeffs(vec![c])
    }

    /// Build from coefficients indexed by power of `y`, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        YPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `y^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluate at a rational point by Horner's rule.
    pub fn eval(&self, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * y) + c;
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => YPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    ///
    /// Panics when `div` is zero.
    pub fn div_rem(&self, div: &YPoly) -> (YPoly, YPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd {
            return (YPoly::zero(), self.clone());
        }
        let lead_inv = div.leading().unwrap().recip().unwrap();
        let mut quot = vec![Rat::zero(); rem.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        (YPoly::from_coeffs(quot), YPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &YPoly, b: &YPoly) -> YPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The unique polynomial of degree `< points.len()` through the
    /// given `(y, value)` pairs (Lagrange form). Points must be
    /// distinct.
    pub fn interpolate(points: &[(Rat, Rat)]) -> YPoly {
        let mut acc = YPoly::zero();
        for (i, (xi, vi)) in points.iter().enumerate() {
            let mut basis = YPoly::one();
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &YPoly::from_coeffs(vec![-xj, Rat::one()]);
                denom = &denom * &(xi - xj);
            }
            acc = &acc + &basis.scale(&(vi / &denom));
        }
        acc
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        YPoly::from_coeffs(out)
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        self + &(-rhs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        YPoly::from_coeffs(out)
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "y")?,
                (1, false) => write!(f, "{mag}*y")?,
                (_, true) => write!(f, "y^{i}")?,
                (_, false) => write!(f, "{mag}*y^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses the canonical form: terms `c`, `c*y`, `c*y^k`, `y`, `y^k`
/// joined by `+`/`-`, e.g. `"1 - 3/2*y + y^2"`.
impl FromStr for YPoly {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut acc = YPoly::zero();
        let mut term = String::new();
        let mut sign = 1i64;
        let mut terms: Vec<(i64, String)> = Vec::new();
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !term.trim().is_empty() {
                terms.push((sign, term.trim().to_string()));
                term = String::new();
                sign = if ch == '-' { -1 } else { 1 };
            } else if ch == '+' && i == 0 {
                // leading plus
            } else if ch == '-' && i == 0 {
                sign = -1;
            } else {
                term.push(ch);
            }
        }
        if term.trim().is_empty() {
            return Err("dangling sign".into());
        }
        terms.push((sign, term.trim().to_string()));
        for (sign, t) in terms {
            let (coeff_str, pow) = match t.split_once('y') {
                None => (t.as_str(), 0usize),
                Some((c, rest)) => {
                    let pow = match rest.trim() {
                        "" => 1usize,
                        p => {
                            let p = p
                                .strip_prefix('^')
                                .ok_or_else(|| format!("bad power in term {t:?}"))?;
                            p.trim().parse::<usize>().map_err(|e| format!("bad power in {t:?}: {e}"))?
                        }
                    };
                    let c = c.trim().strip_suffix('*').unwrap_or(c.trim()).trim();
                    (c, pow)
                }
            };
            let coeff: Rat = if coeff_str.is_empty() {
                Rat::one()
            } else {
                coeff_str.parse()?
            };
            let coeff = if sign < 0 { -coeff } else { coeff };
            let mut mono = vec![Rat::zero(); pow + 1];
            mono[pow] = coeff;
            acc = &acc + &YPoly::from_coeffs(mono);
        }
        Ok(acc)
    }
}

impl Ring for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }

    fn one() -> Self {
        YPoly::one()
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
        YPoly::is_zero(self)
    }

    /// Units of `Q[y]` are the nonzero constants.
    fn try_invert(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) => c.recip().map(YPoly::constant),
            None => None,
        }
    }

    fn from_rat(r: &Rat) -> Self {
        YPoly::constant(r.clone())
    }
}
