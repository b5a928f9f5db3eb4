//! Truncated formal power series over an exact coefficient ring.
//!
//! A `Series<R>` stores coefficients of `x^0 .. x^N` where `N` is the
//! truncation order; every stored coefficient is exact. The order is
//! explicit on every constructor, and binary operations truncate to the
//! minimum of the operand orders. No operation changes the order
//! silently: the only order-changing operations are `mul_xpow` /
//! `div_xpow` (documented below) and `truncated`.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>, // index i = coefficient of x^i; order = len - 1
}

impl<R: Ring> Series<R> {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    /// The series `x`. Requires `order >= 1`.
    pub fn x(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[1] = R::one();
        s
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Takes coefficients of `x^0..x^N`; the list length fixes the order.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    /// A polynomial viewed as a series at the given order (higher
    /// polynomial terms are dropped).
    pub fn polynomial(coeffs: &[R], order: usize) -> Self {
        let mut out = vec![R::zero(); order + 1];
        for (i, c) in coeffs.iter().take(order + 1).enumerate() {
            out[i] = c.clone();
        }
        Series { coeffs: out }
    }

    /// `1/(1-x)` truncated at `order`: all-ones coefficients.
    pub fn geometric(order: usize) -> Self {
        Series { coeffs: vec![R::one(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; panics past the truncation order.
    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Drop coefficients above `order` (which must not exceed the
    /// current order).
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Cauchy product truncated at `min(order(a), order(b))`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^k`. Every product coefficient stays exact, so the
    /// order grows to `order + k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        let mut out = vec![R::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + k] = c.clone();
        }
        Series { coeffs: out }
    }

    /// Divide by `x^k`; the first `k` coefficients must vanish and the
    /// order shrinks to `order - k`.
    pub fn div_xpow(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::OrderTooLow { need: k, have: self.order() });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAUnit);
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Long division: the `q` with `q * rhs = self` up to the shared
    /// order. The constant term of `rhs` must be a unit.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let inv0 = rhs.coeffs[0].try_invert().ok_or(Error::NotAUnit)?;
        let n = self.order().min(rhs.order());
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for (j, q) in out.iter().enumerate() {
                let b = &rhs.coeffs[i - j];
                if !q.is_zero() && !b.is_zero() {
                    acc = acc.sub(&q.mul(b));
                }
            }
            out.push(acc.mul(&inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// Substitute `inner` into this (truncated) series. Requires
    /// `inner(0) = 0`; use [`compose_polynomial`] when the outer
    /// function is an exactly-known polynomial.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncated(n);
        // inner^k has valuation k*v: outer terms past n/v cannot reach x^n
        let v = inner.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(n + 1).max(1);
        let cap = (n / v + 1).min(n + 1);
        Ok(compose_polynomial(&self.coeffs[..cap], &inner))
    }

    /// Order-by-order compositional inverse: the `g` with
    /// `self(g(x)) = x` up to the truncation order. Requires a zero
    /// constant term and a unit linear coefficient.
    ///
    /// Solves the equivalent triangular system `g(f(x)) = x` (one-sided
    /// inverses of such series are two-sided): the unknown `g_m` appears
    /// with coefficient `[x^m] f^m = f_1^m`, a unit.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if n < 1 || !self.coeffs[0].is_zero() {
            return Err(Error::ReversionDomain);
        }
        let f1_inv = self.coeffs[1].try_invert().ok_or(Error::ReversionDomain)?;
        let mut powers: Vec<Series<R>> = vec![self.clone()]; // f^1, f^2, ...
        let mut g: Series<R> = Series::zero(n);
        let mut inv_diag = f1_inv.clone(); // f_1^{-m}
        for m in 1..=n {
            if m >= 2 {
                let next = powers.last().unwrap().mul(self);
                powers.push(next);
                inv_diag = inv_diag.mul(&f1_inv);
            }
            let mut acc = if m == 1 { R::one() } else { R::zero() };
            for j in 1..m {
                let c = powers[j - 1].coeff(m);
                if !c.is_zero() && !g.coeffs[j].is_zero() {
                    acc = acc.sub(&g.coeffs[j].mul(c));
                }
            }
            g.coeffs[m] = acc.mul(&inv_diag);
        }
        Ok(g)
    }

    /// `sum f^k / k!` truncated at the order. Requires `f(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain);
        }
        let n = self.order();
        let mut acc = Series::one(n);
        let mut term = Series::one(n);
        for k in 1..=n {
            let inv_k = R::from_rat(&Rat::ratio(1, k as i64));
            term = term.mul(self).mul_scalar(&inv_k);
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// Horner evaluation of an exactly-known polynomial at a series
/// argument. Unlike [`Series::compose`] the inner series may have a
/// nonzero constant term.
pub fn compose_polynomial<R: Ring>(outer: &[R], inner: &Series<R>) -> Series<R> {
    let mut acc = Series::zero(inner.order());
    for c in outer.iter().rev() {
        acc = acc.mul(inner);
        acc.coeffs[0] = acc.coeffs[0].add(c);
    }
    acc
}

/// The Catalan generating function truncated at `order`, built by the
/// convolution recurrence `C_{n+1} = sum_i C_i C_{n-i}` (no square
/// roots involved).
pub fn catalan_series<R: Ring>(order: usize) -> Series<R> {
    let mut c: Vec<R> = Vec::with_capacity(order + 1);
    c.push(R::one());
    for n in 1..=order {
        let mut acc = R::zero();
        for i in 0..n {
            acc = acc.add(&c[i].mul(&c[n - 1 - i]));
        }
        c.push(acc);
    }
    Series::from_coeffs(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rs(ints: &[i64]) -> Series<Rat> {
        Series::from_coeffs(ints.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = rs(&[1, 1, 0, 0, 0]);
        let b = rs(&[1, -1, 0, 0, 0]);
        assert_eq!(a.mul(&b), rs(&[1, 0, -1, 0, 0]));
    }

    #[test]
    fn mul_against_long_division_oracle() {
        // (1+x)/(1-x) expanded by long division gives 1, 2, 2, 2, ...
        let geo = Series::<Rat>::geometric(5);
        let prod = geo.mul(&rs(&[1, 1, 0, 0, 0, 0]));
        assert_eq!(prod, rs(&[1, 2, 2, 2, 2, 2]));
    }

    #[test]
    fn mul_identity_and_order() {
        let a = rs(&[3, -2, 5, 7]);
        assert_eq!(a.mul(&Series::one(3)), a);
        // min-order truncation
        assert_eq!(a.mul(&Series::one(2)).order(), 2);
    }

    #[test]
    fn div_geometric() {
        let one = Series::<Rat>::one(4);
        let den = rs(&[1, -1, 0, 0, 0]);
        assert_eq!(one.div(&den).unwrap(), Series::geometric(4));
    }

    #[test]
    fn div_fibonacci_oracle() {
        // 1/(1-x-x^2): linear recurrence a_n = a_{n-1} + a_{n-2}.
        let mut fib = vec![1i64, 1];
        for n in 2..=6 {
            fib.push(fib[n - 1] + fib[n - 2]);
        }
        let den = rs(&[1, -1, -1, 0, 0, 0, 0]);
        let q = Series::one(6).div(&den).unwrap();
        assert_eq!(q, rs(&fib));
    }

    #[test]
    fn div_delannoy_row_polynomial() {
        // 1/(1 - (1+y)x - x^2 y) over Q[y]: [x^3] = 1 + 5y + 5y^2 + y^3.
        use crate::ypoly::YPoly;
        let den = Series::from_coeffs(vec![
            YPoly::one(),
            -&YPoly::from_ints(&[1, 1]),
            -&YPoly::y(),
            YPoly::zero(),
        ]);
        let q = Series::<YPoly>::one(3).div(&den).unwrap();
        assert_eq!(q.coeff(3), &YPoly::from_ints(&[1, 5, 5, 1]));
    }

    #[test]
    fn div_requires_unit_constant_term() {
        let den = rs(&[0, 1, 0]);
        assert_eq!(Series::one(2).div(&den), Err(Error::NotAUnit));
        use crate::ypoly::YPoly;
        // y is nonzero but not a unit of Q[y].
        let ypoly_den = Series::from_coeffs(vec![YPoly::y(), YPoly::one()]);
        assert_eq!(Series::<YPoly>::one(1).div(&ypoly_den), Err(Error::NotAUnit));
    }

    #[test]
    fn div_mul_round_trip() {
        let a = rs(&[2, -1, 3, 0, 7]);
        let b = rs(&[1, 4, -2, 1, 1]);
        assert_eq!(a.div(&b).unwrap().mul(&b), a);
    }

    #[test]
    fn compose_brute_force_oracle() {
        // outer = 1/(1-x), inner = x(1+x): brute-force substitution by
        // summing inner^k gives 1, 1, 2, 3, 5 up to x^4.
        let outer = Series::<Rat>::geometric(4);
        let inner = rs(&[0, 1, 1, 0, 0]);
        let mut oracle = Series::<Rat>::zero(4);
        for k in 0..=4u32 {
            oracle = oracle.add(&inner.pow(k));
        }
        let got = outer.compose(&inner).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got, rs(&[1, 1, 2, 3, 5]));
    }

    #[test]
    fn compose_identity() {
        let f = rs(&[4, -1, 0, 9, 2]);
        assert_eq!(f.compose(&Series::x(4)).unwrap(), f);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let f = rs(&[1, 1, 1]);
        assert_eq!(f.compose(&rs(&[1, 1, 0])), Err(Error::CompositionDomain));
        // ...but polynomial composition accepts it.
        let shifted = compose_polynomial(&[Rat::from_int(1), Rat::from_int(1)], &rs(&[1, 1, 0]));
        assert_eq!(shifted, rs(&[2, 1, 0]));
    }

    #[test]
    fn revert_catalan_shift() {
        // Rev(x - x^2) = x + x^2 + 2x^3 + 5x^4 (shifted Catalan numbers),
        // frozen from the Lagrange-inversion oracle below.
        let f = rs(&[0, 1, -1, 0, 0]);
        let g = f.revert().unwrap();
        assert_eq!(g, rs(&[0, 1, 1, 2, 5]));
        assert_eq!(f.compose(&g).unwrap(), Series::x(4));
    }

    #[test]
    fn revert_lagrange_inversion_oracle() {
        // Independent route: [x^n] Rev(f) = (1/n) [x^{n-1}] (x/f)^n.
        let n_ord = 8;
        let f = rs(&[0, 1, -1, 0, 0, 0, 0, 0, 0]);
        let g = f.revert().unwrap();
        let x_over_f = Series::one(n_ord).div(&f.div_xpow(1).unwrap()).unwrap();
        for n in 1..=n_ord {
            let val = x_over_f.pow(n as u32).coeff(n - 1).clone();
            let expect = &val * &Rat::ratio(1, n as i64);
            assert_eq!(g.coeff(n), &expect, "coefficient {n}");
        }
    }

    #[test]
    fn revert_identity_and_closed_form() {
        assert_eq!(Series::<Rat>::x(5).revert().unwrap(), Series::x(5));
        // Rev(x/(1-x)) = x/(1+x) = x - x^2 + x^3 - x^4 + x^5; check by
        // composing back.
        let f = Series::<Rat>::x(5).div(&rs(&[1, -1, 0, 0, 0, 0])).unwrap();
        let g = f.revert().unwrap();
        assert_eq!(g, rs(&[0, 1, -1, 1, -1, 1]));
        assert_eq!(f.compose(&g).unwrap(), Series::x(5));
    }

    #[test]
    fn revert_domain_errors() {
        assert_eq!(rs(&[1, 1, 0]).revert(), Err(Error::ReversionDomain));
        use crate::ypoly::YPoly;
        // linear coefficient y is not a unit of Q[y]
        let f = Series::from_coeffs(vec![YPoly::zero(), YPoly::y(), YPoly::one()]);
        assert_eq!(f.revert(), Err(Error::ReversionDomain));
    }

    #[test]
    fn exp_values() {
        let e = Series::<Rat>::x(4).exp().unwrap();
        assert_eq!(
            e.coeffs().to_vec(),
            vec![
                Rat::one(),
                Rat::one(),
                Rat::ratio(1, 2),
                Rat::ratio(1, 6),
                Rat::ratio(1, 24)
            ]
        );
        assert_eq!(Series::<Rat>::zero(3).exp().unwrap(), Series::one(3));
        assert_eq!(rs(&[1, 1]).exp(), Err(Error::ExpDomain));
    }

    #[test]
    fn exp_bessel_gamma_row() {
        // exp(x(1 + xy/2)) over Q[y]: [x^3] = 1/6 + y/2, i.e. 1, 3 after 3! scaling.
        use crate::ypoly::YPoly;
        let f = Series::from_coeffs(vec![
            YPoly::zero(),
            YPoly::one(),
            YPoly::from_coeffs(vec![Rat::zero(), Rat::ratio(1, 2)]),
            YPoly::zero(),
        ]);
        let e = f.exp().unwrap();
        let expect = YPoly::from_coeffs(vec![Rat::ratio(1, 6), Rat::ratio(1, 2)]);
        assert_eq!(e.coeff(3), &expect);
    }

    #[test]
    fn catalan_series_values() {
        let c = catalan_series::<Rat>(5);
        assert_eq!(c, rs(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(catalan_series::<Rat>(0), rs(&[1]));
        for (n, c) in c.coeffs().iter().enumerate() {
            assert_eq!(
                c.to_bigint().unwrap(),
                crate::combinatorics::catalan(n as u64),
                "closed form at {n}"
            );
        }
    }

    #[test]
    fn catalan_defining_equation() {
        // c = 1 + x c^2 at every computed order
        for order in [0, 1, 3, 9, 16] {
            let c = catalan_series::<Rat>(order);
            let rhs = Series::one(order).add(&c.mul(&c).mul_xpow(1).truncated(order));
            assert_eq!(c, rhs, "order {order}");
        }
    }

    #[test]
    fn xpow_shifts() {
        let a = rs(&[1, 2, 3]);
        let up = a.mul_xpow(2);
        assert_eq!(up, rs(&[0, 0, 1, 2, 3]));
        assert_eq!(up.div_xpow(2).unwrap(), a);
        assert_eq!(rs(&[1, 0]).div_xpow(1), Err(Error::NotAUnit));
    }

    #[test]
    fn bigint_coefficients_stay_exact() {
        // 1/(1-x)^2 has coefficients n+1; push far enough that growth in
        // a different series (2^n via 1/(1-2x)) exceeds u64.
        let den = rs(&[1, -2]);
        let big = Series::one(80).div(&Series::polynomial(den.coeffs(), 80)).unwrap();
        assert_eq!(
            big.coeff(80).to_bigint().unwrap(),
            BigInt::from(2u8).pow(80)
        );
    }
}
