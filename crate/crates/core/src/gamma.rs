//! Conversion between Pascal-like triangles and their gamma-matrices.
//!
//! A palindromic row polynomial has a unique expansion in the basis
//! `x^i (1+x)^{n-2i}`; the coefficients form the gamma-matrix. Three
//! independent extraction routes are provided — a per-row triangular
//! solve, substitution of `x c(x)^2` (Catalan), and an explicit double
//! sum through the arrays `(1, x c(x)^2)` and `(1, x/c(x))` — plus
//! closed forms for the triangle families. Signed-palindromic rows
//! (border `(-1)^n`) extract through the same solve: by linearity the
//! resulting rows carry the alternating border, and expansion remains
//! an exact inverse.

use crate::combinatorics::{binom, catalan, odd_double_factorial, zero_pow};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::Ring;
use crate::series::{catalan_series, compose_polynomial, Series};
use crate::triangle::{GammaMatrix, Symmetry, Triangle};

fn binom_r<R: Ring>(n: u64, k: u64) -> R {
    R::from_rat(&Rat::from_bigint(binom(n, k)))
}

/// `h_{n,k} = sum_i C(n-2i, k-i) gamma_{n,i}` for `rows` rows.
pub fn expand_gamma<R: Ring>(gamma: &GammaMatrix<R>, rows: usize) -> Result<Triangle<R>> {
    if gamma.n_rows() < rows {
        return Err(Error::NotEnoughRows { need: rows, have: gamma.n_rows() });
    }
    let mut out = Vec::with_capacity(rows);
    for n in 0..rows {
        let row: Vec<R> = (0..=n)
            .map(|k| {
                let mut acc = R::zero();
                for (i, g) in gamma.row(n).iter().enumerate() {
                    if i > k {
                        break;
                    }
                    let c = binom_r::<R>((n - 2 * i) as u64, (k - i) as u64);
                    if !c.is_zero() && !g.is_zero() {
                        acc = acc.add(&g.mul(&c));
                    }
                }
                acc
            })
            .collect();
        out.push(row);
    }
    Ok(Triangle::from_rows(out))
}

/// Extraction precondition: palindromic rows with a Pascal-like or
/// signed-Pascal-like border. All extractors refuse non-reciprocal
/// input identically, naming the first bad row.
fn validate_reciprocal<R: Ring>(h: &Triangle<R>) -> Result<()> {
    if h.symmetry() == Symmetry::Asymmetric {
        let row = h.first_bad_row().unwrap_or(0);
        return Err(Error::NotReciprocal { row });
    }
    Ok(())
}

/// Per-row forward substitution on the triangular system
/// `h_{n,k} = sum_{i<=k} C(n-2i, k-i) gamma_{n,i}`, `k = 0..floor(n/2)`.
/// Integer input yields integer output (the diagonal coefficients are 1).
pub fn extract_gamma_solve<R: Ring>(h: &Triangle<R>) -> Result<GammaMatrix<R>> {
    validate_reciprocal(h)?;
    let mut rows = Vec::with_capacity(h.n_rows());
    for n in 0..h.n_rows() {
        let row = h.row(n);
        let mut g: Vec<R> = Vec::with_capacity(n / 2 + 1);
        for k in 0..=n / 2 {
            let mut acc = row[k].clone();
            for (i, gi) in g.iter().enumerate() {
                let c = binom_r::<R>((n - 2 * i) as u64, (k - i) as u64);
                if !c.is_zero() && !gi.is_zero() {
                    acc = acc.sub(&gi.mul(&c));
                }
            }
            g.push(acc);
        }
        rows.push(g);
    }
    Ok(GammaMatrix::from_rows(rows))
}

/// Catalan-substitution route: `gamma_{n,k} = [x^k] h_n(x c(x)^2) / c(x)^n`.
/// Row `n` works at series order `2n`, enough margin for the
/// `c(x)^{-n}` factor.
pub fn extract_gamma_zeilberger<R: Ring>(h: &Triangle<R>) -> Result<GammaMatrix<R>> {
    validate_reciprocal(h)?;
    let n_max = h.n_rows().saturating_sub(1);
    let order = (2 * n_max).max(1);
    let c: Series<R> = catalan_series(order);
    let xc2 = c.mul(&c).mul_xpow(1).truncated(order);
    let c_inv = Series::one(order).div(&c)?;
    let mut c_inv_pow = Series::one(order); // c^{-n}, grown row by row
    let mut rows = Vec::with_capacity(h.n_rows());
    for n in 0..h.n_rows() {
        if n > 0 {
            c_inv_pow = c_inv_pow.mul(&c_inv);
        }
        let ord_n = (2 * n).max(1);
        let numer = compose_polynomial(h.row(n), &xc2.truncated(ord_n));
        let prod = numer.mul(&c_inv_pow.truncated(ord_n));
        rows.push((0..=n / 2).map(|k| prod.coeff(k).clone()).collect());
    }
    Ok(GammaMatrix::from_rows(rows))
}

/// Entry `(n,k)` of the Riordan array `(1, x c(x)^2)`:
/// `C(2n-1, n-k) (2k + 0^{n+k}) / (n + k + 0^{n+k})`.
pub fn alpha_entry(n: u64, k: u64) -> Result<Rat> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if n == 0 {
        return Ok(Rat::one()); // 0^0 = 1 forces alpha_{0,0} = 1
    }
    let zp = zero_pow(n + k);
    let num = Rat::from_bigint(BigIntExt::from_u64(2 * k) + zp.clone());
    let den = Rat::from_bigint(BigIntExt::from_u64(n + k) + zp);
    Ok(&(&Rat::from_bigint(binom(2 * n - 1, n - k)) * &num) / &den)
}

// small helper so the expression above stays readable
struct BigIntExt;
impl BigIntExt {
    fn from_u64(v: u64) -> num_bigint::BigInt {
        num_bigint::BigInt::from(v)
    }
}

/// Entry `(n,k)` of the Riordan array `(1, x/c(x))`: 1 on the diagonal,
/// otherwise `sum_j ((-1)^j j/(n-k)) C(k+j-1, j) C(2(n-k), n-k-j)`.
pub fn beta_entry(n: u64, k: u64) -> Result<Rat> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if k == n {
        return Ok(Rat::one());
    }
    let nk = n - k;
    let mut acc = Rat::zero();
    for j in 1..=nk {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let coeff = Rat::new(
            num_bigint::BigInt::from(sign * j as i64),
            num_bigint::BigInt::from(nk),
        );
        let term = &Rat::from_bigint(binom(k + j - 1, j)) * &Rat::from_bigint(binom(2 * nk, nk - j));
        acc = &acc + &(&coeff * &term);
    }
    Ok(acc)
}

/// Explicit double-sum route:
/// `gamma_{n,k} = sum_{i<=k} (sum_j h_{n,j} alpha_{i,j}) beta_{n+k-i,n}`.
/// The inner sum stops at `j = i` because the alpha array is lower
/// triangular; the diagonal case of `beta` is the 1 on its diagonal.
pub fn extract_gamma_alphabeta<R: Ring>(h: &Triangle<R>) -> Result<GammaMatrix<R>> {
    validate_reciprocal(h)?;
    let n_rows = h.n_rows();
    let max_i = n_rows.saturating_sub(1) / 2;
    let alpha: Vec<Vec<Rat>> = (0..=max_i)
        .map(|i| (0..=i).map(|j| alpha_entry(i as u64, j as u64)).collect())
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(n_rows);
    for n in 0..n_rows {
        let row = h.row(n);
        // beta_{n+d, n} for the offsets d = k - i that occur in row n
        let betas: Vec<Rat> = (0..=n / 2)
            .map(|d| beta_entry((n + d) as u64, n as u64))
            .collect::<Result<_>>()?;
        // inner sums over j do not depend on k
        let inner: Vec<R> = (0..=n / 2)
            .map(|i| {
                let mut acc = R::zero();
                for (j, hj) in row.iter().enumerate().take(i + 1) {
                    let a = &alpha[i][j];
                    if !a.is_zero() && !hj.is_zero() {
                        acc = acc.add(&hj.mul(&R::from_rat(a)));
                    }
                }
                acc
            })
            .collect();
        let mut g: Vec<R> = Vec::with_capacity(n / 2 + 1);
        for k in 0..=n / 2 {
            let mut acc = R::zero();
            for (i, s) in inner.iter().enumerate().take(k + 1) {
                let b = &betas[k - i];
                if !b.is_zero() && !s.is_zero() {
                    acc = acc.add(&s.mul(&R::from_rat(b)));
                }
            }
            g.push(acc);
        }
        rows.push(g);
    }
    Ok(GammaMatrix::from_rows(rows))
}

/// Closed form for the ordinary family `(1/(1-x), x(1+rx)/(1-x))`:
/// `gamma_{n,k} = C(n-k, k) r^k`.
pub fn gamma_closed_ordinary<R: Ring>(r: &R, n: u64, k: u64) -> R {
    debug_assert!(k <= n / 2);
    binom_r::<R>(n - k, k).mul(&r.pow(k as u32))
}

/// Closed form for the reversion of the ordinary family:
/// `gamma*_{n,k} = (-1)^n (-r)^k C(n, 2k) C_k`.
pub fn gamma_closed_reverted<R: Ring>(r: &R, n: u64, k: u64) -> R {
    debug_assert!(k <= n / 2);
    let base = binom_r::<R>(n, 2 * k)
        .mul(&r.neg().pow(k as u32))
        .mul(&R::from_rat(&Rat::from_bigint(catalan(k))));
    if n % 2 == 1 {
        base.neg()
    } else {
        base
    }
}

/// Closed form for the r-Narayana family: `C(n, 2k) r^k C_k`.
pub fn gamma_closed_narayana<R: Ring>(r: &R, n: u64, k: u64) -> R {
    debug_assert!(k <= n / 2);
    binom_r::<R>(n, 2 * k)
        .mul(&r.pow(k as u32))
        .mul(&R::from_rat(&Rat::from_bigint(catalan(k))))
}

/// Closed form for the exponential family `[e^x, x(1+rx/2)]`:
/// `C(n, 2k) r^k (2k-1)!!`.
pub fn gamma_closed_exponential<R: Ring>(r: &R, n: u64, k: u64) -> R {
    debug_assert!(k <= n / 2);
    binom_r::<R>(n, 2 * k)
        .mul(&r.pow(k as u32))
        .mul(&R::from_rat(&Rat::from_bigint(odd_double_factorial(k))))
}
