//! Triangle reversion, INVERT and binomial transforms, and the
//! r-Narayana family.
//!
//! The reversion of a triangle with bivariate generating function
//! `h(x,y)` is the triangle of `(1/x) Rev_x(x h(x,y))`, compositional
//! inverse taken in `x` over `Q[y]`. Reversion is an involution, turns
//! the ordinary Pascal-like family into signed triangles of Narayana
//! type, and commutes with taking gamma-matrices.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::Ring;
use crate::series::{catalan_series, Series};
use crate::triangle::{GammaMatrix, Triangle};
use crate::ypoly::YPoly;

/// INVERT(alpha): `gf / (1 + alpha x gf)`. Its inverse is
/// INVERT(-alpha).
pub fn invert_transform<R: Ring>(gf: &Series<R>, alpha: &R) -> Series<R> {
    let order = gf.order();
    let den = Series::one(order).add(&gf.mul_scalar(alpha).mul_xpow(1).truncated(order));
    gf.div(&den).expect("denominator has constant term 1")
}

/// The t-th binomial transform: `(1/(1-tx)) gf(x/(1-tx))`.
pub fn binomial_transform<R: Ring>(gf: &Series<R>, t: &R) -> Series<R> {
    let order = gf.order();
    // 1/(1-tx) = sum t^i x^i
    let mut pre = Vec::with_capacity(order + 1);
    let mut p = R::one();
    for _ in 0..=order {
        pre.push(p.clone());
        p = p.mul(t);
    }
    let pre = Series::from_coeffs(pre);
    let inner = pre.mul_xpow(1).truncated(order);
    pre.mul(&gf.compose(&inner).expect("inner has zero constant term"))
}

/// Rebuild the bivariate generating function `sum_n h_n(y) x^n` of a
/// triangle, truncated at `order` (which must not exceed the last row).
pub fn bivariate_from_triangle(t: &Triangle<Rat>, order: usize) -> Result<Series<YPoly>> {
    if t.n_rows() <= order {
        return Err(Error::NotEnoughRows { need: order + 1, have: t.n_rows() });
    }
    Ok(Series::from_coeffs(
        (0..=order).map(|n| t.row_polynomial(n)).collect(),
    ))
}

/// Triangle rows read off a bivariate series: entry `(n,k)` is
/// `[y^k][x^n]`.
pub fn triangle_from_bivariate(gf: &Series<YPoly>, rows: usize) -> Result<Triangle<Rat>> {
    if gf.order() + 1 < rows {
        return Err(Error::OrderTooLow { need: rows.saturating_sub(1), have: gf.order() });
    }
    Ok(Triangle::from_rows(
        (0..rows)
            .map(|n| {
                let p = gf.coeff(n);
                debug_assert!(p.degree().unwrap_or(0) <= n, "row {n} exceeds y-degree {n}");
                (0..=n).map(|k| p.coeff(k)).collect()
            })
            .collect(),
    ))
}

/// Gamma-matrix rows read off a bivariate series: row `n` holds
/// `[y^k][x^n]` for `k <= floor(n/2)`.
pub fn gamma_from_bivariate(gf: &Series<YPoly>, rows: usize) -> Result<GammaMatrix<Rat>> {
    if gf.order() + 1 < rows {
        return Err(Error::OrderTooLow { need: rows.saturating_sub(1), have: gf.order() });
    }
    Ok(GammaMatrix::from_rows(
        (0..rows)
            .map(|n| {
                let p = gf.coeff(n);
                debug_assert!(p.degree().unwrap_or(0) <= n / 2);
                (0..=n / 2).map(|k| p.coeff(k)).collect()
            })
            .collect(),
    ))
}

/// Reversion of a triangle: the triangle whose generating function is
/// `(1/x) Rev_x(x h(x,y))`. Requires `h_{0,0} = 1` (a unit linear
/// coefficient for the reversion) and `h` to have at least `rows` rows.
/// Applying it twice gives back the input.
pub fn revert_triangle(h: &Triangle<Rat>, rows: usize) -> Result<Triangle<Rat>> {
    if h.n_rows() < rows {
        return Err(Error::NotEnoughRows { need: rows, have: h.n_rows() });
    }
    if h.n_rows() > 0 && !h.entry(0, 0).is_one() {
        return Err(Error::ReversionDomain);
    }
    let order = rows.saturating_sub(1);
    let gf = bivariate_from_triangle(h, order)?;
    let xh = gf.mul_xpow(1);
    let reverted = xh.revert()?;
    let star = reverted.div_xpow(1)?;
    triangle_from_bivariate(&star, rows)
}

fn one_plus_x_yplus1<R: Ring>(order: usize, yp1: &R) -> Series<R> {
    Series::polynomial(&[R::one(), yp1.clone()], order)
}

/// Catalan composition `pre * c(scale * x^2 * pre^2)` shared by the four
/// closed-form family generating functions below.
fn catalan_family_gf(order: usize, lin: &YPoly, scale: &YPoly) -> Series<YPoly> {
    let a = Series::one(order)
        .div(&one_plus_x_yplus1(order, lin))
        .expect("constant term 1");
    let inner = a
        .mul(&a)
        .mul_scalar(scale)
        .mul_xpow(2)
        .truncated(order);
    let c = catalan_series::<YPoly>(order);
    a.mul(&c.compose(&inner).expect("inner starts at x^2"))
}

/// Generating function of the reversion of the ordinary family:
/// `(1/(1+x(y+1))) c(-r x^2 y / (1+x(y+1))^2)`.
pub fn reverted_family_gf(r: &Rat, order: usize) -> Series<YPoly> {
    let yp1 = YPoly::from_ints(&[1, 1]);
    let minus_ry = YPoly::y().scale(&-r);
    catalan_family_gf(order, &yp1, &minus_ry)
}

/// Generating function of the gamma-matrix of the reverted family:
/// `(1/(1+x)) c(-r x^2 y / (1+x)^2)`.
pub fn reverted_gamma_gf(r: &Rat, order: usize) -> Series<YPoly> {
    let one = YPoly::one();
    let minus_ry = YPoly::y().scale(&-r);
    catalan_family_gf(order, &one, &minus_ry)
}

/// Generating function of the r-Narayana triangle:
/// `(1/(1-x(y+1))) c(r x^2 y / (1-x(y+1))^2)`.
pub fn narayana_gf(r: &Rat, order: usize) -> Series<YPoly> {
    let m_yp1 = YPoly::from_ints(&[-1, -1]);
    let ry = YPoly::y().scale(r);
    catalan_family_gf(order, &m_yp1, &ry)
}

/// Generating function of the gamma-matrix of the r-Narayana triangle:
/// `(1/(1-x)) c(r x^2 y / (1-x)^2)`.
pub fn narayana_gamma_gf(r: &Rat, order: usize) -> Series<YPoly> {
    let m_one = YPoly::from_ints(&[-1]);
    let ry = YPoly::y().scale(r);
    catalan_family_gf(order, &m_one, &ry)
}

/// The r-Narayana triangle: reversion of the signed family
/// `(1/(1+x), -x(1+rx)/(1+x))`. `r = 1` gives the Narayana numbers
/// `N(n,k) = C(n+1,k) C(n,k) / (k+1)`, `r = 0` the binomial triangle.
pub fn narayana_triangle(r: &Rat, rows: usize) -> Triangle<Rat> {
    let order = rows.saturating_sub(1);
    triangle_from_bivariate(&narayana_gf(r, order), rows).expect("order matches rows")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binom;
    use crate::gamma::{extract_gamma_solve, gamma_closed_reverted};
    use crate::riordan::{pascal_like_family, signed_pascal_like_family};

    fn int_rows(t: &Triangle<Rat>) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|e| i64::try_from(e.to_bigint().unwrap()).unwrap()).collect())
            .collect()
    }

    fn ypoly_series(ints: &[&[i64]]) -> Series<YPoly> {
        Series::from_coeffs(ints.iter().map(|c| YPoly::from_ints(c)).collect())
    }

    #[test]
    fn invert_transform_cor6() {
        // gamma(x,y) = 1/(1-x-rx^2y); INVERT at alpha = -y gives
        // 1/(1-(y+1)x-rx^2y).
        for r in -2i64..=2 {
            let order = 8;
            let den = Series::from_coeffs({
                let mut v = vec![YPoly::one(), YPoly::from_ints(&[-1]), YPoly::y().scale(&Rat::from_int(-r))];
                v.resize(order + 1, YPoly::zero());
                v
            });
            let gamma_gf = Series::one(order).div(&den).unwrap();
            let h = invert_transform(&gamma_gf, &-&YPoly::y());
            let hden = Series::from_coeffs({
                let mut v = vec![YPoly::one(), YPoly::from_ints(&[-1, -1]), YPoly::y().scale(&Rat::from_int(-r))];
                v.resize(order + 1, YPoly::zero());
                v
            });
            let want = Series::one(order).div(&hden).unwrap();
            assert_eq!(h, want, "r = {r}");
        }
    }

    #[test]
    fn invert_zero_is_identity_and_round_trips() {
        let gf = ypoly_series(&[&[1], &[2, 1], &[0, 3], &[5], &[1, 1, 1]]);
        assert_eq!(invert_transform(&gf, &YPoly::zero()), gf);
        let a = YPoly::from_ints(&[2, -1]);
        let round = invert_transform(&invert_transform(&gf, &a), &-&a);
        assert_eq!(round, gf);
    }

    #[test]
    fn binomial_transform_identity_and_round_trip() {
        let gf = ypoly_series(&[&[1], &[0, 2], &[1, 1], &[3], &[0, 0, 1], &[1]]);
        assert_eq!(binomial_transform(&gf, &YPoly::zero()), gf);
        let round = binomial_transform(&binomial_transform(&gf, &-&YPoly::y()), &YPoly::y());
        assert_eq!(round, gf);
    }

    #[test]
    fn binomial_transform_shifts_binomials() {
        // t = 1 on 1/(1-x) gives 1/(1-2x): composition oracle.
        let gf = Series::<Rat>::geometric(8);
        let got = binomial_transform(&gf, &Rat::one());
        let want = Series::one(8)
            .div(&Series::polynomial(&[Rat::one(), Rat::from_int(-2)], 8))
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn reverted_triangles_match_paper_displays() {
        // r = -1: the reverted triangle is (-1)^n times the Narayana triangle.
        let rev = revert_triangle(&pascal_like_family(&Rat::from_int(-1), 7), 7).unwrap();
        assert_eq!(int_rows(&rev)[6], vec![1, 21, 105, 175, 105, 21, 1]);
        assert_eq!(int_rows(&rev)[5], vec![-1, -15, -50, -50, -15, -1]);
        // r = 0: (-1)^n binomial rows.
        let rev = revert_triangle(&pascal_like_family(&Rat::zero(), 7), 7).unwrap();
        assert_eq!(int_rows(&rev)[5], vec![-1, -5, -10, -10, -5, -1]);
        // r = 1, row 6.
        let rev = revert_triangle(&pascal_like_family(&Rat::one(), 7), 7).unwrap();
        assert_eq!(int_rows(&rev)[6], vec![1, -9, -15, -15, -15, -9, 1]);
        assert_eq!(int_rows(&rev)[4], vec![1, -2, -4, -2, 1]);
    }

    #[test]
    fn reversion_is_an_involution() {
        for r in [-2i64, -1, 0, 1, 2] {
            let t = pascal_like_family(&Rat::from_int(r), 9);
            let round = revert_triangle(&revert_triangle(&t, 9).unwrap(), 9).unwrap();
            assert_eq!(round, t, "r = {r}");
        }
    }

    #[test]
    fn reverted_family_gf_matches_reversion() {
        for r in -2i64..=2 {
            let r = Rat::from_int(r);
            let gf = reverted_family_gf(&r, 8);
            let t = revert_triangle(&pascal_like_family(&r, 9), 9).unwrap();
            assert_eq!(
                triangle_from_bivariate(&gf, 9).unwrap(),
                t,
                "r = {r}"
            );
        }
        // r = 0 collapses to 1/(1+x(y+1)) exactly.
        let gf = reverted_family_gf(&Rat::zero(), 5);
        let den = Series::polynomial(&[YPoly::one(), YPoly::from_ints(&[1, 1])], 5);
        assert_eq!(gf, Series::one(5).div(&den).unwrap());
    }

    #[test]
    fn reverted_gf_double_sum_oracle() {
        // h*_{n,i} = sum_k (-1)^n (-r)^k C(n,2k) C_k C(n-2k, i-k).
        use crate::combinatorics::catalan;
        for r in -2i64..=2 {
            let rr = Rat::from_int(r);
            let gf = reverted_family_gf(&rr, 12);
            for n in 0..=12u64 {
                let poly = gf.coeff(n as usize);
                for i in 0..=n {
                    let mut acc = Rat::zero();
                    for k in 0..=n / 2 {
                        if i < k {
                            continue;
                        }
                        let sign = if n % 2 == 0 { 1 } else { -1 };
                        let term = &(&Rat::from_bigint(binom(n, 2 * k))
                            * &Rat::from_bigint(catalan(k)))
                            * &(&Rat::from_int(-r).pow(k as u32) * &Rat::from_int(sign));
                        acc = &acc + &(&term * &Rat::from_bigint(binom(n - 2 * k, i - k)));
                    }
                    assert_eq!(poly.coeff(i as usize), acc, "r={r} n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn reverted_gamma_is_reversion_of_gamma() {
        // extract(revert(h)) equals both the closed form and the
        // gamma-matrix read from reverted_gamma_gf.
        for r in -2i64..=2 {
            let rr = Rat::from_int(r);
            let rev = revert_triangle(&pascal_like_family(&rr, 10), 10).unwrap();
            let got = extract_gamma_solve(&rev).unwrap();
            let from_gf = gamma_from_bivariate(&reverted_gamma_gf(&rr, 9), 10).unwrap();
            assert_eq!(got, from_gf, "r = {r}");
            for n in 0..10u64 {
                for k in 0..=n / 2 {
                    assert_eq!(
                        got.entry(n as usize, k as usize),
                        &gamma_closed_reverted(&rr, n, k),
                        "r={r} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn narayana_triangle_values() {
        let t = narayana_triangle(&Rat::one(), 7);
        assert_eq!(int_rows(&t)[6], vec![1, 21, 105, 175, 105, 21, 1]);
        // closed form N(n,k) = C(n+1,k) C(n,k) / (k+1)
        for n in 0..7u64 {
            for k in 0..=n {
                let want = &(&Rat::from_bigint(binom(n + 1, k)) * &Rat::from_bigint(binom(n, k)))
                    / &Rat::from_int(k as i64 + 1);
                assert_eq!(t.entry(n as usize, k as usize), &want);
            }
        }
        let t0 = narayana_triangle(&Rat::zero(), 7);
        for n in 0..7u64 {
            for k in 0..=n {
                assert_eq!(t0.entry(n as usize, k as usize).to_bigint().unwrap(), binom(n, k));
            }
        }
        let tm = narayana_triangle(&Rat::from_int(-1), 7);
        assert_eq!(int_rows(&tm)[6], vec![1, -9, -15, -15, -15, -9, 1]);
    }

    #[test]
    fn narayana_is_reversion_of_signed_family() {
        for r in -2i64..=2 {
            let rr = Rat::from_int(r);
            let direct = narayana_triangle(&rr, 8);
            let rev = revert_triangle(&signed_pascal_like_family(&rr, 8), 8).unwrap();
            assert_eq!(direct, rev, "r = {r}");
        }
    }

    #[test]
    fn revert_requires_unit_corner() {
        let t = Triangle::from_ints(&[&[2], &[1, 1]]);
        assert!(matches!(revert_triangle(&t, 2), Err(Error::ReversionDomain)));
        let t = Triangle::from_ints(&[&[1]]);
        assert_eq!(
            revert_triangle(&t, 3),
            Err(Error::NotEnoughRows { need: 3, have: 1 })
        );
    }
}
