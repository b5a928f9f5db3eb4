//! Riordan arrays and the Pascal-like triangle families they define.
//!
//! An ordinary Riordan array `(g, f)` has entries `[x^n] g f^k`; the
//! exponential variant scales by `n!/k!`; a stretched array replaces
//! `f` by a series starting at `x^2`. The one-parameter families here
//! are the ones whose gamma-matrices admit closed forms.

use crate::error::{Error, Result};
use crate::gamma::expand_gamma;
use crate::rat::Rat;
use crate::ring::Ring;
use crate::series::Series;
use crate::triangle::{GammaMatrix, Symmetry, Triangle};
use crate::ypoly::YPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RiordanKind {
    Ordinary,
    Exponential,
    Stretched,
}

/// A symbolic description of a Riordan array: its kind plus the two
/// defining series.
#[derive(Clone, Debug)]
pub struct RiordanSpec<R: Ring = Rat> {
    kind: RiordanKind,
    g: Series<R>,
    f: Series<R>,
}

impl<R: Ring> RiordanSpec<R> {
    /// Ordinary array `(g, f)`: requires `g(0) = 1`, `f(0) = 0`, and a
    /// unit linear coefficient in `f` (1 for the classical families,
    /// -1 for their signed companions).
    pub fn ordinary(g: Series<R>, f: Series<R>) -> Result<Self> {
        Self::checked(RiordanKind::Ordinary, g, f)
    }

    /// Exponential array `[g, f]`, same shape conditions as `ordinary`.
    pub fn exponential(g: Series<R>, f: Series<R>) -> Result<Self> {
        Self::checked(RiordanKind::Exponential, g, f)
    }

    /// Stretched array `(g, phi)`: requires `g(0) = 1`, `phi` starting
    /// exactly at `x^2`.
    pub fn stretched(g: Series<R>, phi: Series<R>) -> Result<Self> {
        Self::checked(RiordanKind::Stretched, g, phi)
    }

    fn checked(kind: RiordanKind, g: Series<R>, f: Series<R>) -> Result<Self> {
        if !g.coeff(0).is_one() {
            return Err(Error::InvalidSpec("g(0) must be 1".into()));
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::InvalidSpec("f(0) must be 0".into()));
        }
        match kind {
            RiordanKind::Ordinary | RiordanKind::Exponential => {
                if f.order() < 1 || f.coeff(1).try_invert().is_none() {
                    return Err(Error::InvalidSpec("[x^1] f must be a unit".into()));
                }
            }
            RiordanKind::Stretched => {
                if f.order() < 2 || !f.coeff(1).is_zero() || f.coeff(2).is_zero() {
                    return Err(Error::InvalidSpec(
                        "a stretched array needs [x^1] f = 0 and [x^2] f != 0".into(),
                    ));
                }
            }
        }
        Ok(RiordanSpec { kind, g, f })
    }

    pub fn kind(&self) -> RiordanKind {
        self.kind
    }

    pub fn g(&self) -> &Series<R> {
        &self.g
    }

    pub fn f(&self) -> &Series<R> {
        &self.f
    }

    fn require_order(&self, rows: usize) -> Result<()> {
        let need = rows.saturating_sub(1);
        let have = self.g.order().min(self.f.order());
        if have < need {
            return Err(Error::OrderTooLow { need, have });
        }
        Ok(())
    }

    /// Successive column generating functions `g f^k`, truncated at the
    /// shared order, for `k = 0 .. cols-1`.
    fn columns(&self, cols: usize) -> Vec<Series<R>> {
        let mut out = Vec::with_capacity(cols);
        let mut p = self.g.truncated(self.g.order().min(self.f.order()));
        for _ in 0..cols {
            out.push(p.clone());
            p = p.mul(&self.f);
        }
        out
    }
}

/// Entries `[x^n] g f^k` of an ordinary or stretched array, as a
/// zero-padded lower triangle with `rows` rows.
pub fn ordinary_triangle<R: Ring>(spec: &RiordanSpec<R>, rows: usize) -> Result<Triangle<R>> {
    if spec.kind == RiordanKind::Exponential {
        return Err(Error::UnsupportedKind);
    }
    spec.require_order(rows)?;
    let cols = spec.columns(rows);
    Ok(Triangle::from_rows(
        (0..rows)
            .map(|n| (0..=n).map(|k| cols[k].coeff(n).clone()).collect())
            .collect(),
    ))
}

/// Entries `(n!/k!) [x^n] g f^k` of an exponential array.
pub fn exponential_triangle<R: Ring>(spec: &RiordanSpec<R>, rows: usize) -> Result<Triangle<R>> {
    if spec.kind != RiordanKind::Exponential {
        return Err(Error::UnsupportedKind);
    }
    spec.require_order(rows)?;
    let cols = spec.columns(rows);
    let fact: Vec<Rat> = {
        let mut f = vec![Rat::one()];
        for i in 1..rows.max(1) {
            f.push(&f[i - 1] * &Rat::from_int(i as i64));
        }
        f
    };
    Ok(Triangle::from_rows(
        (0..rows)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let scale = R::from_rat(&(&fact[n] / &fact[k]));
                        cols[k].coeff(n).mul(&scale)
                    })
                    .collect()
            })
            .collect(),
    ))
}

fn one_minus_x<R: Ring>(order: usize) -> Series<R> {
    Series::polynomial(&[R::one(), R::one().neg()], order)
}

fn one_plus_x<R: Ring>(order: usize) -> Series<R> {
    Series::polynomial(&[R::one(), R::one()], order)
}

/// The array `(1/(1-x), x(1+rx)/(1-x))`: Pascal-like for every `r`.
/// `r = 0` gives Pascal's triangle, `r = 1` the Delannoy triangle,
/// `r = -1` the all-ones triangle.
pub fn pascal_like_family<R: Ring>(r: &R, rows: usize) -> Triangle<R> {
    let order = rows.max(1);
    let g = Series::geometric(order);
    let num = Series::polynomial(&[R::zero(), R::one(), r.clone()], order);
    let f = num.div(&one_minus_x(order)).expect("unit constant term");
    let spec = RiordanSpec::ordinary(g, f).expect("family spec is valid");
    ordinary_triangle(&spec, rows).expect("order chosen to fit")
}

/// The signed companion `(1/(1+x), -x(1+rx)/(1+x))`: palindromic rows
/// with border `(-1)^n`. Its unsigned core is `pascal_like_family(-r)`.
pub fn signed_pascal_like_family<R: Ring>(r: &R, rows: usize) -> Triangle<R> {
    let order = rows.max(1);
    let g = Series::one(order).div(&one_plus_x(order)).expect("unit constant term");
    let num = Series::polynomial(&[R::zero(), R::one().neg(), r.neg()], order);
    let f = num.div(&one_plus_x(order)).expect("unit constant term");
    let spec = RiordanSpec::ordinary(g, f).expect("family spec is valid");
    ordinary_triangle(&spec, rows).expect("order chosen to fit")
}

/// The exponential array `[e^x, x(1 + rx/2)]`.
pub fn exp_pascal_like_family<R: Ring>(r: &R, rows: usize) -> Triangle<R> {
    let order = rows.max(1);
    let g = Series::x(order).exp().expect("x has zero constant term");
    let half_r = r.mul(&R::from_rat(&Rat::ratio(1, 2)));
    let f = Series::polynomial(&[R::zero(), R::one(), half_r], order);
    let spec = RiordanSpec::exponential(g, f).expect("family spec is valid");
    exponential_triangle(&spec, rows).expect("order chosen to fit")
}

/// From a power series `g` with `g(0) = 1`, the stretched array
/// `(1/(1-x), x^2 g)` read as a gamma-matrix, together with the
/// Pascal-like triangle it generates.
pub fn general_stretched_gamma_family<R: Ring>(
    g: &Series<R>,
    rows: usize,
) -> Result<(GammaMatrix<R>, Triangle<R>)> {
    if !g.coeff(0).is_one() {
        return Err(Error::InvalidSpec("g(0) must be 1".into()));
    }
    let need = rows.saturating_sub(1);
    if g.order() < need {
        return Err(Error::OrderTooLow { need, have: g.order() });
    }
    let phi = g.mul_xpow(2).truncated(need.max(2));
    let base = Series::geometric(phi.order());
    let mut cols = Vec::with_capacity(rows / 2 + 1);
    let mut p = base;
    for _ in 0..=(rows.saturating_sub(1)) / 2 {
        cols.push(p.clone());
        p = p.mul(&phi);
    }
    let gamma = GammaMatrix::from_rows(
        (0..rows)
            .map(|n| (0..=n / 2).map(|k| cols[k].coeff(n).clone()).collect())
            .collect(),
    );
    let triangle = expand_gamma(&gamma, rows)?;
    Ok((gamma, triangle))
}

/// Eulerian numbers arranged so row `n` counts permutations of `n + 1`
/// elements by descents: 1; 1,1; 1,4,1; 1,11,11,1; ...
pub fn eulerian_triangle(rows: usize) -> Triangle<Rat> {
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = vec![Rat::zero(); n + 1];
        if n == 0 {
            row[0] = Rat::one();
        } else {
            for k in 0..=n {
                let up = &Rat::from_int(k as i64 + 1) * &t[n - 1].get(k).cloned().unwrap_or_else(Rat::zero);
                let down = if k == 0 {
                    Rat::zero()
                } else {
                    &Rat::from_int((n + 1 - k) as i64) * &t[n - 1][k - 1]
                };
                row[k] = &up + &down;
            }
        }
        t.push(row);
    }
    Triangle::from_rows(t)
}

/// Bivariate generating function `g/(1 - y f)` of an ordinary or
/// stretched array: the `x^n` coefficient is the row-`n` polynomial.
/// Exponential specs are rejected (their `n!/k!` scaling has no such
/// form; see [`exponential_bivariate_gf`]).
pub fn bivariate_gf(spec: &RiordanSpec<Rat>, order: usize) -> Result<Series<YPoly>> {
    if spec.kind == RiordanKind::Exponential {
        return Err(Error::UnsupportedKind);
    }
    spec.require_order(order + 1)?;
    let g = lift(&spec.g.truncated(order));
    let yf = lift(&spec.f.truncated(order)).mul_scalar(&YPoly::y());
    let den = Series::one(order).sub(&yf);
    g.div(&den)
}

/// The exponential generating function `g(x) e^{y f(x)}` of an
/// exponential array: its `x^n` coefficient is the row-`n` polynomial
/// divided by `n!`.
pub fn exponential_bivariate_gf(spec: &RiordanSpec<Rat>, order: usize) -> Result<Series<YPoly>> {
    if spec.kind != RiordanKind::Exponential {
        return Err(Error::UnsupportedKind);
    }
    spec.require_order(order + 1)?;
    let g = lift(&spec.g.truncated(order));
    let yf = lift(&spec.f.truncated(order)).mul_scalar(&YPoly::y());
    Ok(g.mul(&yf.exp()?))
}

/// Lift a rational series into `Q[y]` coefficients.
pub fn lift(s: &Series<Rat>) -> Series<YPoly> {
    s.map(|c| YPoly::constant(c.clone()))
}

/// Symmetry classification of a triangle (see [`Triangle::symmetry`]).
pub fn classify_symmetry<R: Ring>(t: &Triangle<R>) -> Symmetry {
    t.symmetry()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_rows(t: &Triangle<Rat>) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|e| i64::try_from(e.to_bigint().unwrap()).unwrap()).collect())
            .collect()
    }

    #[test]
    fn identity_arrays() {
        let ord = RiordanSpec::ordinary(Series::one(3), Series::x(3)).unwrap();
        let t = ordinary_triangle(&ord, 3).unwrap();
        assert_eq!(int_rows(&t), vec![vec![1], vec![0, 1], vec![0, 0, 1]]);

        let expo = RiordanSpec::exponential(Series::one(3), Series::x(3)).unwrap();
        let t = exponential_triangle(&expo, 3).unwrap();
        assert_eq!(int_rows(&t), vec![vec![1], vec![0, 1], vec![0, 0, 1]]);
    }

    #[test]
    fn delannoy_family() {
        let t = pascal_like_family(&Rat::from_int(1), 7);
        assert_eq!(
            int_rows(&t)[6],
            vec![1, 11, 41, 63, 41, 11, 1]
        );
        assert_eq!(t.symmetry(), Symmetry::PascalLike);
        // Delannoy recurrence T(n,k) = T(n-1,k-1) + T(n-2,k-1) + T(n-1,k)
        let r = int_rows(&t);
        for n in 2..7 {
            for k in 1..n {
                let want = r[n - 1][k - 1] + r[n - 2][k - 1] + r[n - 1].get(k).copied().unwrap_or(0);
                assert_eq!(r[n][k], want);
            }
        }
    }

    #[test]
    fn pascal_and_all_ones_family() {
        let pascal = pascal_like_family(&Rat::zero(), 7);
        let rows = int_rows(&pascal);
        assert_eq!(rows[6], vec![1, 6, 15, 20, 15, 6, 1]);
        let ones = pascal_like_family(&Rat::from_int(-1), 7);
        for row in int_rows(&ones) {
            assert!(row.iter().all(|&e| e == 1));
        }
    }

    #[test]
    fn family_rows_one() {
        let t = pascal_like_family(&Rat::zero(), 1);
        assert_eq!(int_rows(&t), vec![vec![1]]);
    }

    #[test]
    fn signed_family_core() {
        // (1/(1+x), -x(1+rx)/(1+x)) rows are (-1)^n times the ordinary
        // family at -r.
        for r in -2i64..=2 {
            let signed = signed_pascal_like_family(&Rat::from_int(r), 8);
            let core = pascal_like_family(&Rat::from_int(-r), 8);
            assert_eq!(signed.symmetry(), Symmetry::SignedPascalLike);
            for n in 0..8 {
                for k in 0..=n {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    let want = &Rat::from_int(sign) * core.entry(n, k);
                    assert_eq!(signed.entry(n, k), &want, "r={r} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn stretched_example_array() {
        // (1/(1-x), x^2): row 6 reads 1,1,1,1,0,0,0 zero-padded.
        let spec = RiordanSpec::stretched(
            Series::geometric(6),
            Series::polynomial(&[Rat::zero(), Rat::zero(), Rat::one()], 6),
        )
        .unwrap();
        let t = ordinary_triangle(&spec, 7).unwrap();
        assert_eq!(int_rows(&t)[6], vec![1, 1, 1, 1, 0, 0, 0]);
        assert_eq!(int_rows(&t)[5], vec![1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn exponential_family_row() {
        let t = exp_pascal_like_family(&Rat::from_int(1), 7);
        assert_eq!(int_rows(&t)[6], vec![1, 21, 120, 215, 120, 21, 1]);
        let t2 = exp_pascal_like_family(&Rat::from_int(2), 7);
        assert_eq!(int_rows(&t2)[6], vec![1, 36, 315, 680, 315, 36, 1]);
        let t0 = exp_pascal_like_family(&Rat::zero(), 7);
        assert_eq!(int_rows(&t0)[6], vec![1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn eulerian_rows() {
        let t = eulerian_triangle(7);
        let rows = int_rows(&t);
        assert_eq!(rows[0], vec![1]);
        assert_eq!(rows[3], vec![1, 11, 11, 1]);
        assert_eq!(rows[4], vec![1, 26, 66, 26, 1]);
        assert_eq!(rows[6], vec![1, 120, 1191, 2416, 1191, 120, 1]);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            RiordanSpec::ordinary(Series::<Rat>::x(2), Series::x(2)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            RiordanSpec::ordinary(Series::<Rat>::one(2), Series::one(2)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            RiordanSpec::stretched(Series::<Rat>::one(2), Series::x(2)),
            Err(Error::InvalidSpec(_))
        ));
        let spec = RiordanSpec::ordinary(Series::<Rat>::one(3), Series::x(3)).unwrap();
        assert_eq!(
            ordinary_triangle(&spec, 5),
            Err(Error::OrderTooLow { need: 4, have: 3 })
        );
        assert_eq!(exponential_triangle(&spec, 3), Err(Error::UnsupportedKind));
    }

    #[test]
    fn ordinary_integer_specs_yield_integers() {
        for r in -3i64..=3 {
            let t = pascal_like_family(&Rat::from_int(r), 10);
            assert!(t.is_integral());
        }
    }

    #[test]
    fn stretched_gamma_family_prop10_symbolic() {
        // g = (1+rx)/(1-x) with r symbolic: triangle row 3 = 1, r+5, r+5, 1.
        let order = 8;
        let r = YPoly::y();
        let num = Series::polynomial(&[YPoly::one(), r], order);
        let g = num.div(&one_minus_x(order)).unwrap();
        let (_, t) = general_stretched_gamma_family(&g, 7).unwrap();
        assert_eq!(t.row(3)[1], "5 + y".parse().unwrap());
        assert_eq!(t.row(6)[2], "41 + 22*y + y^2".parse().unwrap());
    }

    #[test]
    fn bivariate_gf_row_polynomials() {
        let order = 6;
        let g = Series::geometric(order + 1);
        let f = Series::polynomial(&[Rat::zero(), Rat::one(), Rat::one()], order + 1)
            .div(&one_minus_x(order + 1))
            .unwrap();
        let spec = RiordanSpec::ordinary(g, f).unwrap();
        let gf = bivariate_gf(&spec, order).unwrap();
        // row polynomials match the triangle rows
        let t = pascal_like_family(&Rat::from_int(1), 7);
        for n in 0..7 {
            assert_eq!(gf.coeff(n), &t.row_polynomial(n), "row {n}");
        }
        // (1, x) has bivariate gf 1/(1-xy)
        let id = RiordanSpec::ordinary(Series::one(4), Series::x(4)).unwrap();
        let gf = bivariate_gf(&id, 3).unwrap();
        for n in 0..=3 {
            let mut mono = vec![Rat::zero(); n + 1];
            mono[n] = Rat::one();
            assert_eq!(gf.coeff(n), &YPoly::from_coeffs(mono));
        }
        assert_eq!(
            bivariate_gf(&RiordanSpec::exponential(Series::one(4), Series::x(4)).unwrap(), 3),
            Err(Error::UnsupportedKind)
        );
    }

    #[test]
    fn exponential_bivariate_gf_matches_triangle() {
        let order = 6;
        let g = Series::x(order + 1).exp().unwrap();
        let f = Series::polynomial(&[Rat::zero(), Rat::one(), Rat::ratio(1, 2)], order + 1);
        let spec = RiordanSpec::exponential(g, f).unwrap();
        let gf = exponential_bivariate_gf(&spec, order).unwrap();
        let t = exp_pascal_like_family(&Rat::from_int(1), 7);
        let mut fact = Rat::one();
        for n in 0..7 {
            if n > 0 {
                fact = &fact * &Rat::from_int(n as i64);
            }
            let scaled = gf.coeff(n).scale(&fact);
            assert_eq!(scaled, t.row_polynomial(n), "row {n}");
        }
    }
}
