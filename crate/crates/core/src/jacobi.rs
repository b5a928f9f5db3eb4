//! Jacobi continued fractions: finite prefixes of
//! `1/(1 - a0 x - b0 x^2 / (1 - a1 x - b1 x^2 / (...)))`.
//!
//! Extraction strips one level at a time; a prefix of depth `d`
//! reproduces its source series through order `2d`. A vanishing
//! quadratic coefficient terminates the fraction (rational generating
//! functions do this); a non-invertible one means the coefficient ring
//! is too small — extraction over `Q[y]` stops where `Q(y)` would
//! continue.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::Ring;
use crate::series::Series;
use crate::ypoly::YPoly;

/// A finite prefix of a Jacobi continued fraction: linear coefficients
/// `a_0..a_{d-1}` and quadratic coefficients `b_0..`. `b` is one short
/// of `a` exactly when the fraction terminated (its tail is zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiCF<R: Ring> {
    a: Vec<R>,
    b: Vec<R>,
}

impl<R: Ring> JacobiCF<R> {
    pub fn new(a: Vec<R>, b: Vec<R>) -> Self {
        assert!(!a.is_empty(), "a continued fraction needs at least one level");
        assert!(
            b.len() == a.len() || b.len() + 1 == a.len(),
            "need len(b) = len(a) or len(a) - 1"
        );
        JacobiCF { a, b }
    }

    /// Constant streams `a_n = a`, `b_n = b`, materialized to `depth`.
    pub fn constant(a: R, b: R, depth: usize) -> Self {
        JacobiCF { a: vec![a; depth], b: vec![b; depth] }
    }

    pub fn depth(&self) -> usize {
        self.a.len()
    }

    /// True when the fraction ends (zero tail) rather than being a
    /// prefix of something deeper.
    pub fn is_finite(&self) -> bool {
        self.b.len() < self.a.len()
    }

    pub fn a(&self) -> &[R] {
        &self.a
    }

    pub fn b(&self) -> &[R] {
        &self.b
    }

    /// Shift every linear coefficient by `t`, the continued-fraction
    /// image of the t-th binomial transform (quadratic coefficients are
    /// untouched).
    pub fn binomial_shift(&self, t: &R) -> Self {
        JacobiCF {
            a: self.a.iter().map(|a| a.add(t)).collect(),
            b: self.b.clone(),
        }
    }
}

/// Read `depth` levels off a series with constant term 1 by repeated
/// stripping: write `G = 1/(1 - a x - b x^2 G')`, so `1 - 1/G` has
/// linear coefficient `a` and the rest is `b x^2 G'`.
///
/// Terminates early (finite fraction) when a level's quadratic
/// coefficient and remainder both vanish. Needs `gf` order at least
/// `2 * depth`.
pub fn jacobi_extract<R: Ring>(gf: &Series<R>, depth: usize) -> Result<JacobiCF<R>> {
    if !gf.coeff(0).is_one() {
        return Err(Error::InvalidSpec("continued-fraction extraction needs gf(0) = 1".into()));
    }
    if gf.order() < 2 * depth {
        return Err(Error::InsufficientDepth { need: 2 * depth, have: gf.order() });
    }
    let mut a = Vec::with_capacity(depth);
    let mut b = Vec::with_capacity(depth);
    let mut g = gf.clone();
    for level in 0..depth {
        let t = Series::one(g.order()).sub(&Series::one(g.order()).div(&g)?);
        a.push(t.coeff(1).clone());
        let mut rest = t;
        // zero out the linear part, then shift down by x^2
        let rest_coeffs: Vec<R> = rest
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i < 2 { R::zero() } else { c.clone() })
            .collect();
        rest = Series::from_coeffs(rest_coeffs).div_xpow(2)?;
        let bk = rest.coeff(0).clone();
        if bk.is_zero() {
            if rest.is_zero() {
                return Ok(JacobiCF::new(a, b));
            }
            return Err(Error::DegenerateTail { level });
        }
        let inv = bk.try_invert().ok_or(Error::FieldRequired { level })?;
        b.push(bk);
        g = rest.mul_scalar(&inv);
    }
    Ok(JacobiCF::new(a, b))
}

/// Evaluate a continued fraction bottom-up, truncated at `order`. A
/// prefix of depth `d` is exact through order `2d`; deeper orders
/// require more levels unless the fraction is finite.
pub fn jacobi_evaluate<R: Ring>(cf: &JacobiCF<R>, order: usize) -> Result<Series<R>> {
    if !cf.is_finite() && 2 * cf.depth() < order {
        return Err(Error::InsufficientDepth { need: order.div_ceil(2), have: cf.depth() });
    }
    let mut g = Series::one(order);
    for k in (0..cf.depth()).rev() {
        let mut den = Series::one(order);
        let ax = Series::x(order.max(1)).truncated(order).mul_scalar(&cf.a[k]);
        den = den.sub(&ax);
        if k < cf.b.len() && !cf.b[k].is_zero() {
            let tail = g.mul_xpow(2).truncated(order).mul_scalar(&cf.b[k]);
            den = den.sub(&tail);
        }
        g = Series::one(order).div(&den)?;
    }
    Ok(g)
}

/// Sampled symbolic extraction: extract at `deg_bound + 2` rational
/// values of `y`, then interpolate each coefficient position back to a
/// polynomial in `y`. Cheaper than working over `Q(y)` when the streams
/// are known to be polynomial of small degree; the extra sample point
/// makes the degree bound a verified claim rather than an assumption.
pub fn jacobi_extract_interpolated(
    gf_at: impl Fn(&Rat) -> Series<Rat>,
    depth: usize,
    deg_bound: usize,
) -> Result<JacobiCF<YPoly>> {
    let points: Vec<Rat> = (1..=deg_bound as i64 + 2).map(Rat::from_int).collect();
    let mut samples = Vec::with_capacity(points.len());
    for y in &points {
        let cf = jacobi_extract(&gf_at(y), depth)?;
        if cf.depth() < depth {
            return Err(Error::DegenerateTail { level: cf.depth() });
        }
        samples.push(cf);
    }
    let interp = |pick: &dyn Fn(&JacobiCF<Rat>) -> Rat| -> Result<YPoly> {
        let pts: Vec<(Rat, Rat)> = points
            .iter()
            .cloned()
            .zip(samples.iter().map(pick))
            .collect();
        let poly = YPoly::interpolate(&pts);
        if poly.degree().unwrap_or(0) > deg_bound {
            return Err(Error::InvalidSpec(format!(
                "interpolated coefficient has degree {} > bound {}",
                poly.degree().unwrap_or(0),
                deg_bound
            )));
        }
        Ok(poly)
    };
    let mut a = Vec::with_capacity(depth);
    let mut b = Vec::with_capacity(depth);
    for k in 0..depth {
        a.push(interp(&move |cf: &JacobiCF<Rat>| cf.a()[k].clone())?);
        b.push(interp(&move |cf: &JacobiCF<Rat>| cf.b()[k].clone())?);
    }
    Ok(JacobiCF::new(a, b))
}
