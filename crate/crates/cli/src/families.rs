//! Named builtin families shared by the subcommands: triangles, their
//! gamma-matrices, and bivariate generating functions.

use riordan_gamma::gamma::{
    extract_gamma_alphabeta, extract_gamma_solve, extract_gamma_zeilberger,
    gamma_closed_exponential, gamma_closed_narayana, gamma_closed_ordinary, gamma_closed_reverted,
};
use riordan_gamma::riordan::{
    eulerian_triangle, exp_pascal_like_family, general_stretched_gamma_family, pascal_like_family,
    signed_pascal_like_family,
};
use riordan_gamma::series::Series;
use riordan_gamma::transforms::{
    narayana_gamma_gf, narayana_gf, narayana_triangle, reverted_family_gf, reverted_gamma_gf,
    revert_triangle,
};
use riordan_gamma::{Error, GammaMatrix, Rat, Ring, Triangle, YPoly};

/// The six triangle families exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Ordinary,
    Signed,
    Exponential,
    StretchedGamma,
    Narayana,
    Reverted,
}

impl Family {
    pub fn parse(name: &str) -> Result<Family, String> {
        Ok(match name {
            "ordinary" => Family::Ordinary,
            "signed" => Family::Signed,
            "exponential" => Family::Exponential,
            "stretched-gamma" => Family::StretchedGamma,
            "narayana" => Family::Narayana,
            "reverted" => Family::Reverted,
            other => return Err(format!("unknown family {other:?}")),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Ordinary => "ordinary",
            Family::Signed => "signed",
            Family::Exponential => "exponential",
            Family::StretchedGamma => "stretched-gamma",
            Family::Narayana => "narayana",
            Family::Reverted => "reverted",
        }
    }

    pub fn triangle(self, r: &Rat, rows: usize) -> Result<Triangle, Error> {
        Ok(match self {
            Family::Ordinary => pascal_like_family(r, rows),
            Family::Signed => signed_pascal_like_family(r, rows),
            Family::Exponential => exp_pascal_like_family(r, rows),
            Family::StretchedGamma => {
                let g = stretched_g(r, rows + 1);
                general_stretched_gamma_family(&g, rows)?.1
            }
            Family::Narayana => narayana_triangle(r, rows),
            Family::Reverted => revert_triangle(&pascal_like_family(r, rows), rows)?,
        })
    }

    /// Closed-form gamma-matrix, for the families that have one.
    pub fn closed_gamma(self, r: &Rat, rows: usize) -> Option<GammaMatrix> {
        let f: fn(&Rat, u64, u64) -> Rat = match self {
            Family::Ordinary => gamma_closed_ordinary,
            Family::Exponential => gamma_closed_exponential,
            Family::Narayana => gamma_closed_narayana,
            Family::Reverted => gamma_closed_reverted,
            Family::Signed | Family::StretchedGamma => return None,
        };
        Some(GammaMatrix::from_fn(rows, |n, k| f(r, n, k)))
    }
}

/// `(1 + r x)/(1 - x)`, the `g` of the stretched gamma family.
pub fn stretched_g(r: &Rat, order: usize) -> Series<Rat> {
    Series::polynomial(&[Rat::one(), r.clone()], order)
        .div(&Series::polynomial(&[Rat::one(), Rat::from_int(-1)], order))
        .expect("unit constant term")
}

/// Gamma-extraction methods exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Solve,
    Zeilberger,
    AlphaBeta,
    Closed,
    All,
}

impl Method {
    pub fn parse(name: &str) -> Result<Method, String> {
        Ok(match name {
            "solve" => Method::Solve,
            "zeilberger" => Method::Zeilberger,
            "alphabeta" => Method::AlphaBeta,
            "closed" => Method::Closed,
            "all" => Method::All,
            other => return Err(format!("unknown method {other:?}")),
        })
    }
}

pub fn extract(method: Method, t: &Triangle) -> Result<GammaMatrix, Error> {
    match method {
        Method::Solve => extract_gamma_solve(t),
        Method::Zeilberger => extract_gamma_zeilberger(t),
        Method::AlphaBeta => extract_gamma_alphabeta(t),
        Method::Closed | Method::All => unreachable!("handled by the caller"),
    }
}

/// Builtin bivariate generating functions (for `jacobi` and
/// `transform`): the row polynomials of a family triangle, or of its
/// gamma-matrix, as the coefficients of `x^n`.
pub fn family_gf(name: &str, r: &Rat, order: usize) -> Result<Series<YPoly>, String> {
    let gf = match name {
        "ordinary" => rational_gf(&[YPoly::one(), YPoly::from_ints(&[-1, -1]), YPoly::y().scale(&-r)], order),
        "ordinary-gamma" => rational_gf(&[YPoly::one(), YPoly::from_ints(&[-1]), YPoly::y().scale(&-r)], order),
        "reverted" => reverted_family_gf(r, order),
        "reverted-gamma" => reverted_gamma_gf(r, order),
        "narayana" => narayana_gf(r, order),
        "narayana-gamma" => narayana_gamma_gf(r, order),
        "exponential" => {
            let t = exp_pascal_like_family(r, order + 1);
            Series::from_coeffs((0..=order).map(|n| t.row_polynomial(n)).collect())
        }
        "exponential-gamma" => {
            let g = GammaMatrix::from_fn(order + 1, |n, k| gamma_closed_exponential(r, n, k));
            Series::from_coeffs((0..=order).map(|n| g.row_polynomial(n)).collect())
        }
        other => return Err(format!("unknown generating function {other:?}")),
    };
    Ok(gf)
}

/// `1 / (c0 + c1 x + c2 x^2)` truncated at `order`.
fn rational_gf(den: &[YPoly], order: usize) -> Series<YPoly> {
    Series::one(order)
        .div(&Series::polynomial(den, order))
        .expect("unit constant term")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for name in ["ordinary", "signed", "exponential", "stretched-gamma", "narayana", "reverted"] {
            assert_eq!(Family::parse(name).unwrap().name(), name);
        }
        assert!(Family::parse("nope").is_err());
    }

    #[test]
    fn reverted_family_matches_transform() {
        let t = Family::Reverted.triangle(&Rat::from_int(-1), 7).unwrap();
        let row: Vec<String> = t.row(6).iter().map(|e| e.to_string()).collect();
        assert_eq!(row.join(" "), "1 21 105 175 105 21 1");
    }

    #[test]
    fn ordinary_gf_matches_family_rows() {
        let gf = family_gf("ordinary", &Rat::from_int(1), 6).unwrap();
        let t = Family::Ordinary.triangle(&Rat::from_int(1), 7).unwrap();
        for n in 0..7 {
            assert_eq!(gf.coeff(n), &t.row_polynomial(n));
        }
    }
}
