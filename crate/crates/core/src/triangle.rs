//! Lower-triangular number triangles and their gamma-matrices.

use num_bigint::BigInt;

use crate::rat::Rat;
use crate::ring::Ring;
use crate::ypoly::YPoly;

/// Row-symmetry classification of a triangle.
///
/// `PascalLike` means every row is palindromic with border 1;
/// `SignedPascalLike` means palindromic rows with border `(-1)^n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    PascalLike,
    SignedPascalLike,
    Asymmetric,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::PascalLike => "pascal-like",
            Symmetry::SignedPascalLike => "signed-pascal-like",
            Symmetry::Asymmetric => "asymmetric",
        }
    }
}

/// A lower-triangular array: row `n` holds entries `(n,0) .. (n,n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangle<R: Ring = Rat> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> Triangle<R> {
    /// Panics unless row `n` has exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Triangle { rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn entry(&self, n: usize, k: usize) -> &R {
        &self.rows[n][k]
    }

    /// Keep only the first `n` rows.
    pub fn truncated(&self, n: usize) -> Self {
        assert!(n <= self.rows.len());
        Triangle { rows: self.rows[..n].to_vec() }
    }

    /// First row at which the border/palindromy pattern fails, for the
    /// plain (`signed = false`) or alternating (`signed = true`) border.
    fn first_violation(&self, signed: bool) -> Option<usize> {
        for (n, row) in self.rows.iter().enumerate() {
            let border = if signed && n % 2 == 1 { R::one().neg() } else { R::one() };
            if row[0] != border {
                return Some(n);
            }
            let half = row.len() / 2;
            if (0..half).any(|k| row[k] != row[n - k]) {
                return Some(n);
            }
        }
        None
    }

    /// Exact classification; `PascalLike` wins when both patterns fit
    /// (possible only while no odd row exists).
    pub fn symmetry(&self) -> Symmetry {
        if self.first_violation(false).is_none() {
            Symmetry::PascalLike
        } else if self.first_violation(true).is_none() {
            Symmetry::SignedPascalLike
        } else {
            Symmetry::Asymmetric
        }
    }

    /// The first row that rules out both border patterns, when the
    /// triangle is asymmetric.
    pub(crate) fn first_bad_row(&self) -> Option<usize> {
        match (self.first_violation(false), self.first_violation(true)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        }
    }

    pub fn row_sums(&self) -> Vec<R> {
        self.rows
            .iter()
            .map(|row| row.iter().fold(R::zero(), |acc, e| acc.add(e)))
            .collect()
    }

    /// Diagonal sum `n` is `sum_k t[n-k][k]` over `k <= n/2`.
    pub fn diagonal_sums(&self) -> Vec<R> {
        (0..self.rows.len())
            .map(|n| {
                let mut acc = R::zero();
                for k in 0..=n / 2 {
                    acc = acc.add(&self.rows[n - k][k]);
                }
                acc
            })
            .collect()
    }
}

impl Triangle<Rat> {
    /// True when every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(Rat::is_integer)
    }

    /// All entries as integers, when integral.
    pub fn to_bigint_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(Rat::to_bigint).collect())
            .collect()
    }

    /// Row `n` read as a polynomial in `y`.
    pub fn row_polynomial(&self, n: usize) -> YPoly {
        YPoly::from_coeffs(self.rows[n].clone())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Triangle::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&e| Rat::from_int(e)).collect())
                .collect(),
        )
    }
}

/// A gamma-matrix: row `n` holds the `floor(n/2) + 1` coefficients of
/// the degree-`floor(n/2)` gamma-polynomial of row `n` of a Pascal-like
/// triangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaMatrix<R: Ring = Rat> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> GammaMatrix<R> {
    /// Panics unless row `n` has exactly `floor(n/2) + 1` entries.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n / 2 + 1, "gamma row {n} must have {} entries", n / 2 + 1);
        }
        GammaMatrix { rows }
    }

    /// Build from a closed-form entry function.
    pub fn from_fn(rows: usize, f: impl Fn(u64, u64) -> R) -> Self {
        GammaMatrix {
            rows: (0..rows)
                .map(|n| (0..=n / 2).map(|k| f(n as u64, k as u64)).collect())
                .collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn entry(&self, n: usize, k: usize) -> &R {
        &self.rows[n][k]
    }

    pub fn truncated(&self, n: usize) -> Self {
        assert!(n <= self.rows.len());
        GammaMatrix { rows: self.rows[..n].to_vec() }
    }
}

impl GammaMatrix<Rat> {
    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(Rat::is_integer)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        GammaMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&e| Rat::from_int(e)).collect())
                .collect(),
        )
    }

    /// Row `n` read as a polynomial in `y`.
    pub fn row_polynomial(&self, n: usize) -> YPoly {
        YPoly::from_coeffs(self.rows[n].clone())
    }
}
