//! Exact arithmetic for Pascal-like triangles built from Riordan arrays.
//!
//! The crate has four layers:
//!
//! - [`ring`], [`rat`], [`ypoly`], [`yrat`], [`series`]: exact scalars
//!   (arbitrary-precision rationals, polynomials and rational functions
//!   in a marker variable `y`) and a truncated-power-series engine
//!   generic over those coefficient rings.
//! - [`triangle`], [`riordan`]: ordinary, exponential, and stretched
//!   Riordan arrays, the parameterized Pascal-like families they
//!   define, palindromy classification, and row/diagonal sums.
//! - [`gamma`]: conversion between Pascal-like triangles and their
//!   gamma-matrices by four independent routes (triangular solve,
//!   Catalan substitution, an explicit double sum, and per-family
//!   closed forms).
//! - [`transforms`], [`jacobi`]: triangle reversion, INVERT and
//!   binomial transforms of bivariate generating functions, the
//!   r-Narayana family, and Jacobi continued-fraction extraction and
//!   evaluation.
//!
//! Everything is exact — there is no floating point anywhere — and all
//! values are immutable; every operation is a pure function, so values
//! can be shared freely between threads.
//!
//! [`verify`] packages the identities relating all of the above into a
//! named, deterministic check suite.

pub mod combinatorics;
pub mod error;
pub mod gamma;
pub mod jacobi;
pub mod rat;
pub mod ring;
pub mod riordan;
pub mod series;
pub mod transforms;
pub mod triangle;
pub mod verify;
pub mod ypoly;
pub mod yrat;

pub use error::{Error, Result};
pub use jacobi::JacobiCF;
pub use rat::Rat;
pub use ring::{Field, Ring};
pub use riordan::{RiordanKind, RiordanSpec};
pub use series::Series;
pub use triangle::{GammaMatrix, Symmetry, Triangle};
pub use ypoly::YPoly;
pub use yrat::YRat;
