//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by series arithmetic, triangle construction, gamma
/// extraction, and continued-fraction work.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by a series whose constant term is not a unit.
    #[error("constant term is not a unit in the coefficient ring")]
    NotAUnit,
    /// Composition with an inner series of nonzero constant term.
    #[error("composition requires an inner series with zero constant term")]
    CompositionDomain,
    /// Reversion of a series with nonzero constant term or non-unit
    /// linear coefficient.
    #[error("reversion requires f(0) = 0 and a unit linear coefficient")]
    ReversionDomain,
    /// Exponential of a series with nonzero constant term.
    #[error("exp requires a series with zero constant term")]
    ExpDomain,
    /// A series was truncated below the order a computation needs.
    #[error("truncation order {have} is too low, need at least {need}")]
    OrderTooLow { need: usize, have: usize },
    /// A Riordan spec violating the invariants of its kind.
    #[error("invalid Riordan spec: {0}")]
    InvalidSpec(String),
    /// Gamma extraction on a row that is not reciprocal with a unit
    /// (or alternating-unit) border.
    #[error("row {row} is not reciprocal with a Pascal-like border")]
    NotReciprocal { row: usize },
    /// An operation that does not apply to this Riordan array kind.
    #[error("operation does not support this Riordan array kind")]
    UnsupportedKind,
    /// More rows requested than the input provides.
    #[error("requested {need} rows but only {have} are available")]
    NotEnoughRows { need: usize, have: usize },
    /// Continued-fraction depth (or series order) too small for the
    /// requested expansion.
    #[error("insufficient depth: need {need}, have {have}")]
    InsufficientDepth { need: usize, have: usize },
    /// Entry index outside the triangular range.
    #[error("index ({n}, {k}) is outside the triangle")]
    IndexOutOfRange { n: u64, k: u64 },
    /// Continued-fraction extraction hit a quadratic coefficient that is
    /// not invertible; the computation needs a coefficient field.
    #[error("level {level}: quadratic coefficient is not a unit; extraction needs a coefficient field")]
    FieldRequired { level: usize },
    /// Zero quadratic coefficient with a nonzero remainder: the series
    /// has no Jacobi continued fraction of this shape.
    #[error("level {level}: zero quadratic coefficient with nonzero remainder")]
    DegenerateTail { level: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
