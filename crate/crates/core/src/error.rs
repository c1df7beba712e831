//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors reported by the exact engine.
///
/// `Consistency` is special: it flags a violated internal invariant (an
/// embedding that fails to intertwine, a twist that is not scalar, a solve
/// with the wrong rank). Those are never expected at generic `q` and always
/// indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Division by the zero scalar.
    DivisionByZero,
    /// Numeric evaluation hit a denominator smaller than the tolerance.
    EvalSingularity { t: f64 },
    /// A numeric result left the finite range of `f64`.
    NonFinite,
    /// Basis index outside `0..dim`.
    IndexOutOfRange { index: usize, dim: usize },
    /// Vector or matrix dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// The channel label violates the selection rule of the pair.
    NotInSelectionRule { ell: usize, ell1: usize, ell2: usize },
    /// Exact inversion of a singular matrix was requested.
    SingularMatrix,
    /// An exact linear system had no (unique) solution.
    InconsistentSystem,
    /// A Gamma-function argument is too close to a nonpositive integer.
    GammaPole { arg: f64 },
    /// The requested Verma-module level exceeds the configured cap.
    LevelCapExceeded { level: usize, cap: usize },
    /// A scalar string could not be parsed.
    Parse(String),
    /// A structural self-check failed; the payload describes where.
    Consistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::EvalSingularity { t } => {
                write!(f, "denominator vanishes at q = exp(i pi t), t = {t}")
            }
            Error::NonFinite => write!(f, "numeric evaluation overflowed f64"),
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotInSelectionRule { ell, ell1, ell2 } => {
                write!(f, "label {ell} not in Sel({ell1}, {ell2})")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::InconsistentSystem => write!(f, "linear system is inconsistent"),
            Error::GammaPole { arg } => {
                write!(f, "Gamma argument {arg} too close to a nonpositive integer")
            }
            Error::LevelCapExceeded { level, cap } => {
                write!(f, "level {level} exceeds the configured cap {cap}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Consistency(msg) => write!(f, "internal consistency error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
