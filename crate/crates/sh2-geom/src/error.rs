use core::fmt;

use crate::exp_map::GeodesicSpec;
use crate::pendulum::Case;

/// Failures reported by the geometry routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain { what: &'static str, value: f64 },
    /// The requested quantity is infinite, e.g. `K(1)`.
    Divergent(&'static str),
    /// The covector lies in a stratum the operation does not handle.
    UnsupportedStratum(Case),
    /// A root bracket did not show the expected sign change.
    NoBracket { what: &'static str, lo: f64, hi: f64 },
    /// An iterative solver gave up; carries its best candidate when it had one.
    NumericFailure { what: &'static str, residual: f64, best: Option<GeodesicSpec> },
    /// The identity element has no minimizer other than the constant curve.
    OriginExcluded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} out of domain"),
            Error::Divergent(what) => write!(f, "{what} diverges"),
            Error::UnsupportedStratum(case) => write!(f, "operation undefined on stratum {case:?}"),
            Error::NoBracket { what, lo, hi } => {
                write!(f, "{what}: no sign change on [{lo}, {hi}]")
            }
            Error::NumericFailure { what, residual, .. } => {
                write!(f, "{what} did not converge (residual {residual:e})")
            }
            Error::OriginExcluded => f.write_str("the origin is excluded"),
        }
    }
}

impl core::error::Error for Error {}
