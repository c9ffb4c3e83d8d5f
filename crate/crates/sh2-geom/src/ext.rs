//! Times that may be infinite.

use core::cmp::Ordering;
use core::fmt;

/// A nonnegative time or `+∞`.
///
/// Only comparison is provided: infinite cut and Maxwell times are genuine values
/// on the separatrix, and arithmetic on them would hide stratum mistakes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            ExtReal::Infinite => None,
        }
    }

    /// The finite value, or `cap` when infinite.
    pub fn min_with(self, cap: f64) -> f64 {
        match self {
            ExtReal::Finite(v) => v.min(cap),
            ExtReal::Infinite => cap,
        }
    }

    pub fn min(self, other: ExtReal) -> ExtReal {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        if v == f64::INFINITY {
            ExtReal::Infinite
        } else {
            ExtReal::Finite(v)
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a.partial_cmp(b),
            (ExtReal::Finite(_), ExtReal::Infinite) => Some(Ordering::Less),
            (ExtReal::Infinite, ExtReal::Finite(_)) => Some(Ordering::Greater),
            (ExtReal::Infinite, ExtReal::Infinite) => Some(Ordering::Equal),
        }
    }
}

impl PartialEq<f64> for ExtReal {
    fn eq(&self, other: &f64) -> bool {
        *self == ExtReal::from(*other)
    }
}

impl PartialOrd<f64> for ExtReal {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.partial_cmp(&ExtReal::from(*other))
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(v) => write!(f, "{v:.17e}"),
            ExtReal::Infinite => f.write_str("inf"),
        }
    }
}
