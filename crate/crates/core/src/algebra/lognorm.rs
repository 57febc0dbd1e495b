use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// Logarithm of an absolute value: `|x| = e^value`, with `Bottom` for `|0| = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogNorm {
    Bottom,
    Finite(i64),
}

impl LogNorm {
    pub fn is_bottom(self) -> bool {
        matches!(self, LogNorm::Bottom)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            LogNorm::Bottom => None,
            LogNorm::Finite(v) => Some(v),
        }
    }

    /// `log(|a| / |b|)`; `None` when either side is zero.
    pub fn ratio(self, other: LogNorm) -> Option<i64> {
        Some(self.finite()? - other.finite()?)
    }

    /// Multiply by `e^k`.
    pub fn shift(self, k: i64) -> LogNorm {
        match self {
            LogNorm::Bottom => LogNorm::Bottom,
            LogNorm::Finite(v) => LogNorm::Finite(v + k),
        }
    }
}

impl Ord for LogNorm {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LogNorm::Bottom, LogNorm::Bottom) => Ordering::Equal,
            (LogNorm::Bottom, _) => Ordering::Less,
            (_, LogNorm::Bottom) => Ordering::Greater,
            (LogNorm::Finite(a), LogNorm::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for LogNorm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of absolute values.
impl Add for LogNorm {
    type Output = LogNorm;
    fn add(self, rhs: LogNorm) -> LogNorm {
        match (self, rhs) {
            (LogNorm::Finite(a), LogNorm::Finite(b)) => LogNorm::Finite(a + b),
            _ => LogNorm::Bottom,
        }
    }
}

impl fmt::Display for LogNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogNorm::Bottom => write!(f, "BOTTOM"),
            LogNorm::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for LogNorm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            LogNorm::Bottom => s.serialize_none(),
            LogNorm::Finite(v) => s.serialize_i64(*v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bottom_is_minimal_and_absorbing() {
        assert!(LogNorm::Bottom < LogNorm::Finite(i64::MIN));
        assert_eq!(LogNorm::Bottom + LogNorm::Finite(3), LogNorm::Bottom);
        assert_eq!(LogNorm::Finite(2) + LogNorm::Finite(3), LogNorm::Finite(5));
    }

    #[test]
    fn quotient_of_degrees() {
        assert_eq!(LogNorm::Finite(2).ratio(LogNorm::Finite(5)), Some(-3));
        assert_eq!(LogNorm::Bottom.ratio(LogNorm::Finite(5)), None);
    }
}
