use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::Serialize;

/// An exact Haar measure `count * q^(-depth)`, normalized so that the
/// closed unit ball has measure 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactMeasure {
    count: u128,
    depth: i64,
    q: u32,
}

impl ExactMeasure {
    pub fn new(q: u32, count: u128, depth: i64) -> ExactMeasure {
        let mut m = ExactMeasure { count, depth, q };
        m.canonicalize();
        m
    }

    pub fn zero(q: u32) -> ExactMeasure {
        ExactMeasure { count: 0, depth: 0, q }
    }

    /// `q^k`, the measure of a closed ball of radius `e^k`.
    pub fn q_power(q: u32, k: i64) -> ExactMeasure {
        ExactMeasure::new(q, 1, -k)
    }

    fn canonicalize(&mut self) {
        if self.count == 0 {
            self.depth = 0;
            return;
        }
        let q = self.q as u128;
        while self.count.is_multiple_of(q) {
            self.count /= q;
            self.depth -= 1;
        }
    }

    pub fn count(&self) -> u128 {
        self.count
    }
    pub fn depth(&self) -> i64 {
        self.depth
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn is_zero(&self) -> bool {
        self.count == 0
    }

    /// Re-express with the given depth (`count` scaled up); `None` if the
    /// requested depth is too shallow to represent the value as an integer.
    pub fn count_at_depth(&self, depth: i64) -> Option<u128> {
        if self.count == 0 {
            return Some(0);
        }
        let diff = depth - self.depth;
        if diff < 0 {
            return None;
        }
        (self.q as u128).checked_pow(diff as u32).and_then(|s| s.checked_mul(self.count))
    }

    /// Natural logarithm of the value; `-inf` for zero.
    pub fn ln(&self) -> f64 {
        if self.count == 0 {
            return f64::NEG_INFINITY;
        }
        (self.count as f64).ln() - self.depth as f64 * (self.q as f64).ln()
    }

    pub fn to_f64(&self) -> f64 {
        self.ln().exp()
    }

    /// Exact ratio `self / other` as a measure-like value (other must be a
    /// pure power of q, e.g. a ball measure).
    pub fn div_q_power(&self, other: &ExactMeasure) -> ExactMeasure {
        assert_eq!(other.count, 1, "divisor must be a power of q");
        ExactMeasure::new(self.q, self.count, self.depth - other.depth)
    }
}

impl Add for ExactMeasure {
    type Output = ExactMeasure;
    fn add(self, rhs: ExactMeasure) -> ExactMeasure {
        assert_eq!(self.q, rhs.q, "measures over different fields");
        if self.count == 0 {
            return rhs;
        }
        if rhs.count == 0 {
            return self;
        }
        let depth = self.depth.max(rhs.depth);
        let a = self.count_at_depth(depth).expect("measure overflow");
        let b = rhs.count_at_depth(depth).expect("measure overflow");
        ExactMeasure::new(self.q, a + b, depth)
    }
}

impl std::iter::Sum for ExactMeasure {
    fn sum<I: Iterator<Item = ExactMeasure>>(mut iter: I) -> ExactMeasure {
        let first = match iter.next() {
            None => panic!("sum of an empty measure iterator has no base field"),
            Some(m) => m,
        };
        iter.fold(first, |a, b| a + b)
    }
}

impl PartialOrd for ExactMeasure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.q != other.q {
            return None;
        }
        let depth = self.depth.max(other.depth);
        Some(self.count_at_depth(depth)?.cmp(&other.count_at_depth(depth)?))
    }
}

impl fmt::Display for ExactMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.depth <= 0 {
            match self.count_at_depth(0) {
                Some(v) => write!(f, "{v}"),
                None => write!(f, "{}*{}^{}", self.count, self.q, -self.depth),
            }
        } else {
            match (self.q as u128).checked_pow(self.depth as u32) {
                Some(den) => write!(f, "{}/{}", self.count, den),
                None => write!(f, "{}/{}^{}", self.count, self.q, self.depth),
            }
        }
    }
}

#[derive(Serialize)]
struct MeasureJson {
    count: String,
    depth: i64,
    q: u32,
    value: String,
}

impl Serialize for ExactMeasure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MeasureJson { count: self.count.to_string(), depth: self.depth, q: self.q, value: self.to_string() }
            .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_reduces_depth() {
        let m = ExactMeasure::new(2, 4, 3);
        assert_eq!((m.count(), m.depth()), (1, 1));
        assert_eq!(m.to_string(), "1/2");
        assert_eq!(ExactMeasure::q_power(3, 1).to_string(), "3");
    }

    #[test]
    fn addition_aligns_depths() {
        let a = ExactMeasure::new(2, 1, 2);
        let b = ExactMeasure::new(2, 1, 1);
        assert_eq!((a + b).to_string(), "3/4");
        assert_eq!(ExactMeasure::new(2, 1, 1) + ExactMeasure::new(2, 1, 1), ExactMeasure::new(2, 1, 0));
    }

    #[test]
    fn ordering() {
        assert!(ExactMeasure::new(3, 1, 2) < ExactMeasure::new(3, 1, 1));
        assert!(ExactMeasure::zero(3) < ExactMeasure::new(3, 1, 10));
    }
}
