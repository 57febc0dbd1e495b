use std::fmt;

use super::measure::ExactMeasure;
use super::series::Laurent;
use crate::algebra::Field;
use crate::error::{Error, Result};

/// A closed ball `B[center; e^radius_log]`.
///
/// Open balls are canonicalized on construction: `|x - c| < e^k` is the same
/// set as `|x - c| <= e^(k-1)`. The stored center is the exact truncation of
/// the given center to exponents above `radius_log`, so equal balls compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    center: Laurent,
    radius_log: i64,
}

impl Ball {
    pub fn closed(center: &Laurent, radius_log: i64) -> Result<Ball> {
        let (center, _) = center.truncate(-(radius_log + 1))?;
        Ok(Ball { center, radius_log })
    }

    pub fn open(center: &Laurent, radius_log: i64) -> Result<Ball> {
        Ball::closed(center, radius_log - 1)
    }

    /// The closed unit ball `B[0; 1]`.
    pub fn unit(field: &Field) -> Ball {
        Ball { center: Laurent::zero(field), radius_log: 0 }
    }

    pub fn center(&self) -> &Laurent {
        &self.center
    }

    pub fn radius_log(&self) -> i64 {
        self.radius_log
    }

    pub fn field(&self) -> &Field {
        self.center.field()
    }

    /// `nu(B[x; e^k]) = q^k`.
    pub fn measure(&self) -> ExactMeasure {
        ExactMeasure::q_power(self.field().q(), self.radius_log)
    }

    /// Radius multiplied by `3^steps`, rounded down into the value group:
    /// the largest `j` with `e^j <= 3^steps e^k`.
    pub fn dilate_by_three(&self, steps: u32) -> Ball {
        let extra = (steps as f64 * 3f64.ln()).floor() as i64;
        let (center, _) = self.center.truncate(-(self.radius_log + extra + 1)).expect("exact center");
        Ball { center, radius_log: self.radius_log + extra }
    }

    pub fn contains(&self, x: &Laurent) -> Result<bool> {
        (x - &self.center).lognorm_le(self.radius_log)
    }

    /// Whether `other` lies inside `self`.
    pub fn contains_ball(&self, other: &Ball) -> bool {
        other.radius_log <= self.radius_log && self.contains(&other.center).unwrap_or(false)
    }

    /// Parse `B[center; e^k]` (closed) or `B(center; e^k)` (open).
    pub fn parse(field: &Field, s: &str) -> Result<Ball> {
        let s = s.trim();
        let body = s.strip_prefix('B').ok_or_else(|| Error::Parse(format!("ball must start with 'B': {s:?}")))?;
        let (open, inner) = if let Some(i) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            (true, i)
        } else if let Some(i) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            (false, i)
        } else {
            return Err(Error::Parse(format!("bad ball brackets in {s:?}")));
        };
        let (c, r) = inner.rsplit_once(';').ok_or_else(|| Error::Parse(format!("missing radius in {s:?}")))?;
        let k = parse_e_power(r)?;
        let center = Laurent::parse(field, c)?;
        if open {
            Ball::open(&center, k)
        } else {
            Ball::closed(&center, k)
        }
    }
}

/// Parse `e^k` (also `1` for `e^0`).
pub fn parse_e_power(s: &str) -> Result<i64> {
    let s = s.trim();
    if s == "1" {
        return Ok(0);
    }
    if s == "e" {
        return Ok(1);
    }
    s.strip_prefix("e^")
        .and_then(|k| k.trim().trim_matches(|c| c == '(' || c == ')').parse::<i64>().ok())
        .ok_or_else(|| Error::Parse(format!("expected e^k, got {s:?}")))
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[{}; e^{}]", self.center, self.radius_log)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measures() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(Ball::unit(&f2).measure().to_string(), "1");
        let b = Ball::closed(&Laurent::parse(&f2, "T^-1").unwrap(), -2).unwrap();
        assert_eq!(b.measure().to_string(), "1/4");
        let f3 = Field::prime(3).unwrap();
        let b = Ball::closed(&Laurent::parse(&f3, "T").unwrap(), 1).unwrap();
        assert_eq!(b.measure().to_string(), "3");
    }

    #[test]
    fn open_ball_canonicalizes() {
        let f = Field::prime(2).unwrap();
        let zero = Laurent::zero(&f);
        assert_eq!(Ball::open(&zero, 0).unwrap(), Ball::closed(&zero, -1).unwrap());
        assert_eq!(Ball::parse(&f, "B(0; e^0)").unwrap().measure().to_string(), "1/2");
    }

    #[test]
    fn every_point_is_a_center() {
        let f = Field::prime(3).unwrap();
        let a = Ball::closed(&Laurent::parse(&f, "1+T^-1+2*T^-4").unwrap(), -2).unwrap();
        let b = Ball::closed(&Laurent::parse(&f, "1+T^-1+T^-3").unwrap(), -2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "B[1+T^-1; e^-2]");
    }

    #[test]
    fn dilation_uses_the_value_group() {
        let f = Field::prime(2).unwrap();
        let b = Ball::unit(&f);
        assert_eq!(b.dilate_by_three(1).radius_log(), 1);
        assert_eq!(b.dilate_by_three(2).radius_log(), 2);
        // 11 ln 3 = 12.08..
        assert_eq!(b.dilate_by_three(11).radius_log(), 12);
    }
}
