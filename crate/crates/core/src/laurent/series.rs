use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::algebra::poly::{format_terms, mul_slices, parse_terms};
use crate::algebra::{FqElem, Field, LogNorm, Poly};
use crate::error::{precision, Error, Result};

/// Default working precision in coefficient places below T^0.
pub const DEFAULT_PREC: i64 = 64;

/// A precision-tracked element of F_q((1/T)).
///
/// Stores the certified coefficients for exponents `lo ..= lo + len - 1`
/// (first and last stored coefficients nonzero). With `prec = Some(p)` the
/// value is only known modulo terms of exponent `< -p`, i.e. up to an error
/// of absolute value at most `e^(-p-1)`. `prec = None` marks an exact
/// (finite) Laurent polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent {
    field: Field,
    lo: i64,
    coeffs: Vec<FqElem>,
    prec: Option<i64>,
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl Laurent {
    fn build(field: &Field, lo: i64, coeffs: Vec<FqElem>, prec: Option<i64>) -> Laurent {
        let mut l = Laurent { field: field.clone(), lo, coeffs, prec };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        if let Some(p) = self.prec {
            let drop = (-p - self.lo).max(0) as usize;
            if drop > 0 {
                let drop = drop.min(self.coeffs.len());
                self.coeffs.drain(..drop);
                self.lo += drop as i64;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn zero(field: &Field) -> Laurent {
        Laurent { field: field.clone(), lo: 0, coeffs: Vec::new(), prec: None }
    }

    /// Zero known only to precision `prec`.
    pub fn zero_to(field: &Field, prec: i64) -> Laurent {
        Laurent { field: field.clone(), lo: 0, coeffs: Vec::new(), prec: Some(prec) }
    }

    pub fn one(field: &Field) -> Laurent {
        Laurent::monomial(field, field.one(), 0)
    }

    /// `c * T^k`, exact.
    pub fn monomial(field: &Field, c: FqElem, k: i64) -> Laurent {
        Laurent::build(field, k, vec![c], None)
    }

    pub fn from_poly(p: &Poly) -> Laurent {
        Laurent::build(p.field(), 0, p.coeffs().to_vec(), None)
    }

    /// From `(exponent, coefficient)` pairs; terms below `-prec` are dropped.
    pub fn from_terms(field: &Field, terms: &[(i64, FqElem)], prec: Option<i64>) -> Laurent {
        if terms.is_empty() {
            return Laurent { field: field.clone(), lo: 0, coeffs: Vec::new(), prec };
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![FqElem::ZERO; (hi - lo + 1) as usize];
        for &(k, c) in terms {
            let idx = (k - lo) as usize;
            coeffs[idx] = field.add(coeffs[idx], c);
        }
        Laurent::build(field, lo, coeffs, prec)
    }

    /// Random coefficients at every exponent from `top` down to `-prec`,
    /// drawn in that order so a longer draw extends a shorter one.
    pub fn random<R: Rng + ?Sized>(field: &Field, top: i64, prec: i64, rng: &mut R) -> Laurent {
        let lo = -prec;
        let len = (top - lo + 1).max(0) as usize;
        let mut coeffs: Vec<FqElem> = (0..len).map(|_| FqElem(rng.gen_range(0..field.q()))).collect();
        coeffs.reverse();
        Laurent::build(field, lo, coeffs, Some(prec))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Certified tail precision; `None` for exact values.
    pub fn prec(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Exponent of the lowest stored (nonzero) coefficient.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lo)
    }

    /// Degree of the leading certified nonzero coefficient.
    pub fn top(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// True when no certified coefficient is nonzero.
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }

    /// Coefficient of `T^k`; errors below the certified precision.
    pub fn coeff(&self, k: i64) -> Result<FqElem> {
        if let Some(p) = self.prec {
            if k < -p {
                return Err(precision(format!("coefficient of T^{k} below precision {p}")));
            }
        }
        Ok(self.coeff_unchecked(k))
    }

    fn coeff_unchecked(&self, k: i64) -> FqElem {
        if k < self.lo {
            return FqElem::ZERO;
        }
        self.coeffs.get((k - self.lo) as usize).copied().unwrap_or(FqElem::ZERO)
    }

    /// Exact log-norm; errors if the value is zero to its precision.
    pub fn lognorm(&self) -> Result<LogNorm> {
        match (self.top(), self.prec) {
            (Some(t), _) => Ok(LogNorm::Finite(t)),
            (None, None) => Ok(LogNorm::Bottom),
            (None, Some(p)) => Err(precision(format!("value is zero to precision {p}; log-norm undetermined"))),
        }
    }

    /// Certified upper bound on the log-norm.
    pub fn lognorm_upper(&self) -> LogNorm {
        match (self.top(), self.prec) {
            (Some(t), _) => LogNorm::Finite(t),
            (None, None) => LogNorm::Bottom,
            (None, Some(p)) => LogNorm::Finite(-p - 1),
        }
    }

    /// Decide `|self| <= e^k`.
    pub fn lognorm_le(&self, k: i64) -> Result<bool> {
        match (self.top(), self.prec) {
            (Some(t), _) => Ok(t <= k),
            (None, None) => Ok(true),
            (None, Some(p)) if -p - 1 <= k => Ok(true),
            (None, Some(p)) => Err(precision(format!("cannot decide |x| <= e^{k} at precision {p}"))),
        }
    }

    /// Decide `|self| < e^k`.
    pub fn lognorm_lt(&self, k: i64) -> Result<bool> {
        self.lognorm_le(k - 1)
    }

    /// Lower the precision to at most `p`.
    pub fn with_prec(&self, p: i64) -> Laurent {
        Laurent::build(&self.field, self.lo, self.coeffs.clone(), min_prec(self.prec, Some(p)))
    }

    fn check(&self, other: &Laurent) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let prec = min_prec(self.prec, other.prec);
        if self.coeffs.is_empty() {
            return Ok(other.with_prec_opt(prec));
        }
        if other.coeffs.is_empty() {
            return Ok(self.with_prec_opt(prec));
        }
        let lo = self.lo.min(other.lo);
        let hi = self.top().unwrap().max(other.top().unwrap());
        let f = &self.field;
        let coeffs = (lo..=hi).map(|k| f.add(self.coeff_unchecked(k), other.coeff_unchecked(k))).collect();
        Ok(Laurent::build(f, lo, coeffs, prec))
    }

    fn with_prec_opt(&self, prec: Option<i64>) -> Laurent {
        match prec {
            None => self.clone(),
            Some(p) => self.with_prec(p),
        }
    }

    pub fn try_sub(&self, other: &Laurent) -> Result<Laurent> {
        self.try_add(&-other)
    }

    /// Product with the tightest provable precision: an error of size
    /// `e^(-p-1)` in one factor is scaled by the other factor's norm bound.
    pub fn try_mul(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let f = &self.field;
        if self.is_exact_zero() || other.is_exact_zero() {
            return Ok(Laurent::zero(f));
        }
        let mut prec: Option<i64> = None;
        if let Some(pb) = other.prec {
            let ua = self.lognorm_upper().finite().expect("nonzero bound");
            prec = min_prec(prec, Some(pb - ua));
        }
        if let Some(pa) = self.prec {
            let ub = other.lognorm_upper().finite().expect("nonzero bound");
            prec = min_prec(prec, Some(pa - ub));
        }
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(Laurent { field: f.clone(), lo: 0, coeffs: Vec::new(), prec });
        }
        // only coefficients at exponents >= -prec are needed
        let base = self.lo + other.lo;
        let skip = match prec {
            Some(p) if base < -p => (-p - base) as usize,
            _ => 0,
        };
        let (a, b) = (&self.coeffs, &other.coeffs);
        let coeffs = if skip == 0 {
            mul_slices(f, a, b)
        } else {
            let n = a.len() + b.len() - 1;
            (skip.min(n)..n)
                .map(|k| {
                    let lo_i = k.saturating_sub(b.len() - 1);
                    let hi_i = k.min(a.len() - 1);
                    f.dot((lo_i..=hi_i).map(|i| (a[i], b[k - i])))
                })
                .collect()
        };
        Ok(Laurent::build(f, base + skip as i64, coeffs, prec))
    }

    pub fn mul_poly(&self, p: &Poly) -> Laurent {
        self * &Laurent::from_poly(p)
    }

    pub fn scale(&self, c: FqElem) -> Laurent {
        if c.is_zero() {
            return Laurent::zero(&self.field).with_prec_opt(self.prec);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Laurent { field: self.field.clone(), lo: self.lo, coeffs, prec: self.prec }
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent {
            field: self.field.clone(),
            lo: if self.coeffs.is_empty() { 0 } else { self.lo + k },
            coeffs: self.coeffs.clone(),
            prec: self.prec.map(|p| p - k),
        }
    }

    /// Split into (polynomial part, fractional part).
    pub fn parts(&self) -> Result<(Poly, Laurent)> {
        if let Some(p) = self.prec.filter(|&p| p < 0) {
            return Err(precision(format!("polynomial part undetermined at precision {p}")));
        }
        let f = &self.field;
        let top = match self.top() {
            None => return Ok((Poly::zero(f), self.clone())),
            Some(t) => t,
        };
        let poly = if top >= 0 {
            Poly::from_coeffs(f, (0..=top).map(|k| self.coeff_unchecked(k)).collect())
        } else {
            Poly::zero(f)
        };
        let frac_coeffs: Vec<FqElem> = (self.lo..0).map(|k| self.coeff_unchecked(k)).collect();
        let frac = Laurent::build(f, self.lo, frac_coeffs, self.prec);
        Ok((poly, frac))
    }

    /// The fractional part ⟨a⟩.
    pub fn frac(&self) -> Result<Laurent> {
        Ok(self.parts()?.1)
    }

    /// Exact truncation keeping exponents `>= -n`. The flag reports whether
    /// the result may differ from the true value (nonzero terms dropped or
    /// an uncertain tail). Errors when `n` exceeds the certified precision.
    pub fn truncate(&self, n: i64) -> Result<(Laurent, bool)> {
        if let Some(p) = self.prec {
            if n > p {
                return Err(precision(format!("truncation at T^-{n} exceeds precision {p}")));
            }
        }
        let dropped_terms = self.low_exponent().is_some_and(|lo| lo < -n);
        let lossy = dropped_terms || self.prec.is_some();
        let hi = match self.top() {
            Some(t) if t >= -n => t,
            _ => return Ok((Laurent::zero(&self.field), lossy)),
        };
        let lo = self.lo.max(-n);
        let coeffs = (lo..=hi).map(|k| self.coeff_unchecked(k)).collect();
        Ok((Laurent::build(&self.field, lo, coeffs, None), lossy))
    }

    /// Convert an exact value with no negative exponents to a polynomial.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.prec.is_some() || self.low_exponent().is_some_and(|lo| lo < 0) {
            return None;
        }
        let top = match self.top() {
            None => return Some(Poly::zero(&self.field)),
            Some(t) => t,
        };
        Some(Poly::from_coeffs(&self.field, (0..=top).map(|k| self.coeff_unchecked(k)).collect()))
    }

    /// Descending `(exponent, coefficient)` list of the nonzero certified terms.
    pub fn terms(&self) -> Vec<(i64, FqElem)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (self.lo + i as i64, c))
            .collect()
    }

    /// Parse `T^2+1+T^-1 ; prec=40`; without the suffix the value is exact.
    pub fn parse(field: &Field, s: &str) -> Result<Laurent> {
        let (body, prec) = match s.split_once(';') {
            None => (s, None),
            Some((body, rest)) => {
                let rest = rest.trim();
                let v = rest
                    .strip_prefix("prec")
                    .map(|r| r.trim_start())
                    .and_then(|r| r.strip_prefix('='))
                    .ok_or_else(|| Error::Parse(format!("expected 'prec=N' in {s:?}")))?;
                let p: i64 = v.trim().parse().map_err(|_| Error::Parse(format!("bad precision in {s:?}")))?;
                (body, Some(p))
            }
        };
        let terms = parse_terms(field, body)?;
        if let Some(p) = prec {
            if let Some(&(k, _)) = terms.iter().find(|(k, c)| *k < -p && !c.is_zero()) {
                return Err(Error::Parse(format!("term T^{k} below declared precision {p}")));
            }
        }
        Ok(Laurent::from_terms(field, &terms, prec))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.field, &self.terms()))?;
        if let Some(p) = self.prec {
            write!(f, " ; prec={p}")?;
        }
        Ok(())
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Laurent { field: self.field.clone(), lo: self.lo, coeffs, prec: self.prec }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(f: &Field, s: &str) -> Laurent {
        Laurent::parse(f, s).unwrap()
    }

    #[test]
    fn parts_examples() {
        let f = Field::prime(2).unwrap();
        let (p, frac) = l(&f, "T^2+1+T^-1").parts().unwrap();
        assert_eq!(p, Poly::parse(&f, "T^2+1").unwrap());
        assert_eq!(frac, l(&f, "T^-1"));
        let a = l(&f, "T^-2+T^-5 ; prec=10");
        let (p, frac) = a.parts().unwrap();
        assert!(p.is_zero());
        assert_eq!(frac, a);
        let (p, frac) = Laurent::zero(&f).parts().unwrap();
        assert!(p.is_zero() && frac.is_exact_zero());
    }

    #[test]
    fn cancellation_keeps_precision() {
        let f = Field::prime(3).unwrap();
        let a = l(&f, "T^-1 ; prec=10");
        let b = -&a;
        let s = &a + &b;
        assert!(s.is_zero_to_precision());
        assert_eq!(s.prec(), Some(10));
    }

    #[test]
    fn shift_by_t_drops_one_place() {
        let f = Field::prime(2).unwrap();
        let a = l(&f, "T^-1+T^-2 ; prec=8");
        let b = &a * &Laurent::from_poly(&Poly::t(&f));
        assert_eq!(b, l(&f, "1+T^-1 ; prec=7"));
    }

    #[test]
    fn product_with_exact_zero_is_exact() {
        let f = Field::prime(2).unwrap();
        let a = l(&f, "T^3+T^-1 ; prec=4");
        let z = &a * &Laurent::zero(&f);
        assert!(z.is_exact_zero());
    }

    #[test]
    fn lognorm_requires_certified_coefficient() {
        let f = Field::prime(2).unwrap();
        let z = Laurent::zero_to(&f, 5);
        assert!(matches!(z.lognorm(), Err(Error::PrecisionExhausted(_))));
        assert!(z.lognorm_le(-6).unwrap());
        assert!(z.lognorm_le(-7).is_err());
        assert_eq!(l(&f, "T^-3 ; prec=5").lognorm().unwrap(), LogNorm::Finite(-3));
    }

    #[test]
    fn text_round_trip() {
        let f = Field::prime(3).unwrap();
        for s in ["T^2+1+T^-1 ; prec=40", "2*T^-3", "0 ; prec=3", "0"] {
            assert_eq!(l(&f, s).to_string(), s);
        }
        assert!(Laurent::parse(&f, "T^-5 ; prec=3").is_err());
    }

    #[test]
    fn truncation_flags_dropped_terms() {
        let f = Field::prime(2).unwrap();
        let (t, lossy) = l(&f, "1+T^-1+T^-3").truncate(2).unwrap();
        assert_eq!(t, l(&f, "1+T^-1"));
        assert!(lossy);
        let (_, lossy) = l(&f, "1+T^-1").truncate(2).unwrap();
        assert!(!lossy);
        assert!(l(&f, "1 ; prec=1").truncate(2).is_err());
    }
}
