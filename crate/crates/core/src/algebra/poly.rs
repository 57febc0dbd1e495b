use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::field::{FqElem, Field};
use super::lognorm::LogNorm;
use crate::error::{Error, Result};

/// An element of F_q[T]. Coefficients ascend by power of T; the leading
/// coefficient is nonzero and the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FqElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FqElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: FqElem) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(field: &Field, c: FqElem, k: usize) -> Poly {
        let mut coeffs = vec![FqElem::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(field, coeffs)
    }

    /// The indeterminate T.
    pub fn t(field: &Field) -> Poly {
        Poly::monomial(field, field.one(), 1)
    }

    /// Uniformly random polynomial of degree at most `max_deg`.
    pub fn random<R: Rng + ?Sized>(field: &Field, max_deg: usize, rng: &mut R) -> Poly {
        let coeffs = (0..=max_deg).map(|_| FqElem(rng.gen_range(0..field.q()))).collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FqElem> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FqElem {
        self.coeffs.get(k).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FqElem::ONE
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `log |P| = deg P`, `Bottom` for zero.
    pub fn lognorm(&self) -> LogNorm {
        match self.deg() {
            None => LogNorm::Bottom,
            Some(d) => LogNorm::Finite(d as i64),
        }
    }

    pub fn lead(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn scale(&self, c: FqElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly { field: self.field.clone(), coeffs }
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FqElem::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(add_slices(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self + &(-other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Poly::from_coeffs(&self.field, mul_slices(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// Euclidean division: `self = quo * divisor + rem`, `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let f = &self.field;
        let db = divisor
            .deg()
            .ok_or_else(|| Error::Domain("polynomial division by zero".into()))?;
        let inv_lead = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quo = vec![FqElem::ZERO; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(rem[i], inv_lead);
            if c.is_zero() {
                continue;
            }
            quo[i - db] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = i - db + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(f, quo), Poly::from_coeffs(f, rem)))
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Domain("inexact polynomial division".into()))
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: FqElem) -> FqElem {
        self.coeffs.iter().rev().fold(FqElem::ZERO, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// Parse the text form, e.g. `T^3+2*T+1`.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let terms = parse_terms(field, s)?;
        let mut coeffs = Vec::new();
        for (k, c) in terms {
            if k < 0 {
                return Err(Error::Parse(format!("negative exponent in polynomial {s:?}")));
            }
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, FqElem::ZERO);
            }
            coeffs[k] = field.add(coeffs[k], c);
        }
        Ok(Poly::from_coeffs(field, coeffs))
    }
}

pub(crate) fn add_slices(f: &Field, a: &[FqElem], b: &[FqElem]) -> Poly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    Poly::from_coeffs(f, out)
}

pub(crate) fn mul_slices(f: &Field, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len() + b.len() - 1;
    (0..n)
        .map(|k| {
            let lo = k.saturating_sub(b.len() - 1);
            let hi = k.min(a.len() - 1);
            f.dot((lo..=hi).map(|i| (a[i], b[k - i])))
        })
        .collect()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly { field: self.field.clone(), coeffs }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, FqElem)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (k as i64, c))
            .collect();
        f.write_str(&format_terms(&self.field, &terms))
    }
}

/// Format `(exponent, coefficient)` terms, already in descending order.
pub(crate) fn format_terms(field: &Field, terms: &[(i64, FqElem)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|&(k, c)| {
            let coef = field.fmt_elem(c);
            match k {
                0 => coef,
                _ => {
                    let mono = if k == 1 { "T".to_string() } else { format!("T^{k}") };
                    if c == FqElem::ONE {
                        mono
                    } else {
                        format!("{coef}*{mono}")
                    }
                }
            }
        })
        .collect();
    parts.join("+")
}

/// Parse `c*T^k` terms joined by `+`. Repeated exponents are summed by the caller.
pub(crate) fn parse_terms(field: &Field, s: &str) -> Result<Vec<(i64, FqElem)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = Vec::new();
    // split on '+' outside of parentheses
    let mut depth = 0;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut pieces = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                pieces.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&s[start..]);
    for piece in pieces {
        let piece = piece.trim();
        let (coef, mono) = match piece.find('T') {
            None => (piece, None),
            Some(pos) => {
                let coef = piece[..pos].trim();
                let coef = match coef.strip_suffix('*') {
                    Some(c) => c.trim(),
                    None if coef.is_empty() => "",
                    None => return Err(Error::Parse(format!("missing '*' in term {piece:?}"))),
                };
                (coef, Some(piece[pos + 1..].trim()))
            }
        };
        let c = if coef.is_empty() { field.one() } else { field.parse_elem(coef)? };
        let k = match mono {
            None => 0,
            Some("") => 1,
            Some(rest) => {
                let e = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad monomial {piece:?}")))?;
                e.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {piece:?}")))?
            }
        };
        out.push((k, c));
    }
    Ok(out)
}
