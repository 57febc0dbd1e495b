//! The base field F_q, q = p^r.
//!
//! Elements are stored packed: the residue vector `(c_0, ..., c_{r-1})` of
//! the polynomial-basis coordinates is encoded as `c_0 + c_1 p + ... `.
//! Prime fields use direct modular arithmetic; extension fields use
//! precomputed tables, which caps them at q <= 256.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const MAX_TABLE_ORDER: u32 = 256;

/// An element of F_q in packed form. Only meaningful together with the
/// [`Field`] that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, ascending coefficients, length r + 1. Present iff r > 1.
    modulus: Option<Vec<u32>>,
    tables: Option<Tables>,
}

/// Descriptor of a finite field F_q. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.r == other.0.r && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "F_{}", self.0.p),
            Some(m) => write!(f, "F_{}[x]/({:?})", self.0.p, m),
        }
    }
}

/// Default irreducible moduli (ascending coefficients, monic) for q <= 64.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (7, 2, &[1, 0, 1]),
];

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic `b` over Z/p (ascending coefficients).
fn zp_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    // b monic
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Exhaustive irreducibility test: no monic factor of degree <= r/2.
pub fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
        return false;
    }
    let r = modulus.len() - 1;
    for d in 1..=r / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                cand.push((c % p as u64) as u32);
                c /= p as u64;
            }
            cand.push(1);
            if zp_poly_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field Z/p.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Field of order q = p^r with the shipped default modulus.
    pub fn with_order(q: u32) -> Result<Field> {
        if is_prime(q) {
            return Field::prime(q);
        }
        for &(p, r, m) in DEFAULT_MODULI {
            if p.pow(r) == q {
                return Field::new(p, r, Some(m.to_vec()));
            }
        }
        Err(Error::InvalidField(format!(
            "no default modulus for q = {q}; pass --r and --modulus explicitly"
        )))
    }

    pub fn new(p: u32, r: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::InvalidField("r must be positive".into()));
        }
        if r == 1 {
            if modulus.is_some() {
                return Err(Error::InvalidField("prime fields take no modulus".into()));
            }
            if p > 1 << 15 {
                return Err(Error::InvalidField(format!("p = {p} too large")));
            }
            return Ok(Field(Arc::new(Inner { p, r, q: p, modulus: None, tables: None })));
        }
        let modulus = match modulus {
            Some(m) => m,
            None => DEFAULT_MODULI
                .iter()
                .find(|(pp, rr, _)| *pp == p && *rr == r)
                .map(|(_, _, m)| m.to_vec())
                .ok_or_else(|| Error::InvalidField(format!("no default modulus for {p}^{r}")))?,
        };
        if modulus.len() != r as usize + 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus has wrong degree or residues".into()));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over Z/{p}")));
        }
        let q = p
            .checked_pow(r)
            .filter(|&q| q <= MAX_TABLE_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{r} exceeds {MAX_TABLE_ORDER}")))?;
        let tables = build_tables(p, r, q, &modulus);
        Ok(Field(Arc::new(Inner { p, r, q, modulus: Some(modulus), tables: Some(tables) })))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }
    #[inline]
    pub fn r(&self) -> u32 {
        self.0.r
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }
    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    /// Checked construction from a packed index.
    pub fn elem(&self, v: u32) -> Result<FqElem> {
        if v < self.q() {
            Ok(FqElem(v))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn from_residues(&self, residues: &[u32]) -> Result<FqElem> {
        if residues.len() > self.r() as usize || residues.iter().any(|&c| c >= self.p()) {
            return Err(Error::FieldMismatch);
        }
        let mut v = 0u32;
        for &c in residues.iter().rev() {
            v = v * self.p() + c;
        }
        Ok(FqElem(v))
    }

    pub fn residues(&self, a: FqElem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.r() as usize);
        let mut v = a.0;
        for _ in 0..self.r() {
            out.push(v % self.p());
            v /= self.p();
        }
        out
    }

    /// Iterate over all q elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q()).map(FqElem)
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        match &self.0.tables {
            None => {
                let s = a.0 + b.0;
                FqElem(if s >= self.0.p { s - self.0.p } else { s })
            }
            Some(t) => FqElem(t.add[(a.0 * self.0.q + b.0) as usize]),
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        match &self.0.tables {
            None => FqElem(if a.0 == 0 { 0 } else { self.0.p - a.0 }),
            Some(t) => FqElem(t.neg[a.0 as usize]),
        }
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        match &self.0.tables {
            None => FqElem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32),
            Some(t) => FqElem(t.mul[(a.0 * self.0.q + b.0) as usize]),
        }
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::Domain("inverse of zero in F_q".into()));
        }
        Ok(match &self.0.tables {
            None => FqElem(self.pow_prime(a.0, self.0.p - 2)),
            Some(t) => FqElem(t.inv[a.0 as usize]),
        })
    }

    fn pow_prime(&self, base: u32, mut e: u32) -> u32 {
        let p = self.0.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc as u32
    }

    /// Sum of products, reduced once at the end for prime fields.
    #[inline]
    pub fn dot<I: IntoIterator<Item = (FqElem, FqElem)>>(&self, pairs: I) -> FqElem {
        match &self.0.tables {
            None => {
                let p = self.0.p as u64;
                let mut acc = 0u64;
                for (a, b) in pairs {
                    acc += a.0 as u64 * b.0 as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                FqElem((acc % p) as u32)
            }
            Some(_) => pairs.into_iter().fold(FqElem::ZERO, |s, (a, b)| self.add(s, self.mul(a, b))),
        }
    }

    /// Text form of a coefficient: a residue, or an r-tuple for r > 1.
    pub fn fmt_elem(&self, a: FqElem) -> String {
        if self.r() == 1 {
            a.0.to_string()
        } else {
            let parts: Vec<String> = self.residues(a).iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<FqElem> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let residues = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad residue {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if residues.len() != self.r() as usize {
                return Err(Error::Parse(format!("expected {} residues in {s:?}", self.r())));
            }
            return self.from_residues(&residues).map_err(|_| Error::Parse(format!("residue out of range in {s:?}")));
        }
        let v: u32 = s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
        if v >= self.p() {
            return Err(Error::Parse(format!("coefficient {v} not in [0, {})", self.p())));
        }
        Ok(FqElem(v))
    }
}

fn build_tables(p: u32, r: u32, q: u32, modulus: &[u32]) -> Tables {
    let unpack = |v: u32| -> Vec<u32> {
        let mut out = Vec::with_capacity(r as usize);
        let mut v = v;
        for _ in 0..r {
            out.push(v % p);
            v /= p;
        }
        out
    };
    let pack = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
    let qs = q as usize;
    let mut add = vec![0u32; qs * qs];
    let mut mul = vec![0u32; qs * qs];
    let mut neg = vec![0u32; qs];
    let mut inv = vec![0u32; qs];
    for a in 0..q {
        let ca = unpack(a);
        neg[a as usize] = pack(&ca.iter().map(|&c| (p - c) % p).collect::<Vec<_>>());
        for b in 0..q {
            let cb = unpack(b);
            let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
            add[(a * q + b) as usize] = pack(&sum);
            let mut prod = vec![0u32; 2 * r as usize - 1];
            for (i, &x) in ca.iter().enumerate() {
                for (j, &y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut red = zp_poly_rem(&prod, modulus, p);
            red.resize(r as usize, 0);
            mul[(a * q + b) as usize] = pack(&red);
        }
    }
    for a in 1..q {
        for b in 1..q {
            if mul[(a * q + b) as usize] == 1 {
                inv[a as usize] = b;
                break;
            }
        }
    }
    Tables { add, mul, neg, inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod3_addition() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.add(FqElem(2), FqElem(2)), FqElem(1));
    }

    #[test]
    fn gf4_x_squared_is_x_plus_one() {
        let f = Field::with_order(4).unwrap();
        let x = f.from_residues(&[0, 1]).unwrap();
        let x_plus_1 = f.from_residues(&[1, 1]).unwrap();
        assert_eq!(f.mul(x, x), x_plus_1);
    }

    #[test]
    fn inverse_of_one_and_zero() {
        for q in [2, 3, 4, 5, 8, 9, 25, 49, 64] {
            let f = Field::with_order(q).unwrap();
            assert_eq!(f.inv(f.one()).unwrap(), f.one());
            assert!(matches!(f.inv(f.zero()), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for &(p, _, m) in DEFAULT_MODULI {
            assert!(is_irreducible(p, m), "{p} {m:?}");
        }
        assert!(!is_irreducible(2, &[1, 0, 1]));
        assert!(Field::new(2, 2, Some(vec![1, 0, 1])).is_err());
    }

    #[test]
    fn field_axioms_small_fields() {
        for q in [2, 3, 4, 7, 8, 9] {
            let f = Field::with_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(Field::prime(4).is_err());
        assert!(Field::with_order(6).is_err());
    }

    #[test]
    fn elem_text_round_trip() {
        let f = Field::with_order(9).unwrap();
        for a in f.elements() {
            assert_eq!(f.parse_elem(&f.fmt_elem(a)).unwrap(), a);
        }
    }
}
