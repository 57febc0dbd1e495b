use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dirichlet::Epsilon;
use crate::error::{Error, Result};

/// A positive real of the form `coef * e^exp` with rational `coef` and `exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicReal {
    coef: Ratio<i128>,
    exp: Ratio<i64>,
}

impl SymbolicReal {
    pub fn new(coef: Ratio<i128>, exp: Ratio<i64>) -> Result<SymbolicReal> {
        if !coef.is_positive() {
            return Err(Error::Domain(format!("expected a positive coefficient, got {coef}")));
        }
        Ok(SymbolicReal { coef, exp })
    }

    pub fn one() -> SymbolicReal {
        SymbolicReal { coef: Ratio::one(), exp: Ratio::zero() }
    }

    pub fn rational(r: Ratio<i64>) -> Result<SymbolicReal> {
        SymbolicReal::new(Ratio::new(*r.numer() as i128, *r.denom() as i128), Ratio::zero())
    }

    pub fn integer(n: i64) -> Result<SymbolicReal> {
        SymbolicReal::rational(Ratio::from_integer(n))
    }

    /// `e^k`.
    pub fn e_power(k: Ratio<i64>) -> SymbolicReal {
        SymbolicReal { coef: Ratio::one(), exp: k }
    }

    pub fn coef(&self) -> Ratio<i128> {
        self.coef
    }

    pub fn exp(&self) -> Ratio<i64> {
        self.exp
    }

    pub fn mul(&self, other: &SymbolicReal) -> SymbolicReal {
        SymbolicReal { coef: self.coef * other.coef, exp: self.exp + other.exp }
    }

    pub fn recip(&self) -> SymbolicReal {
        SymbolicReal { coef: self.coef.recip(), exp: -self.exp }
    }

    pub fn div(&self, other: &SymbolicReal) -> SymbolicReal {
        self.mul(&other.recip())
    }

    pub fn powi(&self, k: i32) -> SymbolicReal {
        SymbolicReal { coef: self.coef.pow(k), exp: self.exp * Ratio::from_integer(k as i64) }
    }

    /// `self^r`, when the coefficient has an exact rational root.
    pub fn pow(&self, r: Ratio<i64>) -> Option<SymbolicReal> {
        let (a, b) = (*r.numer(), *r.denom());
        let root = |n: i128| integer_root(n, b as u32);
        let base = Ratio::new(root(*self.coef.numer())?, root(*self.coef.denom())?);
        let a32 = i32::try_from(a).ok()?;
        Some(SymbolicReal { coef: base.pow(a32), exp: self.exp * r })
    }

    pub fn ln(&self) -> f64 {
        (*self.coef.numer() as f64).ln() - (*self.coef.denom() as f64).ln() + ratio_f64(self.exp)
    }

    pub fn to_f64(&self) -> f64 {
        *self.coef.numer() as f64 / *self.coef.denom() as f64 * ratio_f64(self.exp).exp()
    }

    /// Parse `a`, `a/b`, `e^k`, `a*e^k` and `x/(y)` where `x`, `y` are
    /// products of such factors.
    pub fn parse(s: &str) -> Result<SymbolicReal> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once("/(") {
            let den = den.strip_suffix(')').ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
            return Ok(SymbolicReal::parse(num)?.div(&SymbolicReal::parse(den)?));
        }
        if let Some(den) = s.strip_prefix("1/e^") {
            return Ok(SymbolicReal::e_power(-parse_ratio(den)?));
        }
        let mut out = SymbolicReal::one();
        for factor in s.split('*') {
            let factor = factor.trim();
            let f = if factor == "e" {
                SymbolicReal::e_power(Ratio::one())
            } else if let Some(k) = factor.strip_prefix("e^") {
                SymbolicReal::e_power(parse_ratio(k.trim_matches(|c| c == '(' || c == ')'))?)
            } else {
                let r = parse_ratio(factor)?;
                SymbolicReal::new(Ratio::new(*r.numer() as i128, *r.denom() as i128), Ratio::zero())?
            };
            out = out.mul(&f);
        }
        Ok(out)
    }
}

fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn integer_root(n: i128, k: u32) -> Option<i128> {
    if n < 0 {
        return None;
    }
    if k == 1 || n < 2 {
        return Some(n);
    }
    let guess = (n as f64).powf(1.0 / k as f64).round() as i128;
    (guess.saturating_sub(1)..=guess + 1).find(|r| *r >= 0 && r.checked_pow(k) == Some(n))
}

/// Parse `a` or `a/b`.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected a rational a/b, got {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(a, b))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn fmt_exp(k: Ratio<i64>) -> String {
    if k.is_integer() {
        if k == Ratio::one() {
            "e".into()
        } else {
            format!("e^{k}")
        }
    } else {
        format!("e^({k})")
    }
}

impl fmt::Display for SymbolicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = Vec::new();
        let mut den = Vec::new();
        if !self.coef.numer().is_one() {
            num.push(self.coef.numer().to_string());
        }
        if !self.coef.denom().is_one() {
            den.push(self.coef.denom().to_string());
        }
        if self.exp.is_positive() {
            num.push(fmt_exp(self.exp));
        } else if self.exp.is_negative() {
            den.push(fmt_exp(-self.exp));
        }
        let num = if num.is_empty() { "1".to_string() } else { num.join("*") };
        match den.len() {
            0 => f.write_str(&num),
            1 => write!(f, "{num}/{}", den[0]),
            _ => write!(f, "{num}/({})", den.join("*")),
        }
    }
}

impl Serialize for SymbolicReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parameters of a (C, alpha)-good, D-Federer setting together with the
/// radius `rho` and covering constant `N_X` of the nondivergence bound.
#[derive(Clone, Debug, Serialize)]
pub struct GoodnessParams {
    #[serde(serialize_with = "ser_ratio")]
    pub c: Ratio<i64>,
    #[serde(serialize_with = "ser_ratio")]
    pub alpha: Ratio<i64>,
    pub d: SymbolicReal,
    pub rho: SymbolicReal,
    pub n_x: u64,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl GoodnessParams {
    /// `rho = 1`, `N_X = 1`.
    pub fn new(c: Ratio<i64>, alpha: Ratio<i64>, d: SymbolicReal) -> Result<GoodnessParams> {
        if !c.is_positive() || !alpha.is_positive() {
            return Err(Error::Domain(format!("C = {c} and alpha = {alpha} must be positive")));
        }
        Ok(GoodnessParams { c, alpha, d, rho: SymbolicReal::one(), n_x: 1 })
    }

    /// The setting of the curve `(x, x^2)`: C = 2, alpha = 1/2, D = e^2.
    pub fn quadratic_curve() -> GoodnessParams {
        GoodnessParams::new(Ratio::from_integer(2), Ratio::new(1, 2), SymbolicReal::e_power(Ratio::from_integer(2)))
            .expect("positive constants")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Epsilon0 {
    pub c_tilde: SymbolicReal,
    pub eps0: SymbolicReal,
    pub eps0_f64: f64,
}

/// `C~ = (n+1) C D^(2(n+1))` and `eps0 = C~^(-1/alpha)`.
pub fn epsilon0(n: u32, c: Ratio<i64>, alpha: Ratio<i64>, d: &SymbolicReal) -> Result<Epsilon0> {
    let c = SymbolicReal::rational(c)?;
    let c_tilde = SymbolicReal::integer(n as i64 + 1)?.mul(&c).mul(&d.powi(2 * (n as i32 + 1)));
    epsilon0_from(&c_tilde, alpha)
}

/// `eps0 = C~^(-1/alpha)` for a given `C~`.
pub fn epsilon0_from(c_tilde: &SymbolicReal, alpha: Ratio<i64>) -> Result<Epsilon0> {
    if !alpha.is_positive() {
        return Err(Error::Domain(format!("alpha = {alpha} must be positive")));
    }
    let eps0 = c_tilde
        .pow(-alpha.recip())
        .ok_or_else(|| Error::Domain(format!("{c_tilde} has no exact power {}", -alpha.recip())))?;
    Ok(Epsilon0 { c_tilde: *c_tilde, eps0, eps0_f64: (-c_tilde.ln() / ratio_f64(alpha)).exp() })
}

/// The coefficient `m C (N_X D^2)^m (eps/rho)^alpha`.
pub fn nondivergence_bound(m: u32, params: &GoodnessParams, eps: Epsilon) -> Result<SymbolicReal> {
    let e = SymbolicReal::e_power(Ratio::from_integer(eps.log()));
    let ratio = e.div(&params.rho);
    if ratio.ln() > 0.0 {
        return Err(Error::EpsAboveRho);
    }
    let scaled = ratio
        .pow(params.alpha)
        .ok_or_else(|| Error::Domain(format!("({ratio})^{} has no exact form", params.alpha)))?;
    let nd2 = SymbolicReal::integer(params.n_x as i64)?.mul(&params.d.powi(2));
    Ok(SymbolicReal::integer(m as i64)?
        .mul(&SymbolicReal::rational(params.c)?)
        .mul(&nd2.powi(m as i32))
        .mul(&scaled))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: i64) -> SymbolicReal {
        SymbolicReal::e_power(Ratio::from_integer(k))
    }

    #[test]
    fn curve_constants() {
        let r = epsilon0(2, Ratio::from_integer(2), Ratio::new(1, 2), &e(2)).unwrap();
        assert_eq!(r.c_tilde.to_string(), "6*e^12");
        assert_eq!(r.eps0.to_string(), "1/(36*e^24)");
        let expect = 1.0 / (36.0 * 24f64.exp());
        assert!(((r.eps0_f64 - expect) / expect).abs() < 1e-12);
        assert!(((r.eps0.to_f64() - expect) / expect).abs() < 1e-12);
    }

    #[test]
    fn trivial_thresholds() {
        assert_eq!(epsilon0_from(&SymbolicReal::one(), Ratio::new(1, 2)).unwrap().eps0.to_string(), "1");
        assert_eq!(epsilon0_from(&e(3), Ratio::one()).unwrap().eps0.to_string(), "1/e^3");
        assert!(epsilon0_from(&SymbolicReal::integer(2).unwrap(), Ratio::new(1, 2)).is_ok());
        assert!(epsilon0_from(&SymbolicReal::integer(2).unwrap(), Ratio::new(2, 1)).is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["1", "6*e^12", "1/(36*e^24)", "1/e^3", "e", "e^2", "2/3", "5*e^(1/2)", "3/(2*e^4)"] {
            let v = SymbolicReal::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn exact_roots() {
        let v = SymbolicReal::parse("1/(36*e^24)").unwrap();
        assert_eq!(v.pow(Ratio::new(-1, 2)).unwrap().to_string(), "6*e^12");
        assert!(SymbolicReal::integer(8).unwrap().pow(Ratio::new(1, 2)).is_none());
        assert_eq!(SymbolicReal::integer(8).unwrap().pow(Ratio::new(2, 3)).unwrap().to_string(), "4");
    }

    #[test]
    fn bound_examples() {
        let p = GoodnessParams::new(Ratio::one(), Ratio::one(), SymbolicReal::one()).unwrap();
        let eps = Epsilon::new(1).unwrap();
        assert_eq!(nondivergence_bound(1, &p, eps).unwrap().to_string(), "1/e");
        let p = GoodnessParams::quadratic_curve();
        let b = nondivergence_bound(3, &p, Epsilon::new(4).unwrap()).unwrap();
        // 3 * 2 * e^12 * e^-2
        assert_eq!(b.to_string(), "6*e^10");
        let mut far = GoodnessParams::quadratic_curve();
        far.rho = e(-2);
        assert!(matches!(nondivergence_bound(3, &far, Epsilon::new(1).unwrap()), Err(Error::EpsAboveRho)));
        far.rho = e(-1);
        assert_eq!(nondivergence_bound(1, &far, Epsilon::new(1).unwrap()).unwrap().to_string(), "2*e^4");
    }
}
