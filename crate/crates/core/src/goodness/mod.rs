//! Exact checks of the hypotheses behind quantitative nondivergence for
//! polynomial curves: (C, alpha)-good bounds, Federer ratios, nonplanarity
//! margins, the constants they feed, and desk-scale measure probes.

pub mod constants;
pub mod distribution;
pub mod nonplanar;
pub mod probe;

use std::fmt;

use crate::algebra::Field;
use crate::dirichlet::{LinearFormsY, WeightVector};
use crate::error::{Error, Result};
use crate::algebra::FqElem;
use crate::laurent::{enumerate_cylinders, Ball, Cylinder, Laurent};

pub use constants::{epsilon0, nondivergence_bound, GoodnessParams, SymbolicReal};
pub use distribution::{
    cg_good_check, federer_ratio, federer_report, sublevel_measure, sup_norm_log, value_distribution, GoodReport,
    SupNorm, ValueDistribution,
};
pub use nonplanar::{nonplanar_margin, MarginReport};
pub use probe::{di_measure_probe, prop_instance_check, ProbeCurve, PropInstanceReport};

/// A polynomial in one variable `x` with coefficients in F_q((1/T)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Laurent>,
}

impl UniPoly {
    /// Coefficients in ascending powers of `x`.
    pub fn new(field: &Field, coeffs: Vec<Laurent>) -> UniPoly {
        let mut p = UniPoly { field: field.clone(), coeffs };
        while p.coeffs.last().is_some_and(Laurent::is_exact_zero) {
            p.coeffs.pop();
        }
        p
    }

    /// `x^k`.
    pub fn power(field: &Field, k: usize) -> UniPoly {
        let mut coeffs = vec![Laurent::zero(field); k + 1];
        coeffs[k] = Laurent::one(field);
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn constant(c: Laurent) -> UniPoly {
        let f = c.field().clone();
        UniPoly::new(&f, vec![c])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    /// True when every coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Laurent) -> Laurent {
        let mut acc = Laurent::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Laurent::zero(&self.field);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        UniPoly::new(&self.field, coeffs)
    }

    pub fn scale(&self, c: &Laurent) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Terms joined by `+`: `x`, `x^k`, `[c]*x^k` or `[c]` with `c` a
    /// Laurent literal.
    pub fn parse(field: &Field, s: &str) -> Result<UniPoly> {
        let mut out = UniPoly::new(field, Vec::new());
        let mut depth = 0;
        let mut start = 0;
        let mut pieces = Vec::new();
        for (i, ch) in s.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                '+' if depth == 0 => {
                    pieces.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&s[start..]);
        for piece in pieces {
            let piece = piece.trim();
            let (coef, mono) = match piece.strip_prefix('[') {
                Some(rest) => {
                    let (c, tail) =
                        rest.split_once(']').ok_or_else(|| Error::Parse(format!("unclosed bracket in {piece:?}")))?;
                    let tail = tail.trim().trim_start_matches('*').trim();
                    (Laurent::parse(field, c)?, tail)
                }
                None => (Laurent::one(field), piece),
            };
            let k = match mono {
                "" => 0,
                "x" => 1,
                m => m
                    .strip_prefix("x^")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad monomial {m:?}")))?,
            };
            out = out.add(&UniPoly::power(field, k).scale(&coef));
        }
        Ok(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_exact_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let coef = if *c == Laurent::one(&self.field) && k > 0 { String::new() } else { format!("[{c}]") };
            let sep = if !coef.is_empty() && !mono.is_empty() { "*" } else { "" };
            parts.push(format!("{coef}{sep}{mono}"));
        }
        if parts.is_empty() {
            return f.write_str("[0]");
        }
        f.write_str(&parts.join("+"))
    }
}

/// A polynomial map `x -> (f_1(x), ..., f_n(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    field: Field,
    components: Vec<UniPoly>,
}

impl PolyMap {
    pub fn new(field: &Field, components: Vec<UniPoly>) -> Result<PolyMap> {
        if components.is_empty() {
            return Err(Error::Domain("a map needs at least one component".into()));
        }
        if components.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(PolyMap { field: field.clone(), components })
    }

    /// The curve `(x, x^2, ..., x^n)`.
    pub fn moment_curve(field: &Field, n: usize) -> PolyMap {
        PolyMap { field: field.clone(), components: (1..=n).map(|k| UniPoly::power(field, k)).collect() }
    }

    /// Components separated by `,`, e.g. `x, x^2`.
    pub fn parse(field: &Field, s: &str) -> Result<PolyMap> {
        let comps = s.split(',').map(|c| UniPoly::parse(field, c)).collect::<Result<Vec<_>>>()?;
        PolyMap::new(field, comps)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn eval(&self, x: &Laurent) -> Vec<Laurent> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    /// `f(x)` as a single linear form in `n` variables.
    pub fn forms_at(&self, x: &Laurent) -> LinearFormsY {
        LinearFormsY::new(&self.field, 1, self.n(), self.eval(x)).expect("shape fits")
    }

    /// `c_0 + c_1 f_1 + ... + c_n f_n`.
    pub fn combination(&self, c: &[Laurent]) -> UniPoly {
        assert_eq!(c.len(), self.n() + 1);
        let mut out = UniPoly::constant(c[0].clone());
        for (ci, fi) in c[1..].iter().zip(&self.components) {
            out = out.add(&fi.scale(ci));
        }
        out
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(UniPoly::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Every nonzero `c_0 + c_1 x + ... + c_d x^d` whose coefficients are
/// polynomials in `T` of degree at most `coef_deg`, in mixed-radix order.
pub fn coefficient_grid(field: &Field, x_deg: usize, coef_deg: usize) -> Vec<UniPoly> {
    let q = field.q() as u64;
    let digits = ((x_deg + 1) * (coef_deg + 1)) as u32;
    (1..q.pow(digits))
        .map(|code| {
            let mut rest = code;
            let coeffs = (0..=x_deg)
                .map(|_| {
                    let terms: Vec<(i64, FqElem)> = (0..=coef_deg as i64)
                        .map(|k| {
                            let c = FqElem((rest % q) as u32);
                            rest /= q;
                            (k, c)
                        })
                        .collect();
                    Laurent::from_terms(field, &terms, None)
                })
                .collect();
            UniPoly::new(field, coeffs)
        })
        .collect()
}

/// All closed balls of radius `e^k` inside `ball`, for each `k` in turn.
pub fn sub_balls(ball: &Ball, radius_logs: &[i64], budget: u128) -> Result<Vec<Ball>> {
    let mut out = Vec::new();
    for &k in radius_logs {
        out.extend(enumerate_cylinders(ball, -k, budget)?.iter().map(Cylinder::ball));
    }
    Ok(out)
}

/// Weights `(t_0, t_1, ..., t_n)` with `t_0 = t_1 + ... + t_n` from the
/// variable weights `(t_1, ..., t_n)`, as a one-form weight vector.
pub fn flow_weights(variable_weights: &[i64]) -> Result<WeightVector> {
    let mut t = vec![variable_weights.iter().sum()];
    t.extend_from_slice(variable_weights);
    WeightVector::new(1, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_and_text() {
        let f = Field::prime(2).unwrap();
        let p = UniPoly::parse(&f, "x^2+[T]*x+[T^-1]").unwrap();
        assert_eq!(p.to_string(), "x^2+[T]*x+[T^-1]");
        let x = Laurent::parse(&f, "T^-1").unwrap();
        assert_eq!(p.eval(&x), Laurent::parse(&f, "1+T^-1+T^-2").unwrap());
        let map = PolyMap::parse(&f, "x, x^2").unwrap();
        assert_eq!(map, PolyMap::moment_curve(&f, 2));
    }

    #[test]
    fn combinations() {
        let f = Field::prime(3).unwrap();
        let map = PolyMap::moment_curve(&f, 2);
        let c: Vec<Laurent> = ["1", "0", "2"].iter().map(|s| Laurent::parse(&f, s).unwrap()).collect();
        assert_eq!(map.combination(&c), UniPoly::parse(&f, "[2]*x^2+[1]").unwrap());
        let planar = PolyMap::parse(&f, "x, x").unwrap();
        let c: Vec<Laurent> = ["0", "1", "2"].iter().map(|s| Laurent::parse(&f, s).unwrap()).collect();
        assert!(planar.combination(&c).is_zero());
    }

    #[test]
    fn weight_conversion() {
        let t = flow_weights(&[1, 1]).unwrap();
        assert_eq!(t.as_slice(), &[2, 1, 1]);
        assert_eq!((t.m(), t.n()), (1, 2));
    }

    #[test]
    fn grids() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(coefficient_grid(&f2, 2, 1).len(), 63);
        assert_eq!(coefficient_grid(&f3, 2, 1).len(), 728);
        assert_eq!(coefficient_grid(&f2, 1, 0)[0].to_string(), "[1]");
        let inner = Ball::parse(&f2, "B(0; e^0)").unwrap();
        let balls = sub_balls(&inner, &[-1, -2, -3, -4], 1 << 10).unwrap();
        assert_eq!(balls.len(), 1 + 2 + 4 + 8);
        assert!(balls.iter().all(|b| inner.contains_ball(b)));
    }
}
