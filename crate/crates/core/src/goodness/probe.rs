use num_rational::Ratio;
use serde::Serialize;

use super::constants::SymbolicReal;
use super::PolyMap;
use crate::dirichlet::{di_check, weight_vectors, Epsilon, WeightVector};
use crate::error::{Error, Result};
use crate::lattice::{default_guard, flow_tau, lambda1_log};
use crate::laurent::{enumerate_cylinders, Ball, Cylinder, ExactMeasure};

#[derive(Clone, Debug, Serialize)]
pub struct PropInstanceReport {
    pub map: String,
    pub ball: String,
    pub t: WeightVector,
    pub eps: String,
    pub c_tilde: SymbolicReal,
    pub alpha: String,
    /// `nu({x in B : lambda_1 < eps})`.
    pub lhs: ExactMeasure,
    pub rhs_ln: f64,
    /// `rhs_ln - ln(lhs)`; absent when the left side is zero.
    pub margin: Option<f64>,
    pub pass: bool,
    pub leaves: u64,
}

/// Exact measure of the points of `ball` whose flowed lattice leaves
/// `K_eps`, against `C~ eps^alpha nu(B)`.
///
/// Cylinders are refined until the shortest vector length is certified for
/// the whole cylinder.
pub fn prop_instance_check(
    f: &PolyMap,
    ball: &Ball,
    t: &WeightVector,
    eps: Epsilon,
    c_tilde: &SymbolicReal,
    alpha: Ratio<i64>,
    budget: u64,
) -> Result<PropInstanceReport> {
    if t.m() != 1 || t.n() != f.n() {
        return Err(Error::Domain(format!("weight vector {t} does not fit a map with {} components", f.n())));
    }
    let t_max = (0..t.n()).map(|j| t.col(j)).max().unwrap_or(0);
    let q = ball.field().q();
    let mut lhs = ExactMeasure::zero(q);
    let mut nodes = 0u64;
    let mut leaves = 0u64;
    let mut stack = vec![Cylinder::of_ball(ball)];
    while let Some(cyl) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            return Err(Error::BudgetExceeded { needed: nodes as u128, budget: budget as u128 });
        }
        let basis = match flow_tau(&f.forms_at(&cyl.as_point()), t) {
            Ok(b) => b,
            Err(Error::PrecisionExhausted(_)) => {
                stack.extend(cyl.children());
                continue;
            }
            Err(e) => return Err(e),
        };
        let prec = basis.prec().unwrap_or(i64::MAX);
        if prec < t_max {
            stack.extend(cyl.children());
            continue;
        }
        match lambda1_log(&basis, default_guard(t).min(prec)) {
            Ok(l) => {
                leaves += 1;
                if l < eps.log() {
                    lhs = lhs + cyl.measure();
                }
            }
            Err(Error::PrecisionExhausted(_) | Error::GuardTooSmall { .. }) => stack.extend(cyl.children()),
            Err(e) => return Err(e),
        }
    }
    let a = *alpha.numer() as f64 / *alpha.denom() as f64;
    let rhs_ln = c_tilde.ln() + a * eps.log() as f64 + ball.measure().ln();
    let margin = (!lhs.is_zero()).then(|| rhs_ln - lhs.ln());
    Ok(PropInstanceReport {
        map: f.to_string(),
        ball: ball.to_string(),
        t: t.clone(),
        eps: eps.to_string(),
        c_tilde: *c_tilde,
        alpha: alpha.to_string(),
        lhs,
        rhs_ln,
        margin,
        pass: margin.is_none_or(|m| m >= -super::distribution::LOG_TOLERANCE),
        leaves,
    })
}

/// Weight vectors `(t_1 + ... + t_n; t_1, ..., t_n)` with `||t|| = norm`.
pub fn curve_weights(n: usize, norm: i64) -> Vec<WeightVector> {
    weight_vectors(1, n, norm).filter(|t| t.norm() == norm).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbePoint {
    pub bound: i64,
    pub fraction: ExactMeasure,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeCurve {
    pub map: String,
    pub ball: String,
    pub eps: String,
    pub depth: i64,
    pub points: Vec<ProbePoint>,
}

impl ProbeCurve {
    pub fn is_non_increasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].fraction <= w[0].fraction)
    }

    /// `S,count,depth,fraction` rows under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("S,count,depth,fraction\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{}\n",
                p.bound,
                p.fraction.count(),
                p.fraction.depth(),
                p.fraction
            ));
        }
        out
    }
}

/// For each bound `S`, the fraction of depth-`depth` cylinders of `ball`
/// whose representative `x` makes the improved system with `Y = f(x)`
/// solvable for every weight vector with `s+1 <= ||t|| <= S`.
pub fn di_measure_probe(f: &PolyMap, ball: &Ball, eps: Epsilon, bounds: &[i64], depth: i64, budget: u128) -> Result<ProbeCurve> {
    if bounds.is_empty() || bounds.windows(2).any(|w| w[0] >= w[1]) || bounds[0] < eps.s() + 1 {
        return Err(Error::Domain(format!("bounds must increase from at least {}", eps.s() + 1)));
    }
    let top = *bounds.last().expect("nonempty");
    let by_norm: Vec<Vec<WeightVector>> = (eps.s() + 1..=top).map(|s| curve_weights(f.n(), s)).collect();
    let cylinders = enumerate_cylinders(ball, depth, budget)?;
    // survived[i]: number of points solvable for every norm up to s+1+i
    let mut survived = vec![0u128; by_norm.len()];
    for cyl in &cylinders {
        let y = f.forms_at(cyl.rep());
        for (i, ts) in by_norm.iter().enumerate() {
            let mut ok = true;
            for t in ts {
                if di_check(&y, t, eps, budget)?.is_none() {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
            survived[i] += 1;
        }
    }
    let q = ball.field().q();
    let scale = depth + ball.radius_log();
    let points = bounds
        .iter()
        .map(|&s| ProbePoint {
            bound: s,
            fraction: ExactMeasure::new(q, survived[(s - eps.s() - 1) as usize], scale),
        })
        .collect();
    Ok(ProbeCurve { map: f.to_string(), ball: ball.to_string(), eps: eps.to_string(), depth, points })
}
