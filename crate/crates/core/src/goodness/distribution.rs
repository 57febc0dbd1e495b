use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use super::constants::SymbolicReal;
use super::UniPoly;
use crate::dirichlet::Epsilon;
use crate::error::{Error, Result};
use crate::laurent::{Ball, Cylinder, ExactMeasure};

/// Exact distribution of `log |phi(x)|` over a ball, with every value at or
/// below `cutoff` lumped together.
#[derive(Clone, Debug)]
pub struct ValueDistribution {
    pub ball: Ball,
    pub cutoff: i64,
    /// Measure of `{x : |phi(x)| = e^v}` for each `v` that was resolved.
    pub exact: BTreeMap<i64, ExactMeasure>,
    /// Measure of the part where `|phi(x)| <= e^cutoff` (not resolved further).
    pub lumped: ExactMeasure,
    pub nodes: u64,
}

impl ValueDistribution {
    /// `nu({x in B : |phi(x)| <= e^k})` for `k >= cutoff`.
    pub fn measure_at_most(&self, k: i64) -> ExactMeasure {
        assert!(k >= self.cutoff, "threshold e^{k} below the resolved range");
        self.exact.range(..=k).map(|(_, m)| *m).fold(self.lumped, |a, b| a + b)
    }

    pub fn sup(&self) -> SupNorm {
        let top = self.exact.keys().next_back().copied();
        match top {
            Some(v) if v >= self.cutoff || self.lumped.is_zero() => SupNorm::Exact(v),
            _ => SupNorm::AtMost(self.cutoff),
        }
    }
}

/// Refine cylinders of `ball` until `|phi|` is certified on each one, or
/// certified to be at most `e^cutoff`. `budget` caps the number of visited
/// cylinders.
pub fn value_distribution(phi: &UniPoly, ball: &Ball, cutoff: i64, budget: u64) -> Result<ValueDistribution> {
    let q = ball.field().q();
    let mut exact: BTreeMap<i64, ExactMeasure> = BTreeMap::new();
    let mut lumped = ExactMeasure::zero(q);
    let mut nodes = 0u64;
    let mut stack = vec![Cylinder::of_ball(ball)];
    while let Some(cyl) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            return Err(Error::BudgetExceeded { needed: nodes as u128, budget: budget as u128 });
        }
        let v = phi.eval(&cyl.as_point());
        match v.top() {
            Some(t) if t > cutoff => {
                let e = exact.entry(t).or_insert_with(|| ExactMeasure::zero(q));
                *e = *e + cyl.measure();
            }
            Some(_) => lumped = lumped + cyl.measure(),
            None => {
                let bound = v.lognorm_upper().finite().unwrap_or(i64::MIN);
                if bound <= cutoff {
                    lumped = lumped + cyl.measure();
                } else {
                    stack.extend(cyl.children());
                }
            }
        }
    }
    Ok(ValueDistribution { ball: ball.clone(), cutoff, exact, lumped, nodes })
}

/// `nu({x in B : |phi(x)| < eps})`.
pub fn sublevel_measure(phi: &UniPoly, ball: &Ball, eps: Epsilon, budget: u64) -> Result<ExactMeasure> {
    let k = eps.log() - 1;
    Ok(value_distribution(phi, ball, k, budget)?.measure_at_most(k))
}

/// Sup of `|phi|` over a ball as a log, exact when it is above the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupNorm {
    Exact(i64),
    AtMost(i64),
}

impl SupNorm {
    /// A log upper bound on the sup.
    pub fn upper(self) -> i64 {
        match self {
            SupNorm::Exact(v) | SupNorm::AtMost(v) => v,
        }
    }
}

impl fmt::Display for SupNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupNorm::Exact(v) => write!(f, "e^{v}"),
            SupNorm::AtMost(v) => write!(f, "<= e^{v}"),
        }
    }
}

impl Serialize for SupNorm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Branch and bound for `sup_B |phi|`: cylinders whose value bound cannot
/// beat both the best certified value and `e^-floor` are dropped.
pub fn sup_norm_log(phi: &UniPoly, ball: &Ball, floor: i64, budget: u64) -> Result<SupNorm> {
    let cutoff = -floor;
    let mut best: Option<i64> = None;
    let mut dropped: Option<i64> = None;
    let mut nodes = 0u64;
    let mut stack = vec![Cylinder::of_ball(ball)];
    while let Some(cyl) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            return Err(Error::BudgetExceeded { needed: nodes as u128, budget: budget as u128 });
        }
        let v = phi.eval(&cyl.as_point());
        if let Some(t) = v.top() {
            best = Some(best.map_or(t, |b| b.max(t)));
            continue;
        }
        let Some(bound) = v.lognorm_upper().finite() else { continue };
        let bar = best.unwrap_or(i64::MIN).max(cutoff);
        if bound > bar {
            stack.extend(cyl.children());
        } else if best.is_none_or(|b| bound > b) {
            dropped = Some(dropped.map_or(bound, |d| d.max(bound)));
        }
    }
    Ok(match (best, dropped) {
        (Some(b), None) => SupNorm::Exact(b),
        (Some(b), Some(d)) if b >= d => SupNorm::Exact(b),
        _ => SupNorm::AtMost(cutoff),
    })
}

/// One failed or low-margin instance of the (C, alpha) inequality.
#[derive(Clone, Debug, Serialize)]
pub struct GoodRecord {
    pub phi: String,
    pub ball: String,
    pub eps: String,
    pub sup: SupNorm,
    pub sublevel: ExactMeasure,
    pub lhs_ln: f64,
    pub rhs_ln: f64,
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoodReport {
    pub c: String,
    pub alpha: String,
    pub checks: u64,
    pub vacuous: u64,
    pub violations: Vec<GoodRecord>,
    /// Passing instances whose margin is below `1e-6`.
    pub flagged: Vec<GoodRecord>,
    pub min_margin: Option<f64>,
}

impl GoodReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const LOG_TOLERANCE: f64 = 1e-9;
pub const REVIEW_MARGIN: f64 = 1e-6;

fn ratio_ln(r: Ratio<i64>) -> f64 {
    (*r.numer() as f64).ln() - (*r.denom() as f64).ln()
}

fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Check `nu({|phi| < eps} ∩ B) <= C (eps / ||phi||_B)^alpha nu(B)` for all
/// combinations, comparing natural logs with tolerance `1e-9`.
///
/// Functions identically zero on a ball are counted as vacuous. When the
/// sup is only bounded above, that bound is used, which can only shrink the
/// right-hand side.
pub fn cg_good_check(
    family: &[UniPoly],
    c: Ratio<i64>,
    alpha: Ratio<i64>,
    balls: &[Ball],
    eps_list: &[Epsilon],
    budget: u64,
) -> Result<GoodReport> {
    let s_max = eps_list.iter().map(Epsilon::s).max().ok_or_else(|| Error::Domain("empty epsilon list".into()))?;
    let cutoff = -s_max - 1;
    let (c_ln, a) = (ratio_ln(c), ratio_f64(alpha));
    let mut report = GoodReport {
        c: c.to_string(),
        alpha: alpha.to_string(),
        checks: 0,
        vacuous: 0,
        violations: Vec::new(),
        flagged: Vec::new(),
        min_margin: None,
    };
    for phi in family {
        for ball in balls {
            let dist = value_distribution(phi, ball, cutoff, budget)?;
            if phi.is_zero() {
                report.vacuous += eps_list.len() as u64;
                continue;
            }
            let sup = dist.sup();
            let ball_ln = ball.measure().ln();
            for &eps in eps_list {
                report.checks += 1;
                let sub = dist.measure_at_most(eps.log() - 1);
                let lhs_ln = sub.ln();
                let rhs_ln = c_ln + a * (eps.log() - sup.upper()) as f64 + ball_ln;
                let margin = rhs_ln - lhs_ln;
                report.min_margin = Some(report.min_margin.map_or(margin, |m: f64| m.min(margin)));
                let rec = || GoodRecord {
                    phi: phi.to_string(),
                    ball: ball.to_string(),
                    eps: eps.to_string(),
                    sup,
                    sublevel: sub,
                    lhs_ln,
                    rhs_ln,
                    margin,
                };
                if lhs_ln > rhs_ln + LOG_TOLERANCE {
                    report.violations.push(rec());
                } else if margin < REVIEW_MARGIN {
                    report.flagged.push(rec());
                }
            }
        }
    }
    Ok(report)
}

/// `nu(3^steps B) / nu(B)` with the dilated radius rounded into `e^Z`.
pub fn federer_ratio(ball: &Ball, steps: u32) -> ExactMeasure {
    ball.dilate_by_three(steps).measure().div_q_power(&ball.measure())
}

#[derive(Clone, Debug, Serialize)]
pub struct FedererReport {
    pub q: u32,
    pub steps: u32,
    pub ratio: ExactMeasure,
    pub d: String,
    pub verdict: bool,
    pub note: Option<String>,
}

/// Whether `nu(3^steps B) <= D nu(B)` on the unit ball of F_q((1/T)).
pub fn federer_report(field: &crate::algebra::Field, steps: u32, d: &SymbolicReal) -> FedererReport {
    let ratio = federer_ratio(&Ball::unit(field), steps);
    let verdict = ratio.ln() <= d.ln();
    let note = (!verdict).then(|| {
        format!(
            "ratio {ratio} exceeds D = {d}: the D-Federer property fails for q = {} under the value-group reading of 3B",
            field.q()
        )
    });
    FedererReport { q: field.q(), steps, ratio, d: d.to_string(), verdict, note }
}
