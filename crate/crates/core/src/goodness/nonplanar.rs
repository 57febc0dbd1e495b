use serde::Serialize;

use super::distribution::{sup_norm_log, SupNorm};
use super::PolyMap;
use crate::algebra::FqElem;
use crate::error::{Error, Result};
use crate::laurent::{Ball, Laurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MarginVerdict {
    /// The discrete minimum is a lower bound for the margin over all
    /// normalized coefficient vectors.
    Certified,
    /// Some candidate's sup is too small to exclude nearby smaller values.
    Inconclusive,
    /// A normalized combination vanishes identically.
    Planar,
}

#[derive(Clone, Debug, Serialize)]
pub struct MarginReport {
    pub map: String,
    pub ball: String,
    pub depth: i64,
    pub candidates: u64,
    /// `log max(1, sup_B |f_i|)`.
    pub f_sup_log: i64,
    /// `log` of the smallest sup over candidates.
    pub delta_log: Option<i64>,
    pub witness: Vec<String>,
    pub verdict: MarginVerdict,
    /// Smallest `M >= 0` with `delta e^M >= 1`.
    pub m: Option<i64>,
    /// `n M`.
    pub s: Option<i64>,
}

/// Minimum of `sup_B |c_0 + c_1 f_1 + ... + c_n f_n|` over coefficient
/// vectors with digits at exponents `0, -1, ..., -(depth-1)` and
/// `max |c_i| = 1`.
///
/// Any normalized real vector lies within `e^-depth` of a candidate, which
/// moves the sup by at most `e^-depth F` with `F = max(1, sup |f_i|)`. So the
/// minimum is certified once it exceeds that error.
pub fn nonplanar_margin(f: &PolyMap, ball: &Ball, depth: i64, budget: u64) -> Result<MarginReport> {
    if depth < 1 {
        return Err(Error::Domain(format!("depth must be at least 1, got {depth}")));
    }
    let field = f.field();
    let q = field.q() as u128;
    let slots = f.n() + 1;
    let digits = depth as usize * slots;
    let total = q.checked_pow(digits as u32).filter(|t| *t <= budget as u128).ok_or(Error::BudgetExceeded {
        needed: q.saturating_pow(digits as u32),
        budget: budget as u128,
    })?;
    let sup_budget = budget.max(1 << 16);

    let mut f_sup_log = 0;
    for comp in f.components() {
        match sup_norm_log(comp, ball, depth + 64, sup_budget)? {
            SupNorm::Exact(v) => f_sup_log = f_sup_log.max(v),
            SupNorm::AtMost(_) => {}
        }
    }
    let cutoff = f_sup_log - depth;

    let mut report = MarginReport {
        map: f.to_string(),
        ball: ball.to_string(),
        depth,
        candidates: 0,
        f_sup_log,
        delta_log: None,
        witness: Vec::new(),
        verdict: MarginVerdict::Certified,
        m: None,
        s: None,
    };
    let mut best: Option<SupNorm> = None;
    for code in 0..total {
        let mut rest = code;
        let mut terms = vec![Vec::with_capacity(depth as usize); slots];
        for slot in terms.iter_mut() {
            for k in 0..depth {
                slot.push((-k, FqElem((rest % q) as u32)));
                rest /= q;
            }
        }
        if terms.iter().all(|t| t[0].1 .0 == 0) {
            continue;
        }
        report.candidates += 1;
        let c: Vec<Laurent> = terms.iter().map(|t| Laurent::from_terms(field, t, None)).collect();
        let phi = f.combination(&c);
        if phi.is_zero() {
            report.verdict = MarginVerdict::Planar;
            report.witness = c.iter().map(Laurent::to_string).collect();
            report.delta_log = None;
            return Ok(report);
        }
        let sup = sup_norm_log(&phi, ball, -cutoff, sup_budget)?;
        let smaller = match best {
            None => true,
            Some(b) => sup.upper() < b.upper() || (sup.upper() == b.upper() && matches!(sup, SupNorm::AtMost(_))),
        };
        if smaller {
            best = Some(sup);
            report.witness = c.iter().map(Laurent::to_string).collect();
        }
    }
    match best {
        Some(SupNorm::Exact(v)) if v > cutoff => {
            let m = (-v).max(0);
            report.delta_log = Some(v);
            report.m = Some(m);
            report.s = Some(f.n() as i64 * m);
        }
        Some(b) => {
            report.delta_log = Some(b.upper());
            report.verdict = MarginVerdict::Inconclusive;
        }
        None => report.verdict = MarginVerdict::Inconclusive,
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn linear_map_has_unit_margin() {
        let f = Field::prime(2).unwrap();
        let r = nonplanar_margin(&PolyMap::parse(&f, "x").unwrap(), &Ball::unit(&f), 3, 1 << 20).unwrap();
        assert_eq!(r.verdict, MarginVerdict::Certified);
        assert_eq!((r.delta_log, r.m, r.s), (Some(0), Some(0), Some(0)));
    }

    #[test]
    fn quadratic_curve_margin() {
        let f = Field::prime(2).unwrap();
        let r = nonplanar_margin(&PolyMap::moment_curve(&f, 2), &Ball::unit(&f), 3, 1 << 20).unwrap();
        assert_eq!(r.verdict, MarginVerdict::Certified);
        assert_eq!(r.candidates, 448);
        assert_eq!((r.delta_log, r.m, r.s), (Some(-1), Some(1), Some(2)));
        assert!(r.delta_log.unwrap() >= -2);
    }

    #[test]
    fn planar_map_is_reported() {
        let f = Field::prime(3).unwrap();
        let r = nonplanar_margin(&PolyMap::parse(&f, "x, x").unwrap(), &Ball::unit(&f), 1, 1 << 20).unwrap();
        assert_eq!(r.verdict, MarginVerdict::Planar);
    }

    #[test]
    fn shallow_grid_is_inconclusive() {
        // at depth 1 the candidate x + x^2 has sup e^-1, which does not beat
        // the discretization error e^-1
        let f = Field::prime(2).unwrap();
        let r = nonplanar_margin(&PolyMap::moment_curve(&f, 2), &Ball::unit(&f), 1, 1 << 20).unwrap();
        assert_eq!(r.verdict, MarginVerdict::Inconclusive);
    }

    #[test]
    fn budget_is_enforced() {
        let f = Field::prime(2).unwrap();
        let err = nonplanar_margin(&PolyMap::moment_curve(&f, 2), &Ball::unit(&f), 3, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
