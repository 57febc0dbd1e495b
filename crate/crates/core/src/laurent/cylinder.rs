use super::ball::Ball;
use super::measure::ExactMeasure;
use super::series::Laurent;
use crate::algebra::FqElem;
use crate::error::{Error, Result};

/// The set of `x` agreeing with `rep` at every exponent `>= -(depth-1)`,
/// i.e. the closed ball `B[rep; e^-depth]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    rep: Laurent,
    depth: i64,
}

impl Cylinder {
    /// The ball itself as a single cylinder.
    pub fn of_ball(ball: &Ball) -> Cylinder {
        Cylinder { rep: ball.center().clone(), depth: -ball.radius_log() }
    }

    pub fn rep(&self) -> &Laurent {
        &self.rep
    }

    pub fn depth(&self) -> i64 {
        self.depth
    }

    pub fn ball(&self) -> Ball {
        Ball::closed(&self.rep, -self.depth).expect("exact representative")
    }

    pub fn measure(&self) -> ExactMeasure {
        ExactMeasure::q_power(self.rep.field().q(), -self.depth)
    }

    /// Every point of the cylinder, as a series whose uncertain tail starts
    /// just below the fixed digits.
    pub fn as_point(&self) -> Laurent {
        self.rep.with_prec(self.depth - 1)
    }

    /// The `q` sub-cylinders one level deeper, ordered by the new digit.
    pub fn children(&self) -> Vec<Cylinder> {
        let f = self.rep.field();
        f.elements()
            .map(|c| Cylinder {
                rep: &self.rep + &Laurent::monomial(f, c, -self.depth),
                depth: self.depth + 1,
            })
            .collect()
    }
}

/// Number of depth-`depth` cylinders inside `ball`: `q^(depth + k)`.
pub fn cylinder_count(ball: &Ball, depth: i64) -> Option<u128> {
    let n = depth + ball.radius_log();
    if n < 0 {
        return Some(0);
    }
    (ball.field().q() as u128).checked_pow(n as u32)
}

/// All depth-`depth` cylinders of `ball`, in mixed-radix order with the
/// highest free digit most significant.
pub fn enumerate_cylinders(ball: &Ball, depth: i64, budget: u128) -> Result<Vec<Cylinder>> {
    if depth < -ball.radius_log() {
        return Err(Error::Domain(format!("depth {depth} is coarser than {ball}")));
    }
    let needed = cylinder_count(ball, depth).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let f = ball.field();
    let q = f.q() as u128;
    let free: Vec<i64> = (-(depth - 1)..=ball.radius_log()).rev().collect();
    let mut out = Vec::with_capacity(needed as usize);
    for code in 0..needed {
        let mut rest = code;
        let mut terms = Vec::with_capacity(free.len());
        for &k in free.iter().rev() {
            terms.push((k, FqElem((rest % q) as u32)));
            rest /= q;
        }
        let offset = Laurent::from_terms(f, &terms, None);
        out.push(Cylinder { rep: ball.center() + &offset, depth });
    }
    Ok(out)
}
