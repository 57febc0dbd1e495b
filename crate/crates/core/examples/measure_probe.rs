//! Fraction of the unit ball where the improved system along (x, x^2) stays
//! solvable for every t up to a bound.

use ffdirichlet::algebra::Field;
use ffdirichlet::dirichlet::Epsilon;
use ffdirichlet::goodness::{di_measure_probe, PolyMap};
use ffdirichlet::laurent::Ball;

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(2)?;
    let map = PolyMap::moment_curve(&field, 2);
    let ball = Ball::unit(&field);
    for s in [1, 3] {
        let eps = Epsilon::new(s)?;
        let bounds: Vec<i64> = (s + 1..=s + 5).collect();
        let curve = di_measure_probe(&map, &ball, eps, &bounds, 10, 1 << 24)?;
        println!("eps = {eps}, non-increasing: {}", curve.is_non_increasing());
        print!("{}", curve.to_csv());
    }
    Ok(())
}
