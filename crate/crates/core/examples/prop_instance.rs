//! Exact measure of the points of the unit ball where the flowed lattice of
//! `(x, x^2)` has a short vector, against the bound `6 e^12 eps^(1/2)`.

use ffdirichlet::algebra::Field;
use ffdirichlet::dirichlet::Epsilon;
use ffdirichlet::goodness::probe::curve_weights;
use ffdirichlet::goodness::{prop_instance_check, PolyMap, SymbolicReal};
use ffdirichlet::laurent::Ball;
use num_rational::Ratio;

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(2)?;
    let map = PolyMap::moment_curve(&field, 2);
    let ball = Ball::unit(&field);
    let eps = Epsilon::new(3)?;
    let c_tilde = SymbolicReal::parse("6*e^12")?;
    for norm in 4..=8 {
        for t in curve_weights(2, norm) {
            let r = prop_instance_check(&map, &ball, &t, eps, &c_tilde, Ratio::new(1, 2), 1 << 24)?;
            let margin = r.margin.map_or("inf".to_string(), |m| format!("{m:.3}"));
            println!("t = {:<8} lhs = {:<10} leaves = {:<7} margin = {margin}", t.to_string(), r.lhs.to_string(), r.leaves);
        }
    }
    Ok(())
}
