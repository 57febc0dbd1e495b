//! Nonplanarity margin of (x, x^2) and the Federer ratio of Haar measure.

use ffdirichlet::algebra::Field;
use ffdirichlet::goodness::{federer_report, nonplanar_margin, PolyMap, SymbolicReal};
use ffdirichlet::laurent::Ball;

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(2)?;
    let r = nonplanar_margin(&PolyMap::moment_curve(&field, 2), &Ball::unit(&field), 3, 1 << 20)?;
    println!("delta = e^{:?} ({:?}), witness {:?}, M = {:?}, s = {:?}", r.delta_log, r.verdict, r.witness, r.m, r.s);
    let d = SymbolicReal::parse("e^2")?;
    for q in [2, 3, 5, 7, 8, 9] {
        let f = federer_report(&Field::with_order(q)?, 1, &d);
        println!("q = {q}: nu(3B)/nu(B) = {}, bounded by e^2: {}", f.ratio, f.verdict);
    }
    Ok(())
}
