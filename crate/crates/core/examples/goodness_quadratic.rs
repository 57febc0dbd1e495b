//! The (2, 1/2)-good inequality for quadratic polynomials over F_2 and F_3.

use ffdirichlet::algebra::Field;
use ffdirichlet::cli::golden::curve_balls;
use ffdirichlet::dirichlet::Epsilon;
use ffdirichlet::goodness::{cg_good_check, coefficient_grid, sublevel_measure, UniPoly};
use ffdirichlet::laurent::Ball;
use num_rational::Ratio;

fn main() -> ffdirichlet::Result<()> {
    let eps: Vec<Epsilon> = (1..=6).map(Epsilon::new).collect::<ffdirichlet::Result<_>>()?;
    for q in [2, 3] {
        let field = Field::prime(q)?;
        let phi = UniPoly::parse(&field, "x^2")?;
        println!("q = {q}: nu(|x^2| < e^-2) = {}", sublevel_measure(&phi, &Ball::unit(&field), eps[1], 1 << 20)?);
        let family = coefficient_grid(&field, 2, 1);
        let r = cg_good_check(&family, Ratio::from_integer(2), Ratio::new(1, 2), &curve_balls(&field)?, &eps, 1 << 24)?;
        println!(
            "q = {q}: {} polynomials, {} checks, {} violations, min margin {:.4}",
            family.len(),
            r.checks,
            r.violations.len(),
            r.min_margin.unwrap_or(f64::INFINITY)
        );
    }
    Ok(())
}
