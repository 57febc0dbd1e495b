//! Witnesses of the plain Dirichlet system for random 2x1 forms over F_3.

use ffdirichlet::algebra::Field;
use ffdirichlet::dirichlet::{dirichlet_solve, verify_system, weight_vectors, LinearFormsY};

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(3)?;
    let y = LinearFormsY::random(&field, 2, 1, 32, 11);
    println!("Y = {y}");
    for t in weight_vectors(2, 1, 3) {
        let sol = dirichlet_solve(&y, &t)?;
        let p: Vec<String> = sol.p.iter().map(|p| p.to_string()).collect();
        println!("t = {t:<8} q = {:<10} p = {:<16} verified = {}", sol.q[0].to_string(), p.join(", "), verify_system(&y, &t, &sol, None)?);
    }
    Ok(())
}
