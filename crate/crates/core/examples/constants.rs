//! Explicit constants for the quadratic curve.

use ffdirichlet::dirichlet::Epsilon;
use ffdirichlet::goodness::{epsilon0, nondivergence_bound, GoodnessParams};

fn main() -> ffdirichlet::Result<()> {
    let p = GoodnessParams::quadratic_curve();
    let e = epsilon0(2, p.c, p.alpha, &p.d)?;
    println!("C~ = {}\neps0 = {} = {:.6e}", e.c_tilde, e.eps0, e.eps0_f64);
    for s in [1, 2, 4] {
        println!("nondivergence coefficient at m = 3, eps = e^-{s}: {}", nondivergence_bound(3, &p, Epsilon::new(s)?)?);
    }
    Ok(())
}
