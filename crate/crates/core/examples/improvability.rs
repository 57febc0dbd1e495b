//! Which weight vectors admit an eps-improved solution for a fixed system.

use ffdirichlet::algebra::Field;
use ffdirichlet::dirichlet::{di_check_window, weight_vectors, Epsilon, LinearFormsY};

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(2)?;
    let eps = Epsilon::new(1)?;
    for text in ["T^-1", "T^-1+T^-3+T^-7", "T^-2+T^-3+T^-5+T^-6"] {
        let y = LinearFormsY::parse(&field, text)?;
        let window: Vec<_> = weight_vectors(1, 1, 6).filter(|t| t.norm() >= 2).collect();
        let report = di_check_window(&y, eps, &window, 1 << 20)?;
        let solvable: Vec<String> = report.verdicts.iter().filter(|v| v.solvable).map(|v| v.t.to_string()).collect();
        println!("Y = {text}: improvable on the whole window: {}; solvable at [{}]", report.improvable, solvable.join(" "));
    }
    Ok(())
}
