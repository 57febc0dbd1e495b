//! The shortest vector of the flowed lattice along a ray of weight vectors.

use ffdirichlet::algebra::Field;
use ffdirichlet::dirichlet::{Epsilon, LinearFormsY, WeightVector};
use ffdirichlet::lattice::flow_trace;

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(2)?;
    let y = LinearFormsY::parse(&field, "T^-1+T^-2+T^-4+T^-7+T^-11")?;
    let ts: Vec<WeightVector> = (0..=8).map(|k| WeightVector::new(1, vec![k, k])).collect::<Result<_, _>>()?;
    println!("t;lambda1_log;in_K_eps");
    for p in flow_trace(&y, &ts, Epsilon::new(1)?)? {
        println!("{}", p.csv_row());
    }
    Ok(())
}
