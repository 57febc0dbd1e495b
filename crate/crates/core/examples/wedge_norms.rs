//! Norms of submodules through wedge products, and the norm-like check.

use ffdirichlet::algebra::Field;
use ffdirichlet::exterior::{check_norm_like, primitive_closure, submodule_norm_log, NormLikeConfig, SubmoduleBasis};

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(3)?;
    let delta = SubmoduleBasis::parse(&field, "T,1,0|0,T^2,1")?;
    println!("||Delta|| = e^{}", submodule_norm_log(&delta));
    println!("||closure|| = e^{}", submodule_norm_log(&primitive_closure(&delta)));
    let report = check_norm_like(&NormLikeConfig { fields: vec![2, 3], max_n: 3, max_deg: 3, samples: 2000, seed: 1 })?;
    println!("norm-like check on 2000 samples: {} violations", report.violations.len());
    Ok(())
}
