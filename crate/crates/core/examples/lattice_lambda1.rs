//! Shortest vectors of polynomial lattices by weak Popov reduction, checked
//! against the enumeration oracle.

use ffdirichlet::algebra::{Field, PolyMat};
use ffdirichlet::lattice::oracle::lambda1_enumerate;
use ffdirichlet::lattice::{lambda1_poly, weak_popov};

fn main() -> ffdirichlet::Result<()> {
    let field = Field::prime(2)?;
    let m = PolyMat::parse(&field, &[&["T^2+1", "T"], &["T^3", "T^2+T"]])?;
    let (reduced, degrees) = weak_popov(&m)?;
    println!("basis {m:?}\nreduced {reduced:?}\nrow degrees {degrees:?}");
    println!("lambda_1 = e^{}, enumeration says e^{}", lambda1_poly(&m)?, lambda1_enumerate(&m, 4, 1 << 16)?);
    Ok(())
}
