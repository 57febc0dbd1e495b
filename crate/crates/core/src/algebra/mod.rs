//! Exact arithmetic in F_q and F_q[T], and log-domain absolute values.

pub mod field;
pub mod lognorm;
pub mod matrix;
pub mod poly;
pub mod polymat;

pub use field::{FqElem, Field};
pub use lognorm::LogNorm;
pub use matrix::FqMatrix;
pub use poly::Poly;
pub use polymat::PolyMat;
