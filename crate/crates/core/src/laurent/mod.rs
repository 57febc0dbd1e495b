//! Laurent series in 1/T with certified precision, balls, cylinders and
//! exact Haar measures.

pub mod ball;
pub mod cylinder;
pub mod measure;
pub mod series;

pub use ball::Ball;
pub use cylinder::{enumerate_cylinders, Cylinder};
pub use measure::ExactMeasure;
pub use series::{Laurent, DEFAULT_PREC};
