//! Exact Diophantine approximation over the Laurent series field
//! F_q((1/T)).
//!
//! - [`algebra`]: finite fields, polynomials over F_q and matrices over F_q
//!   and F_q[T].
//! - [`laurent`]: precision-tracked Laurent series, balls, cylinders and
//!   exact Haar measures.
//! - [`dirichlet`]: the constructive Dirichlet solver and the improvability
//!   checker.
//! - [`lattice`]: lattices over F_q[T], the diagonal flow and exact
//!   shortest vectors by weak Popov reduction.
//! - [`exterior`]: wedge products and norms of submodules.
//! - [`goodness`]: (C, alpha)-good, Federer and nonplanarity checks, explicit
//!   constants and measure probes along curves.
//! - [`cli`]: the `ffdirichlet` command line.

pub mod algebra;
pub mod cli;
pub mod dirichlet;
pub mod error;
pub mod exterior;
pub mod goodness;
pub mod lattice;
pub mod laurent;

pub use error::{Error, Result};
