//! Exact rational scalars, dense matrices, and univariate polynomials.
//!
//! Every operation in this module is exact: no rounding ever happens.

mod matrix;
mod poly;
mod rank;
mod rational;

pub use matrix::RatMatrix;
pub use poly::RatPoly;
pub use rank::{min_poly_degree, IntRowSpace};
pub use rational::{format_rational, rat, rat_int, Rational};
