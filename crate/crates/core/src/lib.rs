//! Exact-arithmetic toolkit for distance-regularity questions on finite
//! graphs: combinatorial classifiers (distance-regular, edge-distance-
//! regular, homogeneous, generalized odd), distance and edge-distance
//! polynomials over the rationals, and machine checks of the algebraic
//! identities connecting them. No floating point anywhere.

pub mod classify;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod partitions;
pub mod polynomials;
pub mod report;

pub use error::{Error, Result};
pub use graph::Graph;
