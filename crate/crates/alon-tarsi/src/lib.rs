//! Exact certification of Alon-Tarsi properties of multigraphs and
//! hypergraphs.
//!
//! The Alon-Tarsi number AT(G) is one more than the smallest k such that the
//! graph polynomial, the product of (x_i - x_j) over edges, has a nonzero
//! monomial with every exponent at most k. The library decides such
//! nonvanishing statements by four independently implemented routes that
//! cross-check each other: direct polynomial expansion, a permanent of a
//! repeated-column incidence matrix, eulerian and weighted subdigraph sums,
//! and signed proper-coloring sums. On top of the kernels sit structural
//! certificates for uniquely colorable graphs, hypergraph colorings over
//! prime roots of unity, and T-list colorings of even cycles.
//!
//! All arithmetic is exact: big integers, big rationals, and cyclotomic
//! integers. Exponential enumerations charge a [`budget::Budget`] before
//! starting and shard deterministically, so results are identical with and
//! without the `parallel` feature.

pub mod algebra;
pub mod apps;
pub mod budget;
pub mod certify;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod graph;
pub mod scalar;
pub mod solver;

pub use budget::Budget;
pub use error::{Error, Result};
pub use scalar::ExactScalar;
