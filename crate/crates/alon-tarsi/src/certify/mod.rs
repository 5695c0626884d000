//! The four equivalent nonvanishing certificates: eulerian subdigraph
//! difference, weighted subdigraph sums, the permanent of the repeated-column
//! incidence matrix, and signed proper-coloring sums. Each route is
//! implemented against its own definition so the agreement tests are real
//! cross-checks, not tautologies.

pub mod euler;
pub mod incidence;
pub mod nz;
pub mod polynomial;
pub mod signed;
pub mod weighted;

pub use euler::{euler_diff, EulerCount};
pub use incidence::{build_permanent_matrix, coefficient_via_permanent};
pub use nz::{nz_points, nz_signed_sum, ColoringBox};
pub use polynomial::{graph_polynomial, graph_polynomial_forms, graph_polynomial_lazy};
pub use signed::{signed_coloring_sum, signed_sum_regular, RegularSignSum};
pub use weighted::{weighted_subgraph_sum, WeightScheme};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Shared precondition of the coloring-sum routes: one list size per vertex,
/// every size positive, sizes summing to m + n.
pub(crate) fn validate_list_sizes(g: &MultiGraph, f: &[u32]) -> Result<()> {
    let n = g.n() as usize;
    if f.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: f.len(),
        });
    }
    if let Some(v) = f.iter().position(|&fi| fi == 0) {
        return Err(Error::ZeroListSize(v + 1));
    }
    let expected = g.m() as u64 + n as u64;
    let got: u64 = f.iter().map(|&fi| u64::from(fi)).sum();
    if got != expected {
        return Err(Error::FSumMismatch { expected, got });
    }
    Ok(())
}
