//! The graph polynomial: product of (x_i - x_j) over edges with i < j, one
//! factor per parallel edge. Homogeneous of degree m; identically 1 when
//! there are no edges.

use crate::algebra::poly::{expand_linear_product, LinearForm, LinearProduct};
use crate::algebra::SparsePolynomial;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::scalar::ExactScalar;

pub fn graph_polynomial_forms(g: &MultiGraph) -> Vec<LinearForm<ExactScalar>> {
    let n = g.n() as usize;
    g.edges()
        .iter()
        .map(|&(i, j)| LinearForm::difference(n, (i - 1) as usize, (j - 1) as usize))
        .collect()
}

/// Fully expanded graph polynomial.
pub fn graph_polynomial(g: &MultiGraph, budget: &Budget) -> Result<SparsePolynomial<ExactScalar>> {
    expand_linear_product(
        &graph_polynomial_forms(g),
        g.n() as usize,
        &ExactScalar::one(),
        budget,
    )
}

/// The same polynomial as an unexpanded evaluator, for the point-evaluation
/// routes that never need the monomial list.
pub fn graph_polynomial_lazy(g: &MultiGraph) -> LinearProduct {
    LinearProduct::new(g.n() as usize, graph_polynomial_forms(g))
}
