//! Coefficient extraction through the permanent of the repeated-column
//! incidence matrix: Per(B) = coefficient(P_G, f-1) * prod (f(i)-1)! when B
//! repeats vertex i's oriented incidence column f(i)-1 times.

use crate::algebra::scheim::factorial;
use crate::algebra::{ryser_permanent_scalar, RingMatrix};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::orientation::{canonical_orientation, Orientation};
use crate::graph::MultiGraph;
use crate::scalar::ExactScalar;

/// m x m matrix whose row for arc (t, h) is +1 on vertex t's column block and
/// -1 on vertex h's; vertex j's block has width f(j) - 1.
pub fn build_permanent_matrix(d: &Orientation, f: &[u32]) -> Result<RingMatrix<ExactScalar>> {
    let n = d.n() as usize;
    let m = d.m();
    if f.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: f.len(),
        });
    }
    let widths: Vec<usize> = f.iter().map(|&fi| fi.saturating_sub(1) as usize).collect();
    let total: usize = widths.iter().sum();
    if total != m {
        return Err(Error::MultiplicitySum { rows: m, sum: total });
    }
    let mut starts = Vec::with_capacity(n);
    let mut offset = 0;
    for &w in &widths {
        starts.push(offset);
        offset += w;
    }
    let rows = d
        .arcs()
        .iter()
        .map(|&(tail, head)| {
            let mut row = vec![ExactScalar::zero(); m];
            let t = (tail - 1) as usize;
            let h = (head - 1) as usize;
            row[starts[t]..starts[t] + widths[t]].fill(ExactScalar::one());
            row[starts[h]..starts[h] + widths[h]].fill(ExactScalar::from_i64(-1));
            row
        })
        .collect();
    RingMatrix::from_rows(rows)
}

/// coefficient(P_G, f-1) as Per(B) / prod (f(i)-1)!, with B built on the
/// canonical orientation so the row product is P_G itself, sign +1.
pub fn coefficient_via_permanent(
    g: &MultiGraph,
    f: &[u32],
    budget: &Budget,
) -> Result<ExactScalar> {
    super::validate_list_sizes(g, f)?;
    let b = build_permanent_matrix(&canonical_orientation(g), f)?;
    let per = ryser_permanent_scalar(&b, budget)?;
    let mut denom = ExactScalar::one();
    for &fi in f {
        denom = &denom * &ExactScalar::from(factorial(fi - 1));
    }
    Ok(per.div_exact(&denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::polynomial::graph_polynomial;

    fn k3() -> MultiGraph {
        MultiGraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k3_matrix_rows() {
        let b = build_permanent_matrix(&canonical_orientation(&k3()), &[3, 2, 1]).unwrap();
        let want = [[1i64, 1, -1], [1, 1, 0], [0, 0, 1]];
        for (r, row) in want.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(b.get(r, c), &ExactScalar::from_i64(v));
            }
        }
    }

    #[test]
    fn multiplicity_sum_checked() {
        assert!(matches!(
            build_permanent_matrix(&canonical_orientation(&k3()), &[3, 3, 1]),
            Err(Error::MultiplicitySum { rows: 3, sum: 4 })
        ));
    }

    #[test]
    fn single_edge_and_k3_coefficients() {
        let budget = Budget::default();
        let edge = MultiGraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(
            coefficient_via_permanent(&edge, &[2, 1], &budget).unwrap(),
            ExactScalar::one()
        );
        assert_eq!(
            coefficient_via_permanent(&k3(), &[3, 2, 1], &budget).unwrap(),
            ExactScalar::one()
        );
        assert_eq!(
            coefficient_via_permanent(&k3(), &[2, 2, 2], &budget).unwrap(),
            ExactScalar::zero()
        );
    }

    #[test]
    fn agrees_with_expansion_on_c4() {
        let budget = Budget::default();
        let c4 = MultiGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let p = graph_polynomial(&c4, &budget).unwrap();
        for f in [[2u32, 2, 2, 2], [3, 2, 2, 1], [1, 3, 1, 3], [3, 1, 3, 1]] {
            let direct: Vec<u32> = f.iter().map(|&fi| fi - 1).collect();
            assert_eq!(
                coefficient_via_permanent(&c4, &f, &budget).unwrap(),
                p.coefficient_or(&direct, ExactScalar::zero()).unwrap(),
                "f = {f:?}"
            );
        }
    }
}
