//! Cheap structural invariants: maximum density, coloring number, and the
//! degree-peeling core test for the AT <= 2 characterization.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::multigraph::MultiGraph;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// max over nonempty induced subgraphs H of e(H)/v(H), as an exact rational.
pub fn max_density(g: &MultiGraph, budget: &Budget) -> Result<BigRational> {
    let n = g.n() as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    budget.charge_pow2(n as u32)?;
    let mut best: Option<BigRational> = None;
    for mask in 1u64..1u64 << n {
        let mut edge_count = 0u64;
        for &(i, j) in g.edges() {
            if mask >> (i - 1) & 1 == 1 && mask >> (j - 1) & 1 == 1 {
                edge_count += 1;
            }
        }
        let d = BigRational::new(
            BigInt::from(edge_count),
            BigInt::from(mask.count_ones() as u64),
        );
        if best.as_ref().is_none_or(|b| d > *b) {
            best = Some(d);
        }
    }
    Ok(best.expect("n >= 1 gives at least one subset"))
}

/// Degeneracy: max over subgraphs of the minimum degree, computed by peeling
/// a minimum-degree vertex (smallest label on ties) until none remain.
pub fn coloring_number_col(g: &MultiGraph) -> u32 {
    let n = g.n() as usize;
    let mut alive = vec![true; n];
    let mut deg: Vec<u32> = (1..=g.n()).map(|v| g.degree(v)).collect();
    let mut col = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("alive vertex remains");
        col = col.max(deg[v]);
        alive[v] = false;
        for &(i, j) in g.edges() {
            let (i, j) = ((i - 1) as usize, (j - 1) as usize);
            if i == v && alive[j] {
                deg[j] -= 1;
            } else if j == v && alive[i] {
                deg[i] -= 1;
            }
        }
    }
    col
}

/// True iff iterated deletion of degree-<=1 vertices leaves nothing, one
/// vertex, or a single even cycle. For connected G this decides AT(G) <= 2.
pub fn structural_at_le_2(g: &MultiGraph) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n() as usize;
    let mut alive = vec![true; n];
    let mut deg: Vec<u32> = (1..=g.n()).map(|v| g.degree(v)).collect();
    while let Some(v) = (0..n).find(|&v| alive[v] && deg[v] <= 1) {
        alive[v] = false;
        for &(i, j) in g.edges() {
            let (i, j) = ((i - 1) as usize, (j - 1) as usize);
            if i == v && alive[j] {
                deg[j] -= 1;
            } else if j == v && alive[i] {
                deg[i] -= 1;
            }
        }
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if remaining.is_empty() {
        return Ok(true);
    }
    // A 2-regular remainder of a connected graph is one cycle; even order
    // means an even cycle (a doubled edge counts as a 2-cycle).
    Ok(remaining.iter().all(|&v| deg[v] == 2) && remaining.len().is_multiple_of(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{generate_family, Family};

    fn graph(f: Family) -> MultiGraph {
        generate_family(&f).unwrap().as_graph().unwrap().clone()
    }

    #[test]
    fn density_of_complete_graphs() {
        let budget = Budget::unlimited();
        for n in 1..=5u32 {
            let g = graph(Family::Complete(n));
            let d = max_density(&g, &budget).unwrap();
            // K_n itself maximizes: C(n,2)/n = (n-1)/2
            assert_eq!(
                d,
                BigRational::new(BigInt::from(n - 1), BigInt::from(2u32))
            );
        }
    }

    #[test]
    fn density_sees_dense_subgraph() {
        // K_4 with a pendant path: the maximizer is the K_4, not the whole graph.
        let g = MultiGraph::new(
            6,
            vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        let d = max_density(&g, &Budget::unlimited()).unwrap();
        assert_eq!(d, BigRational::new(BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn col_matches_degeneracy() {
        assert_eq!(coloring_number_col(&graph(Family::Complete(4))), 3);
        assert_eq!(coloring_number_col(&graph(Family::Cycle(5))), 2);
        assert_eq!(coloring_number_col(&graph(Family::Path(4))), 1);
        assert_eq!(coloring_number_col(&graph(Family::Complete(1))), 0);
        let double = MultiGraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(coloring_number_col(&double), 2);
    }

    #[test]
    fn core_test_examples() {
        assert!(structural_at_le_2(&graph(Family::Cycle(4))).unwrap());
        assert!(!structural_at_le_2(&graph(Family::Cycle(5))).unwrap());
        assert!(structural_at_le_2(&graph(Family::Path(4))).unwrap());
        assert!(structural_at_le_2(&graph(Family::Complete(1))).unwrap());
        assert!(!structural_at_le_2(&graph(Family::Complete(4))).unwrap());
        // tree with branching, core empties out
        let tree = MultiGraph::new(5, vec![(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(structural_at_le_2(&tree).unwrap());
        // even cycle with a pendant tail
        let tailed = MultiGraph::new(5, vec![(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
        assert!(structural_at_le_2(&tailed).unwrap());
        let double = MultiGraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert!(structural_at_le_2(&double).unwrap());
        let triple = MultiGraph::new(2, vec![(1, 2), (1, 2), (1, 2)]).unwrap();
        assert!(!structural_at_le_2(&triple).unwrap());
    }

    #[test]
    fn disconnected_rejected() {
        let g = MultiGraph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert!(matches!(structural_at_le_2(&g), Err(Error::NotConnected)));
    }
}
