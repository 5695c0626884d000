//! Proper-coloring enumeration by backtracking, always in vertex-label order
//! with colors ascending, so every caller sees one deterministic stream.

use super::multigraph::MultiGraph;
use crate::budget::Budget;
use crate::error::Result;

/// Neighbor indices (0-based) smaller than each vertex, multiplicity dropped:
/// the only conflicts a backtracker must check.
fn earlier_neighbors(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.n() as usize;
    let mut prev = vec![Vec::new(); n];
    for &(i, j) in g.edges() {
        let (lo, hi) = ((i - 1) as usize, (j - 1) as usize);
        if !prev[hi].contains(&lo) {
            prev[hi].push(lo);
        }
    }
    prev
}

fn visit_rec<F>(
    prev: &[Vec<usize>],
    lists: &[Vec<u32>],
    colors: &mut Vec<u32>,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[u32]) -> bool,
{
    let v = colors.len();
    if v == lists.len() {
        return visit(colors);
    }
    for &c in &lists[v] {
        if prev[v].iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors.push(c);
        let keep_going = visit_rec(prev, lists, colors, visit);
        colors.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// Visits every proper coloring drawing vertex v's color from lists[v], in
/// lexicographic order. The visitor returns false to stop the search.
pub fn visit_list_colorings<F>(g: &MultiGraph, lists: &[Vec<u32>], visit: &mut F)
where
    F: FnMut(&[u32]) -> bool,
{
    assert_eq!(lists.len(), g.n() as usize, "one list per vertex");
    let prev = earlier_neighbors(g);
    let mut colors = Vec::with_capacity(lists.len());
    visit_rec(&prev, lists, &mut colors, visit);
}

pub fn exists_list_coloring(g: &MultiGraph, lists: &[Vec<u32>]) -> bool {
    let mut found = false;
    visit_list_colorings(g, lists, &mut |_| {
        found = true;
        false
    });
    found
}

pub fn count_list_colorings(g: &MultiGraph, lists: &[Vec<u32>], budget: &Budget) -> Result<u64> {
    budget.charge_product(lists.iter().map(|l| l.len() as u64))?;
    let mut count = 0u64;
    visit_list_colorings(g, lists, &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// Proper colorings in first-occurrence canonical form: vertex 1 uses color
/// 0, and each later vertex may exceed the colors seen so far by at most 1.
/// Each color-class partition into at most k classes appears exactly once.
/// Stops after `cap` partitions when a cap is given.
pub fn canonical_partitions(
    g: &MultiGraph,
    k: u32,
    cap: Option<usize>,
    budget: &Budget,
) -> Result<Vec<Vec<u32>>> {
    let n = g.n() as usize;
    budget.charge_product((0..n).map(|i| u64::from(k.min(i as u32 + 1))))?;
    let prev = earlier_neighbors(g);
    let mut colors: Vec<u32> = Vec::with_capacity(n);
    let mut out: Vec<Vec<u32>> = Vec::new();
    canonical_rec(&prev, n, k, &mut colors, cap, &mut out);
    Ok(out)
}

fn canonical_rec(
    prev: &[Vec<usize>],
    n: usize,
    k: u32,
    colors: &mut Vec<u32>,
    cap: Option<usize>,
    out: &mut Vec<Vec<u32>>,
) -> bool {
    let v = colors.len();
    if v == n {
        out.push(colors.clone());
        return cap.is_none_or(|c| out.len() < c);
    }
    let used = colors.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..=used.min(k.saturating_sub(1)) {
        if prev[v].iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors.push(c);
        let keep_going = canonical_rec(prev, n, k, colors, cap, out);
        colors.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// Least k admitting a proper coloring; 0 for the empty graph.
pub fn chromatic_number(g: &MultiGraph, budget: &Budget) -> Result<u32> {
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n {
        if !canonical_partitions(g, k, Some(1), budget)?.is_empty() {
            return Ok(k);
        }
    }
    unreachable!("n distinct colors always properly color a loopless graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{generate_family, Family};

    fn graph(f: Family) -> MultiGraph {
        generate_family(&f).unwrap().as_graph().unwrap().clone()
    }

    #[test]
    fn chromatic_numbers() {
        let budget = Budget::unlimited();
        assert_eq!(chromatic_number(&graph(Family::Complete(4)), &budget).unwrap(), 4);
        assert_eq!(chromatic_number(&graph(Family::Cycle(5)), &budget).unwrap(), 3);
        assert_eq!(chromatic_number(&graph(Family::Cycle(6)), &budget).unwrap(), 2);
        assert_eq!(chromatic_number(&graph(Family::Path(4)), &budget).unwrap(), 2);
        assert_eq!(chromatic_number(&graph(Family::Complete(1)), &budget).unwrap(), 1);
        let double = MultiGraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(chromatic_number(&double, &budget).unwrap(), 2);
    }

    #[test]
    fn counts_proper_colorings() {
        let budget = Budget::unlimited();
        // chromatic polynomial of C_4 at 3: (3-1)^4 + (3-1) = 18
        let c4 = graph(Family::Cycle(4));
        let lists: Vec<Vec<u32>> = vec![vec![0, 1, 2]; 4];
        assert_eq!(count_list_colorings(&c4, &lists, &budget).unwrap(), 18);
        // one forced list coloring on an edge
        let k2 = graph(Family::Complete(2));
        assert_eq!(
            count_list_colorings(&k2, &[vec![0], vec![0, 1]], &budget).unwrap(),
            1
        );
    }

    #[test]
    fn lexicographic_visit_order() {
        let k2 = graph(Family::Complete(2));
        let mut seen = Vec::new();
        visit_list_colorings(&k2, &[vec![0, 1], vec![0, 1]], &mut |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn partitions_are_deduplicated() {
        let budget = Budget::unlimited();
        // K_{2*2} = C_4: one bipartition into 2 classes
        let c4 = graph(Family::Cycle(4));
        let parts = canonical_partitions(&c4, 2, None, &budget).unwrap();
        assert_eq!(parts, vec![vec![0, 1, 0, 1]]);
        // with k=3 the classes may split further
        let parts3 = canonical_partitions(&c4, 3, None, &budget).unwrap();
        assert!(parts3.len() > 1);
        assert!(parts3.contains(&vec![0, 1, 0, 1]));
        // early stop honors the cap
        let capped = canonical_partitions(&c4, 3, Some(2), &budget).unwrap();
        assert_eq!(capped.len(), 2);
    }

    #[test]
    fn parallel_edges_do_not_double_count() {
        let budget = Budget::unlimited();
        let double = MultiGraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        let lists: Vec<Vec<u32>> = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(count_list_colorings(&double, &lists, &budget).unwrap(), 2);
    }
}
