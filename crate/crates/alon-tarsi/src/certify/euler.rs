//! Eulerian spanning subdigraph counts: a subset A of the arcs is eulerian
//! when every vertex has equal in- and out-degree inside A. The empty subset
//! always counts as even.

use crate::algebra::permanent::gray;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::orientation::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerCount {
    pub even: u64,
    pub odd: u64,
}

impl EulerCount {
    pub fn diff(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

/// Arc-subset walker: tracks membership, the per-vertex imbalance
/// d^+_A - d^-_A, how many imbalances are nonzero, and |A| mod 2.
pub(crate) struct SubsetState<'a> {
    arcs: &'a [(u32, u32)],
    members: u64,
    imbalance: Vec<i32>,
    nonzero: usize,
    odd_size: bool,
}

impl<'a> SubsetState<'a> {
    /// Build the state for the subset with bit pattern `mask`.
    pub(crate) fn at(n: usize, arcs: &'a [(u32, u32)], mask: u64) -> Self {
        let mut state = SubsetState {
            arcs,
            members: 0,
            imbalance: vec![0; n],
            nonzero: 0,
            odd_size: false,
        };
        for e in 0..arcs.len() {
            if mask >> e & 1 == 1 {
                state.toggle(e);
            }
        }
        state
    }

    fn bump(&mut self, v: usize, delta: i32) {
        let old = self.imbalance[v];
        let new = old + delta;
        self.imbalance[v] = new;
        if old == 0 {
            self.nonzero += 1;
        } else if new == 0 {
            self.nonzero -= 1;
        }
    }

    pub(crate) fn toggle(&mut self, e: usize) {
        let (tail, head) = self.arcs[e];
        let t = (tail - 1) as usize;
        let h = (head - 1) as usize;
        let delta = if self.members >> e & 1 == 1 { -1 } else { 1 };
        self.bump(t, delta);
        self.bump(h, -delta);
        self.members ^= 1 << e;
        self.odd_size = !self.odd_size;
    }

    pub(crate) fn eulerian(&self) -> bool {
        self.nonzero == 0
    }

    pub(crate) fn odd_size(&self) -> bool {
        self.odd_size
    }

    pub(crate) fn imbalance(&self, v: usize) -> i32 {
        self.imbalance[v]
    }
}

/// Enumerate all 2^m arc subsets of D in gray-code order and split the
/// eulerian ones by size parity.
pub fn euler_diff(d: &Orientation, budget: &Budget) -> Result<EulerCount> {
    let m = d.m();
    if m >= 63 {
        return Err(Error::Budget {
            needed: u64::MAX,
            limit: budget.limit(),
        });
    }
    budget.charge_pow2(m as u32)?;
    let total = 1u64 << m;
    let n = d.n() as usize;
    let arcs = d.arcs();
    let shards = exec::shard_count(total);
    let partials = exec::run_shards(shards, |idx| {
        let range = exec::shard_range(total, shards, idx);
        if range.is_empty() {
            return EulerCount { even: 0, odd: 0 };
        }
        let mut state = SubsetState::at(n, arcs, gray(range.start));
        let mut count = EulerCount { even: 0, odd: 0 };
        let mut classify = |state: &SubsetState| {
            if state.eulerian() {
                if state.odd_size() {
                    count.odd += 1;
                } else {
                    count.even += 1;
                }
            }
        };
        classify(&state);
        for t in range.start + 1..range.end {
            state.toggle(t.trailing_zeros() as usize);
            classify(&state);
        }
        count
    });
    let mut total_count = EulerCount { even: 0, odd: 0 };
    for part in partials {
        total_count.even += part.even;
        total_count.odd += part.odd;
    }
    Ok(total_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::orientation::orientation_from_mask;
    use crate::graph::MultiGraph;

    #[test]
    fn cyclic_k3() {
        let g = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        // arcs 1->2, 2->3, 3->1
        let d = orientation_from_mask(&g, 0b100);
        let c = euler_diff(&d, &Budget::default()).unwrap();
        assert_eq!((c.even, c.odd, c.diff()), (1, 1, 0));
    }

    #[test]
    fn cyclic_and_canonical_c4() {
        let g = MultiGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let cyclic = orientation_from_mask(&g, 0b1000);
        let c = euler_diff(&cyclic, &Budget::default()).unwrap();
        assert_eq!((c.even, c.odd, c.diff()), (2, 0, 2));

        let canonical = orientation_from_mask(&g, 0);
        let c = euler_diff(&canonical, &Budget::default()).unwrap();
        assert_eq!((c.even, c.odd, c.diff()), (1, 0, 1));
    }

    #[test]
    fn digon_both_directions() {
        let g = MultiGraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        // one arc each way
        let d = orientation_from_mask(&g, 0b10);
        let c = euler_diff(&d, &Budget::default()).unwrap();
        assert_eq!((c.even, c.odd), (2, 0));
    }

    #[test]
    fn budget_enforced() {
        let g = MultiGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let d = orientation_from_mask(&g, 0);
        assert!(euler_diff(&d, &Budget::new(8)).is_err());
    }
}
