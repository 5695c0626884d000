//! Orientations of a multigraph, encoded as a reversal mask over the edge list.
//!
//! The canonical orientation points every stored edge (i, j), i < j, from i to
//! j. An orientation's `r` is the number of edges pointing high to low.

use super::multigraph::MultiGraph;
use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    n: u32,
    arcs: Vec<(u32, u32)>,
    reversed: Vec<bool>,
}

impl Orientation {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    /// (tail, head) per edge, in the base graph's edge order.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    /// Number of edges oriented from the higher label to the lower.
    pub fn r(&self) -> usize {
        self.reversed.iter().filter(|&&b| b).count()
    }

    pub fn out_degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n as usize];
        for &(tail, _) in &self.arcs {
            d[(tail - 1) as usize] += 1;
        }
        d
    }

    pub fn reversal_mask(&self) -> Option<u64> {
        if self.reversed.len() > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (e, &rev) in self.reversed.iter().enumerate() {
            if rev {
                mask |= 1u64 << e;
            }
        }
        Some(mask)
    }
}

pub fn canonical_orientation(g: &MultiGraph) -> Orientation {
    Orientation {
        n: g.n(),
        arcs: g.edges().to_vec(),
        reversed: vec![false; g.m()],
    }
}

/// Bit e of `mask` set means edge e runs high to low.
pub fn orientation_from_mask(g: &MultiGraph, mask: u64) -> Orientation {
    let mut arcs = Vec::with_capacity(g.m());
    let mut reversed = Vec::with_capacity(g.m());
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        let rev = mask >> e & 1 == 1;
        arcs.push(if rev { (j, i) } else { (i, j) });
        reversed.push(rev);
    }
    Orientation {
        n: g.n(),
        arcs,
        reversed,
    }
}

pub struct OrientationIter<'a> {
    g: &'a MultiGraph,
    next_mask: u64,
    total: u64,
}

impl Iterator for OrientationIter<'_> {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next_mask == self.total {
            return None;
        }
        let o = orientation_from_mask(self.g, self.next_mask);
        self.next_mask += 1;
        Some(o)
    }
}

/// All 2^m orientations in mask order. Charges the full count up front.
pub fn enumerate_orientations<'a>(
    g: &'a MultiGraph,
    budget: &Budget,
) -> Result<OrientationIter<'a>> {
    let m = g.m();
    if m >= 63 {
        return Err(Error::Budget {
            needed: u64::MAX,
            limit: budget.limit(),
        });
    }
    budget.charge_pow2(m as u32)?;
    Ok(OrientationIter {
        g,
        next_mask: 0,
        total: 1u64 << m,
    })
}
