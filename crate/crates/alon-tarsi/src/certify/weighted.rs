//! Weighted subdigraph sums: for any weights u^i_j,
//! sum over arc subsets A of (-1)^|A| prod_i prod_j (imb_A(i) - u^i_j),
//! where imb_A(i) = d^+_A(i) - d^-_A(i) and j ranges over 1..out-degree(i).
//! The value is independent of the weights.

use num_rational::BigRational;

use super::euler::SubsetState;
use crate::algebra::permanent::gray;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::orientation::Orientation;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightScheme {
    weights: Vec<Vec<ExactScalar>>,
}

impl WeightScheme {
    pub fn new(weights: Vec<Vec<BigRational>>) -> Self {
        WeightScheme {
            weights: weights
                .into_iter()
                .map(|row| row.into_iter().map(ExactScalar::from_rational).collect())
                .collect(),
        }
    }

    /// u^i_j = j, the scheme that reduces the sum to eulerian subset counts.
    pub fn consecutive(out_degrees: &[u32]) -> Self {
        WeightScheme {
            weights: out_degrees
                .iter()
                .map(|&d| (1..=d).map(|j| ExactScalar::from_i64(j.into())).collect())
                .collect(),
        }
    }

    pub fn weights(&self) -> &[Vec<ExactScalar>] {
        &self.weights
    }

    fn validate(&self, d: &Orientation) -> Result<()> {
        if self.weights.len() != d.n() as usize {
            return Err(Error::Dimension {
                expected: d.n() as usize,
                got: self.weights.len(),
            });
        }
        for (i, out) in d.out_degrees().iter().enumerate() {
            if self.weights[i].len() != *out as usize {
                return Err(Error::WeightShape { vertex: i + 1 });
            }
        }
        Ok(())
    }
}

/// Per-vertex lookup of prod_j (v - u^i_j) over the imbalance range
/// [-in_i, out_i], plus the offset mapping an imbalance to its table slot.
struct FactorTables {
    tables: Vec<Vec<ExactScalar>>,
    offsets: Vec<i32>,
}

impl FactorTables {
    fn build(d: &Orientation, w: &WeightScheme) -> FactorTables {
        let n = d.n() as usize;
        let out = d.out_degrees();
        let mut indeg = vec![0u32; n];
        for &(_, head) in d.arcs() {
            indeg[(head - 1) as usize] += 1;
        }
        let mut tables = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            let lo = -(indeg[i] as i32);
            let hi = out[i] as i32;
            let mut table = Vec::with_capacity((hi - lo + 1) as usize);
            for v in lo..=hi {
                let mut prod = ExactScalar::one();
                for u in &w.weights[i] {
                    prod = &prod * &(&ExactScalar::from_i64(v.into()) - u);
                }
                table.push(prod);
            }
            tables.push(table);
            offsets.push(lo);
        }
        FactorTables { tables, offsets }
    }

    fn factor(&self, v: usize, imbalance: i32) -> &ExactScalar {
        &self.tables[v][(imbalance - self.offsets[v]) as usize]
    }
}

pub fn weighted_subgraph_sum(
    d: &Orientation,
    w: &WeightScheme,
    budget: &Budget,
) -> Result<ExactScalar> {
    w.validate(d)?;
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
    let tables = FactorTables::build(d, w);
    let shards = exec::shard_count(total);
    let partials = exec::run_shards(shards, |idx| {
        let range = exec::shard_range(total, shards, idx);
        let mut acc = ExactScalar::zero();
        if range.is_empty() {
            return acc;
        }
        let mut state = SubsetState::at(n, arcs, gray(range.start));
        let mut zeros = (0..n)
            .filter(|&v| tables.factor(v, state.imbalance(v)).is_zero())
            .count();
        let add_term = |state: &SubsetState, zeros: usize, acc: &mut ExactScalar| {
            if zeros > 0 {
                return;
            }
            let mut prod = ExactScalar::one();
            for v in 0..n {
                prod = &prod * tables.factor(v, state.imbalance(v));
            }
            *acc = if state.odd_size() {
                &*acc - &prod
            } else {
                &*acc + &prod
            };
        };
        add_term(&state, zeros, &mut acc);
        for t in range.start + 1..range.end {
            let e = t.trailing_zeros() as usize;
            let (tail, head) = arcs[e];
            let touched = [(tail - 1) as usize, (head - 1) as usize];
            for &v in &touched {
                if tables.factor(v, state.imbalance(v)).is_zero() {
                    zeros -= 1;
                }
            }
            state.toggle(e);
            for &v in &touched {
                if tables.factor(v, state.imbalance(v)).is_zero() {
                    zeros += 1;
                }
            }
            add_term(&state, zeros, &mut acc);
        }
        acc
    });
    let mut sum = ExactScalar::zero();
    for part in partials {
        sum = &sum + &part;
    }
    Ok(sum)
}
