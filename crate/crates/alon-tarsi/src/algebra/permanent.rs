//! Matrix permanent by Ryser's inclusion-exclusion:
//!
//!   Per(M) = (-1)^s * sum over S of (-1)^|S| * prod_i sum_{j in S} m_ij
//!
//! Subsets iterate in Gray-code order, so each step toggles one column in
//! the running row sums: 2^s * s ring operations instead of 2^s * s^2.
//! This is the hottest loop in the artifact.

use super::{Ring, RingMatrix};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec;

/// Row sums for the subset with bit pattern `mask`.
fn init_sums<R: Ring>(cols: &[Vec<R>], mask: u64, zero: &R) -> Vec<R> {
    let mut sums = vec![zero.clone(); cols.len()];
    for (j, col) in cols.iter().enumerate() {
        if mask >> j & 1 == 1 {
            for (i, v) in col.iter().enumerate() {
                sums[i] = sums[i].add_ref(v);
            }
        }
    }
    sums
}

pub(crate) fn gray(t: u64) -> u64 {
    t ^ (t >> 1)
}

/// Partial Ryser sum over subset indices `range` (subset of step t is
/// gray(t)); returns sum of (-1)^|gray(t)| * prod_i rowsum_i(gray(t)).
fn ryser_shard<R: Ring>(cols: &[Vec<R>], range: std::ops::Range<u64>, zero: &R) -> R {
    let s = cols.len();
    // range.start >= 1 always (t = 0 is the empty subset, skipped)
    let mut sums = init_sums(cols, gray(range.start - 1), zero);
    let mut sums_parity = gray(range.start - 1).count_ones() & 1;
    let mut acc = zero.clone();
    for t in range {
        let flip = t.trailing_zeros() as usize;
        let col = &cols[flip];
        if gray(t) >> flip & 1 == 1 {
            for (i, v) in col.iter().enumerate() {
                sums[i] = sums[i].add_ref(v);
            }
        } else {
            for (i, v) in col.iter().enumerate() {
                sums[i] = sums[i].sub_ref(v);
            }
        }
        sums_parity ^= 1;
        let mut prod = zero.one_like();
        let mut vanished = false;
        for v in sums.iter().take(s) {
            if v.is_zero() {
                vanished = true;
                break;
            }
            prod = prod.mul_ref(v);
        }
        if vanished {
            continue;
        }
        if sums_parity == 1 {
            acc = acc.sub_ref(&prod);
        } else {
            acc = acc.add_ref(&prod);
        }
    }
    acc
}

/// Exact permanent of a square matrix. `exemplar` supplies the ring's zero
/// for empty matrices (where the permanent is 1, the empty product).
pub fn ryser_permanent<R: Ring>(m: &RingMatrix<R>, budget: &Budget) -> Result<R> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let s = m.rows();
    if s == 0 {
        // Per of the 0x0 matrix is the empty-permutation product.
        // There is no entry to borrow a ring exemplar from, so this case is
        // only reachable through the ExactScalar wrapper below.
        return Err(Error::Dimension { expected: 1, got: 0 });
    }
    if s >= 63 {
        return Err(Error::Budget {
            needed: u64::MAX,
            limit: budget.limit(),
        });
    }
    budget.charge_pow2(s as u32)?;
    let zero = m.get(0, 0).zero_like();
    let cols: Vec<Vec<R>> = (0..s).map(|j| m.column(j)).collect();
    let total = 1u64 << s; // t ranges over 1..2^s
    let shards = exec::shard_count(total);
    let partials = exec::run_shards(shards, |idx| {
        let mut r = exec::shard_range(total - 1, shards, idx);
        r = r.start + 1..r.end + 1;
        ryser_shard(&cols, r, &zero)
    });
    let mut acc = zero;
    for p in partials {
        acc = acc.add_ref(&p);
    }
    if s % 2 == 1 {
        acc = acc.neg_ref();
    }
    Ok(acc)
}

/// ExactScalar wrapper handling the empty matrix (permanent 1).
pub fn ryser_permanent_scalar(
    m: &RingMatrix<crate::scalar::ExactScalar>,
    budget: &Budget,
) -> Result<crate::scalar::ExactScalar> {
    if m.rows() == 0 && m.cols() == 0 {
        return Ok(crate::scalar::ExactScalar::one());
    }
    ryser_permanent(m, budget)
}
