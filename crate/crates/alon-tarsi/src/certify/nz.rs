//! Non-zero box sums: for any polynomial p of degree sum(f)-n, the signed
//! binomial-weighted sum of p over the box 0..f(i)-1 is supported on the
//! non-zeros of p, and its nonvanishing forces a non-zero of p inside every
//! box with those list sizes.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::poly::PolyEval;
use crate::algebra::scheim::binomial;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec;
use crate::scalar::ExactScalar;

/// Integer box with inclusive per-coordinate upper bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringBox {
    bounds: Vec<u32>,
}

impl ColoringBox {
    pub fn new(bounds: Vec<u32>) -> Self {
        ColoringBox { bounds }
    }

    /// Box of colors 0..f(i)-1; every list size must be positive.
    pub fn from_list_sizes(f: &[u32]) -> Result<Self> {
        if let Some(v) = f.iter().position(|&fi| fi == 0) {
            return Err(Error::ZeroListSize(v + 1));
        }
        Ok(ColoringBox {
            bounds: f.iter().map(|&fi| fi - 1).collect(),
        })
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn volume(&self) -> u64 {
        self.bounds
            .iter()
            .fold(1u64, |acc, &b| acc.saturating_mul(u64::from(b) + 1))
    }

    /// Decode a flat index: first coordinate most significant, so ascending
    /// indices walk the box in lexicographic point order.
    pub fn decode(&self, mut idx: u64, out: &mut [i64]) {
        for pos in (0..self.bounds.len()).rev() {
            let dim = u64::from(self.bounds[pos]) + 1;
            out[pos] = (idx % dim) as i64;
            idx /= dim;
        }
    }
}

fn check_nz_preconditions(p: &dyn PolyEval, f: &[u32]) -> Result<ColoringBox> {
    if f.len() != p.nvars() {
        return Err(Error::Dimension {
            expected: p.nvars(),
            got: f.len(),
        });
    }
    let boxed = ColoringBox::from_list_sizes(f)?;
    let expected: u64 = f.iter().map(|&fi| u64::from(fi) - 1).sum();
    if p.degree_bound() != expected {
        return Err(Error::DegreeMismatch {
            expected,
            got: p.degree_bound(),
        });
    }
    Ok(boxed)
}

/// Signed binomial-weighted sum of p over the box of list sizes f.
pub fn nz_signed_sum(p: &dyn PolyEval, f: &[u32], budget: &Budget) -> Result<ExactScalar> {
    let boxed = check_nz_preconditions(p, f)?;
    let volume = boxed.volume();
    budget.charge(volume)?;
    let tables: Vec<Vec<BigInt>> = f
        .iter()
        .map(|&fi| (0..fi).map(|c| binomial(fi - 1, c)).collect())
        .collect();
    let shards = exec::shard_count(volume);
    let partials = exec::run_shards(shards, |idx| {
        let range = exec::shard_range(volume, shards, idx);
        let mut point = vec![0i64; f.len()];
        let mut acc = ExactScalar::zero();
        for flat in range {
            boxed.decode(flat, &mut point);
            let value = p.eval(&point);
            if value.is_zero() {
                continue;
            }
            let mut weight = BigInt::one();
            for (pos, &z) in point.iter().enumerate() {
                weight *= &tables[pos][z as usize];
            }
            let term = &value * &ExactScalar::from(weight);
            let odd = point.iter().sum::<i64>() % 2 == 1;
            acc = if odd { &acc - &term } else { &acc + &term };
        }
        acc
    });
    let mut sum = ExactScalar::zero();
    for part in partials {
        sum = &sum + &part;
    }
    Ok(sum)
}

/// All box points where p is nonzero, in lexicographic order, with values.
/// Intended for the small boxes of the structural applications; the full
/// non-zero set is materialized.
pub fn nz_points(
    p: &dyn PolyEval,
    f: &[u32],
    budget: &Budget,
) -> Result<Vec<(Vec<u32>, ExactScalar)>> {
    let boxed = check_nz_preconditions(p, f)?;
    let volume = boxed.volume();
    budget.charge(volume)?;
    let mut point = vec![0i64; f.len()];
    let mut out = Vec::new();
    for flat in 0..volume {
        boxed.decode(flat, &mut point);
        let value = p.eval(&point);
        if !value.is_zero() {
            out.push((point.iter().map(|&z| z as u32).collect(), value));
        }
    }
    Ok(out)
}
