//! Enumeration budgets.
//!
//! Every exponential kernel charges its full step count before starting, so
//! an over-budget call fails fast instead of timing out mid-enumeration.

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Charge `needed` steps against the limit. The budget is stateless:
    /// each operation charges its own total, callers that chain operations
    /// accept the per-operation semantics.
    pub fn charge(&self, needed: u64) -> Result<()> {
        if needed > self.limit {
            Err(Error::Budget {
                needed,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Charge 2^bits steps; saturates above u64::MAX so oversized shifts
    /// still fail the check rather than wrapping.
    pub fn charge_pow2(&self, bits: u32) -> Result<()> {
        let needed = if bits >= 64 { u64::MAX } else { 1u64 << bits };
        self.charge(needed)
    }

    /// Charge a product of factors (e.g. a coloring box volume).
    pub fn charge_product<I: IntoIterator<Item = u64>>(&self, factors: I) -> Result<()> {
        let mut total: u64 = 1;
        for f in factors {
            total = total.saturating_mul(f.max(1));
        }
        self.charge(total)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
