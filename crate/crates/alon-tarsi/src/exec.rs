//! Sharded execution of enumeration kernels.
//!
//! Kernels split their index space into contiguous shards and merge shard
//! results in index order, so the final value is byte-identical whether the
//! shards run on one thread or many. Shard counts are fixed functions of the
//! problem size, never of the machine.

use std::cell::Cell;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Run `f` with parallel sharding disabled on this thread. Intended for
/// benchmarks comparing the two execution paths; results are identical
/// either way.
pub fn sequential<T>(f: impl FnOnce() -> T) -> T {
    FORCE_SEQUENTIAL.with(|flag| {
        let prev = flag.replace(true);
        let out = f();
        flag.set(prev);
        out
    })
}

fn forced_sequential() -> bool {
    FORCE_SEQUENTIAL.with(|flag| flag.get())
}

/// Number of shards for an enumeration of `total` steps. Small problems run
/// in one shard; larger ones use a fixed fan-out so results do not depend on
/// the worker count.
pub fn shard_count(total: u64) -> usize {
    if total < (1 << 14) {
        1
    } else {
        64
    }
}

/// Evaluate `f(0..shards)` and collect results in index order.
#[cfg(feature = "parallel")]
pub fn run_shards<R, F>(shards: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    if shards <= 1 || forced_sequential() {
        (0..shards).map(f).collect()
    } else {
        use rayon::prelude::*;
        (0..shards).into_par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn run_shards<R, F>(shards: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..shards).map(f).collect()
}

/// Split `total` items into `shards` contiguous ranges covering 0..total.
pub fn shard_range(total: u64, shards: usize, idx: usize) -> std::ops::Range<u64> {
    let shards = shards as u64;
    let idx = idx as u64;
    let base = total / shards;
    let rem = total % shards;
    // first `rem` shards take one extra item
    let start = idx * base + idx.min(rem);
    let len = base + u64::from(idx < rem);
    start..start + len
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_partition() {
        for total in [0u64, 1, 5, 64, 1000, 12345] {
            for shards in [1usize, 2, 7, 64] {
                let mut next = 0;
                for i in 0..shards {
                    let r = shard_range(total, shards, i);
                    assert_eq!(r.start, next);
                    next = r.end;
                }
                assert_eq!(next, total);
            }
        }
    }

    #[test]
    fn shards_merge_in_order() {
        let out = run_shards(8, |i| i * 10);
        assert_eq!(out, vec![0, 10, 20, 30, 40, 50, 60, 70]);
        let out = sequential(|| run_shards(8, |i| i * 10));
        assert_eq!(out, vec![0, 10, 20, 30, 40, 50, 60, 70]);
    }
}
