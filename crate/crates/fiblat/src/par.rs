//! Parallel tree sum on rayon.

use fiblat_core::sum::{leaf_sum, split, Reducer, LEAF};
use fiblat_core::Real;

/// Ranges shorter than this are summed on the calling thread.
const SERIAL_BELOW: u64 = 1 << 14;

/// Follows [`split`] exactly, so the result equals the sequential sum bit for
/// bit at any thread count.
#[derive(Clone, Copy, Debug, Default)]
pub struct Parallel;

impl Reducer for Parallel {
    fn tree_sum<R: Real, F: Fn(u64) -> R + Sync>(&self, lo: u64, hi: u64, f: &F) -> R {
        par_tree_sum(lo, hi, f)
    }
}

fn par_tree_sum<R: Real, F: Fn(u64) -> R + Sync>(lo: u64, hi: u64, f: &F) -> R {
    if hi <= lo {
        return R::zero();
    }
    if hi - lo <= LEAF {
        return leaf_sum(lo, hi, f);
    }
    let mid = split(lo, hi);
    if hi - lo < SERIAL_BELOW {
        return fiblat_core::sum::tree_sum(lo, mid, f) + fiblat_core::sum::tree_sum(mid, hi, f);
    }
    let (a, b) = rayon::join(|| par_tree_sum(lo, mid, f), || par_tree_sum(mid, hi, f));
    a + b
}
