//! Deterministic pairwise summation.
//!
//! Index ranges are split at the midpoint until at most [`LEAF`] terms
//! remain; leaves are summed left to right. The bracketing depends only on
//! the range, so a parallel driver that follows [`split`] reproduces the
//! sequential result bit for bit.

use crate::real::Real;

pub const LEAF: u64 = 64;

/// Midpoint used to split `lo..hi`.
#[inline]
pub fn split(lo: u64, hi: u64) -> u64 {
    lo + (hi - lo) / 2
}

/// Left-to-right sum of a leaf range.
#[inline]
pub fn leaf_sum<R: Real, F: Fn(u64) -> R>(lo: u64, hi: u64, f: &F) -> R {
    let mut acc = R::zero();
    for m in lo..hi {
        acc += f(m);
    }
    acc
}

/// Pairwise sum of `f(lo) + … + f(hi − 1)`.
pub fn tree_sum<R: Real, F: Fn(u64) -> R>(lo: u64, hi: u64, f: &F) -> R {
    if hi <= lo {
        return R::zero();
    }
    if hi - lo <= LEAF {
        return leaf_sum(lo, hi, f);
    }
    let mid = split(lo, hi);
    tree_sum(lo, mid, f) + tree_sum(mid, hi, f)
}

pub fn pairwise_sum<R: Real>(values: &[R]) -> R {
    tree_sum(0, values.len() as u64, &|m| values[m as usize])
}

/// Strategy for evaluating a tree sum; implemented sequentially here and in
/// parallel by the std companion crate.
pub trait Reducer: Sync {
    fn tree_sum<R: Real, F: Fn(u64) -> R + Sync>(&self, lo: u64, hi: u64, f: &F) -> R;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Reducer for Sequential {
    fn tree_sum<R: Real, F: Fn(u64) -> R + Sync>(&self, lo: u64, hi: u64, f: &F) -> R {
        tree_sum(lo, hi, f)
    }
}
