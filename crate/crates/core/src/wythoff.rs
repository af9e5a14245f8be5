//! The Wythoff array, its row invariants and the dual array.
//!
//! Row `i` is the Fibonacci-type sequence `W_{i,k} = F_{k+1}⌊φi⌋ + F_k(i−1)`.
//! Its growth coefficients `w_±(i)` live in Z[φ]; `η_i = −w_+w_−` and the
//! threshold `μ_i` control which entries fall below `F_n/2`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::golden::{fib, fib_u128, floor_phi_big, floor_phi_times, floor_phi_u64, GoldenInt};

/// Fibonacci numbers at any integer index, `F_{−n} = (−1)^{n+1}F_n`.
pub(crate) fn fib_signed(n: i64) -> BigInt {
    let f = fib(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// Row `i` with its cached invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WythoffRow {
    pub i: u64,
    pub floor_phi_i: BigInt,
    pub w_plus: GoldenInt,
    pub w_minus: GoldenInt,
    pub eta: BigInt,
    pub mu: u32,
}

impl WythoffRow {
    pub fn new(i: u64) -> Result<Self> {
        if i == 0 {
            return Err(invalid("row index must be at least 1"));
        }
        let f = floor_phi_times(i);
        let im1 = BigInt::from(i - 1);
        let w_plus = GoldenInt::new(im1.clone(), f.clone());
        let w_minus = GoldenInt::new(&im1 + &f, -&f);
        let prod = &w_plus * &w_minus;
        debug_assert!(prod.b.is_zero());
        let eta = -prod.a;
        let mu = mu_from_w_plus(&w_plus);
        Ok(WythoffRow { i, floor_phi_i: f, w_plus, w_minus, eta, mu })
    }

    /// `W_{i,k}` for any integer `k`, extending the recurrence backwards.
    pub fn entry(&self, k: i64) -> BigInt {
        fib_signed(k + 1) * &self.floor_phi_i + fib_signed(k) * BigInt::from(self.i - 1)
    }

    /// `W*_{i,slot} = F_{slot−1}⌊φi⌋ − F_{slot}(i−1)` for `slot > μ_i`.
    pub fn dual(&self, slot: u64) -> Result<BigInt> {
        if slot <= self.mu as u64 {
            return Err(Error::DualOutOfRange { slot, mu: self.mu });
        }
        Ok(fib(slot - 1) * &self.floor_phi_i - fib(slot) * BigInt::from(self.i - 1))
    }
}

/// The unique `m` with `φ^m < 2w < φ^{m+1}`, by exact comparison.
fn mu_from_w_plus(w_plus: &GoldenInt) -> u32 {
    let two_w = w_plus * &GoldenInt::from_int(2);
    let mut m = 0u32;
    let mut next = GoldenInt::phi();
    loop {
        match next.cmp(&two_w) {
            core::cmp::Ordering::Less => {
                m += 1;
                next = &next * &GoldenInt::phi();
            }
            core::cmp::Ordering::Equal => unreachable!("a power of φ never equals 2w_+(i)"),
            core::cmp::Ordering::Greater => return m,
        }
    }
}

/// `W_{i,k} = F_{k+1}⌊φi⌋ + F_k(i−1)`.
pub fn wythoff_entry(i: u64, k: u64) -> BigInt {
    assert!(i >= 1 && k >= 1, "Wythoff indices start at 1");
    fib(k + 1) * floor_phi_times(i) + fib(k) * BigInt::from(i - 1)
}

/// `η_i = −w_+(i)w_−(i) = ⌊φi⌋² − (i−1)(i−1+⌊φi⌋)`.
pub fn row_invariant_eta(i: u64) -> BigInt {
    let f = floor_phi_times(i);
    let im1 = BigInt::from(i - 1);
    &f * &f - &im1 * (&im1 + &f)
}

/// `μ_i = ⌊log_φ 2w_+(i)⌋`, found against powers of φ in Z[φ].
pub fn row_threshold_mu(i: u64) -> u32 {
    let f = floor_phi_times(i);
    mu_from_w_plus(&GoldenInt::new(i - 1, f))
}

/// `μ_i` from its defining property: `μ_i + 2` is the least `n` with
/// `2W_{i,1} < F_n`.
pub fn mu_by_half_fib(i: u64) -> u32 {
    let w1 = BigInt::from(floor_phi_u64(i)) + (i - 1);
    let two = BigInt::from(2) * w1;
    let mut n = 2u64;
    while fib(n) <= two {
        n += 1;
    }
    (n - 2) as u32
}

/// `W*_{i,n−k} = (−1)^k(F_{n−1}W_{i,k} − F_nW_{i,k−1})`.
pub fn dual_entry(i: u64, n: u64, k: u64) -> Result<BigInt> {
    if i == 0 || k == 0 || k >= n {
        return Err(invalid("dual_entry needs i ≥ 1 and 1 ≤ k < n"));
    }
    let mu = row_threshold_mu(i);
    if n - k <= mu as u64 {
        return Err(Error::DualOutOfRange { slot: n - k, mu });
    }
    let f = floor_phi_times(i);
    let im1 = BigInt::from(i - 1);
    let w = |k: u64| fib(k + 1) * &f + fib(k) * &im1;
    let v = fib(n - 1) * w(k) - fib(n) * w(k - 1);
    Ok(if k % 2 == 1 { -v } else { v })
}

/// Row invariants in machine integers for the numerical hot loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowInvariants {
    pub i: u64,
    pub floor_phi_i: u64,
    pub eta: u64,
    pub mu: u32,
}

impl RowInvariants {
    /// Valid for `1 ≤ i < 2^40`.
    pub fn new(i: u64) -> Self {
        assert!((1..1u64 << 40).contains(&i));
        let f = floor_phi_u64(i);
        let (fw, iw) = (f as u128, (i - 1) as u128);
        let eta = (fw * fw - iw * (iw + fw)) as u64;
        let two_w1 = 2 * (fw + iw);
        let mut n = 2u64;
        while fib_u128(n).expect("index stays small") <= two_w1 {
            n += 1;
        }
        RowInvariants { i, floor_phi_i: f, eta, mu: (n - 2) as u32 }
    }

    /// `W_{i,1}`, `W_{i,2}`.
    pub fn first_two(&self) -> (u128, u128) {
        let f = self.floor_phi_i as u128;
        let im1 = (self.i - 1) as u128;
        (f + im1, 2 * f + im1)
    }

    /// `W*_{i,slot}` as a signed 128-bit integer, or `None` on overflow.
    pub fn dual(&self, slot: u64) -> Option<i128> {
        let a = i128::try_from(fib_u128(slot - 1)?).ok()?;
        let b = i128::try_from(fib_u128(slot)?).ok()?;
        a.checked_mul(self.floor_phi_i as i128)?.checked_sub(b.checked_mul((self.i - 1) as i128)?)
    }
}

#[inline]
fn successor_u64(x: u64) -> u64 {
    floor_phi_u64(x + 1) - 1
}

/// The entry preceding `x` in its row, if `x` is not in column 1.
fn predecessor(x: u64) -> Option<u64> {
    let p0 = floor_phi_u64(x) - x;
    (p0.saturating_sub(1)..=p0 + 2).find(|&p| p >= 1 && successor_u64(p) == x)
}

/// The unique `(i, k)` with `W_{i,k} = m`.
///
/// Walks backwards along the row with the successor rule
/// `W_{i,k+1} = ⌊φW_{i,k} + φ⁻¹⌋`, then solves `⌊φi⌋ + i − 1 = W_{i,1}` by
/// bisection on `i`.
pub fn locate(m: u64) -> Result<(u64, u64)> {
    if m == 0 || m >= 1u64 << 60 {
        return Err(invalid("locate needs 1 ≤ m < 2^60"));
    }
    let mut x = m;
    let mut k = 1u64;
    while let Some(p) = predecessor(x) {
        x = p;
        k += 1;
    }
    let start = |i: u64| floor_phi_u64(i) + i - 1;
    let (mut lo, mut hi) = (1u64, x);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if start(mid) < x {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if start(lo) != x {
        return Err(invalid("value is not a column-1 Wythoff entry"));
    }
    Ok((lo, k))
}

/// All rows `i` with `n − μ_i > 1`, each with `k_max = n − μ_i − 1`.
///
/// The entries `W_{i,k}`, `1 ≤ k ≤ k_max`, are exactly the integers below
/// `F_n/2`.
pub fn rows_below_half_fib(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut i = 1u64;
    loop {
        let mu = RowInvariants::new(i).mu as u64;
        if n <= mu + 1 {
            return out;
        }
        out.push((i, n - mu - 1));
        i += 1;
    }
}

/// The solution `(i, k, n) = ((F_{3ℓ−2}+1)/2, 1, 3ℓ)` of `W_{i,k} = F_n/2`.
pub fn half_fib_witness(l: u64) -> Result<(BigInt, u64, u64)> {
    if l == 0 {
        return Err(invalid("ℓ must be at least 1"));
    }
    let i: BigInt = (fib(3 * l - 2) + 1u32) / 2u32;
    let n = 3 * l;
    // W_{i,1} = ⌊φi⌋ + i − 1
    let w1 = floor_phi_big(&i) + &i - BigInt::one();
    if BigInt::from(2) * &w1 != fib(n) {
        return Err(invalid("half-Fibonacci witness failed to verify"));
    }
    Ok((i, 1, n))
}
