//! Odd derivatives of `g(x) = −cot(πx)` as polynomials in `cot(πx)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::binomial;

/// Integer coefficients (ascending in `c`) of `Q_r` with
/// `g^{(r)}(x) = π^r Q_r(cot πx)`.
///
/// From `d/dx cot(πx) = −π(1 + cot²(πx))`: `Q_0 = −c` and
/// `Q_{r+1} = −(1 + c²) Q_r′`.
pub fn cot_derivative_poly(r: u32) -> Vec<BigInt> {
    let mut q = vec![BigInt::zero(), -BigInt::one()];
    for _ in 0..r {
        let d: Vec<BigInt> = q.iter().enumerate().skip(1).map(|(k, c)| c * k).collect();
        let mut next = vec![BigInt::zero(); d.len() + 2];
        for (k, c) in d.iter().enumerate() {
            next[k] -= c;
            next[k + 2] -= c;
        }
        while next.len() > 1 && next.last().is_some_and(Zero::is_zero) {
            next.pop();
        }
        q = next;
    }
    q
}

/// Coefficients `a_j` with `sin^{2s}(πx) Q_{2s−1}(cot πx) = Σ_j a_j cos^{2j}(πx)`.
///
/// `Q_{2s−1}` is even of degree `2s`, so substituting `c² = C/(1 − C)` with
/// `C = cos²` gives `Σ_j q_{2j} C^j (1 − C)^{s−j}`.
pub fn bernoulli_kernel_coeffs(s: u32) -> Vec<BigInt> {
    assert!(s >= 1);
    let q = cot_derivative_poly(2 * s - 1);
    let s = s as usize;
    let mut out = vec![BigInt::zero(); s + 1];
    for j in 0..=s {
        let qj = q.get(2 * j).cloned().unwrap_or_default();
        if qj.is_zero() {
            continue;
        }
        // C^j (1 − C)^{s−j}
        for i in 0..=(s - j) {
            let b = binomial((s - j) as u64, i as u64);
            let term = &qj * b;
            if i % 2 == 0 {
                out[j + i] += term;
            } else {
                out[j + i] -= term;
            }
        }
    }
    out
}

/// Power sums `p_k = Σ_{m=1}^{n−1} cot^k(πm/n)` for `k = 0..=kmax`, exact.
///
/// The values `cot(πm/n)` are the roots of
/// `Σ_j (−1)^j C(n, 2j+1) x^{n−1−2j}`; Newton's identities turn its
/// coefficients into power sums.
pub fn cot_power_sums(n: u64, kmax: usize) -> Vec<BigRational> {
    assert!(n >= 1);
    let deg = (n - 1) as usize;
    let lead = BigRational::from_integer(BigInt::from(n));
    // elementary symmetric polynomials e_1..e_deg of the roots
    let mut e = vec![BigRational::zero(); kmax.max(deg) + 1];
    e[0] = BigRational::one();
    for (k, ek) in e.iter_mut().enumerate().take(deg + 1).skip(1) {
        if k % 2 == 1 {
            continue;
        }
        let j = k / 2;
        // monic coefficient of x^{deg−k} is (−1)^j C(n, 2j+1)/n; e_k = (−1)^k times it
        let c = BigRational::from_integer(binomial(n, 2 * j as u64 + 1)) / &lead;
        *ek = if j % 2 == 0 { c } else { -c };
    }
    let mut p = vec![BigRational::zero(); kmax + 1];
    p[0] = BigRational::from_integer(BigInt::from(deg));
    for k in 1..=kmax {
        let mut acc = BigRational::zero();
        for i in 1..k {
            let t = &e[i] * &p[k - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        if k <= deg {
            let t = &e[k] * BigRational::from_integer(BigInt::from(k));
            if k % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        p[k] = acc;
    }
    p
}
