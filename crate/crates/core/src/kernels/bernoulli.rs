//! Bernoulli numbers and polynomials in exact rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `B_0, …, B_n` with the `B_1 = −1/2` convention.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * BigRational::from_integer(binomial(m as u64 + 1, k as u64));
            }
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli_number(m: usize) -> BigRational {
    bernoulli_numbers(m).pop().expect("non-empty")
}

/// Coefficients of `B_m(t)` in ascending powers of `t`.
pub fn bernoulli_poly_coeffs(m: usize) -> Vec<BigRational> {
    let b = bernoulli_numbers(m);
    let mut c = vec![BigRational::zero(); m + 1];
    for (k, ck) in c.iter_mut().enumerate() {
        // B_m(t) = Σ_k C(m,k) B_{m−k} t^k
        *ck = &b[m - k] * BigRational::from_integer(binomial(m as u64, k as u64));
    }
    c
}

pub fn horner(coeffs: &[BigRational], t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

/// `B_m(t)`; callers reduce `t` modulo 1 first when they mean the periodic
/// function.
pub fn bernoulli_poly(m: usize, t: &BigRational) -> BigRational {
    horner(&bernoulli_poly_coeffs(m), t)
}

/// `n!` as an integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}
