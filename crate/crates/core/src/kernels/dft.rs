//! Discrete Fourier coefficients `ĉ_N(m)` of `K_{σ,p}` sampled on `k/N`.
//!
//! With `ĉ_N(m) = N⁻¹ Σ_k K(k/N) e^{−2πimk/N}` the lattice energy is
//! `E(Λ_{N,h}) = N² Σ_m ĉ_N(m) ĉ_N(hm)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::bernoulli::{bernoulli_number, factorial};
use super::cot::{cot_derivative_poly, cot_power_sums};
use super::hurwitz::HurwitzZeta;
use super::potential::bernoulli_potential_at_zero;
use crate::error::{invalid, Result};
use crate::real::Real;
use crate::sum::tree_sum;

/// Hurwitz route: `ĉ(0) = 1 + 2pζ(σ)/(2πN)^σ` and
/// `ĉ(m) = p(ζ(σ, m/N) + ζ(σ, 1 − m/N))/(2πN)^σ`.
pub fn dft_coeffs<R: Real>(sigma: R, p: R, n: u64) -> Result<Vec<R>> {
    dft_coeffs_with(&HurwitzZeta::new(), sigma, p, n)
}

pub fn dft_coeffs_with<R: Real>(hz: &HurwitzZeta<R>, sigma: R, p: R, n: u64) -> Result<Vec<R>> {
    if n == 0 {
        return Err(invalid("DFT table needs N ≥ 1"));
    }
    let scale = p / (R::from_f64(2.0) * R::pi() * R::from_u64(n)).powf(sigma);
    let mut out = Vec::with_capacity(n as usize);
    out.push(R::one() + R::from_f64(2.0) * scale * hz.riemann(sigma)?);
    for m in 1..n {
        let a = R::frac(m, n);
        let b = R::frac(n - m, n);
        out.push(scale * (hz.eval(sigma, a)? + hz.eval(sigma, b)?));
    }
    Ok(out)
}

/// Cot route for `σ = 2s`:
/// `ĉ(m) = p Q_{2s−1}(cot(πm/N))/((2s−1)!(2N)^{2s})` for `m ≥ 1`, and
/// `ĉ(0) = 1 + p(−1)^{s−1}B_{2s}/((2s)! N^{2s})`.
pub fn dft_coeffs_bernoulli<R: Real>(s: u32, p: R, n: u64) -> Result<Vec<R>> {
    if s == 0 || n == 0 {
        return Err(invalid(format!("Bernoulli DFT needs s ≥ 1 and N ≥ 1, got s = {s}, N = {n}")));
    }
    let q: Vec<R> = cot_derivative_poly(2 * s - 1).iter().map(R::from_bigint).collect();
    let two_s = 2 * s as i32;
    let zero_term = {
        let mut b = bernoulli_number(2 * s as usize) / BigRational::from_integer(factorial(2 * s as u64));
        if s % 2 == 0 {
            b = -b;
        }
        R::from_rational(&b) / R::from_u64(n).powi(two_s)
    };
    let scale = p / (R::from_bigint(&factorial(2 * s as u64 - 1)) * R::from_u64(2 * n).powi(two_s));
    let mut out = Vec::with_capacity(n as usize);
    out.push(R::one() + p * zero_term);
    for m in 1..n {
        let t = R::frac(m, n);
        let c = t.cos_pi() / t.sin_pi();
        out.push(scale * q.iter().rev().fold(R::zero(), |acc, &k| acc * c + k));
    }
    Ok(out)
}

/// `Σ_m ĉ(m)` in the cot route, evaluated exactly through the power sums of
/// `cot(πm/N)`, together with `K_{2s,p}(0)`. The two agree.
pub fn bernoulli_dft_normalization(s: u32, p: &BigRational, n: u64) -> (BigRational, BigRational) {
    assert!(s >= 1 && n >= 1);
    let q = cot_derivative_poly(2 * s - 1);
    let sums = cot_power_sums(n, q.len() - 1);
    let poly_sum = q.iter().zip(&sums).fold(BigRational::zero(), |acc, (k, pk)| acc + pk * k);
    let nn = BigInt::from(n).pow(2 * s);
    let scale = p / BigRational::from_integer(factorial(2 * s as u64 - 1) * BigInt::from(2).pow(2 * s) * &nn);
    let mut b = bernoulli_number(2 * s as usize) / BigRational::from_integer(factorial(2 * s as u64) * &nn);
    if s % 2 == 0 {
        b = -b;
    }
    let c0 = BigRational::from_integer(1.into()) + p * b;
    (c0 + scale * poly_sum, bernoulli_potential_at_zero(s, p))
}

/// `K(k/N) = Σ_m ĉ(m) cos(2πmk/N)` for a symmetric table.
pub fn inverse_dft<R: Real>(coeffs: &[R]) -> Vec<R> {
    let n = coeffs.len() as u64;
    (0..n).map(|k| tree_sum(0, n, &|m| coeffs[m as usize] * R::frac(2 * ((m * k) % n), n).cos_pi())).collect()
}
