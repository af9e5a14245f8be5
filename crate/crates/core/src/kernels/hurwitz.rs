//! Hurwitz zeta `ζ(σ, a) = Σ_{n≥0} (n + a)^{−σ}` for real `σ > 1`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bernoulli::{bernoulli_numbers, factorial};
use crate::error::{invalid, Result};
use crate::real::Real;

const MAX_ORDER: usize = 30;

/// Evaluator with the Euler–Maclaurin coefficients `B_{2j}/(2j)!` cached.
///
/// The first `max(N₀, ⌈σ⌉ + 10)` terms are summed directly, where `N₀` is 20
/// in `f64` and 40 in wider formats; the tail is the Euler–Maclaurin
/// expansion, truncated once a correction falls below `tol` relative to the
/// running value.
#[derive(Clone, Debug)]
pub struct HurwitzZeta<R> {
    coeffs: Vec<R>,
    tol: f64,
    min_direct: usize,
}

impl<R: Real> Default for HurwitzZeta<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Real> HurwitzZeta<R> {
    pub fn new() -> Self {
        Self::with_tolerance(4.0 * R::EPSILON)
    }

    pub fn with_tolerance(tol: f64) -> Self {
        let b = bernoulli_numbers(2 * MAX_ORDER);
        let coeffs = (1..=MAX_ORDER)
            .map(|j| {
                let f = BigRational::from_integer(factorial(2 * j as u64));
                R::from_rational(&(&b[2 * j] / f))
            })
            .collect();
        let min_direct = if R::BITS > 53 { 40 } else { 20 };
        HurwitzZeta { coeffs, tol, min_direct }
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// `ζ(s, a)` for `s > 1`, `a > 0`.
    pub fn eval(&self, s: R, a: R) -> Result<R> {
        if !(s > R::one()) {
            return Err(invalid(format!("Hurwitz zeta needs sigma > 1, got {s}")));
        }
        if !(a > R::zero()) {
            return Err(invalid(format!("Hurwitz zeta needs a > 0, got {a}")));
        }
        let ceil_s = libm::ceil(s.to_f64()) as usize;
        let n = self.min_direct.max(ceil_s + 10);
        // smallest terms first
        let mut direct = R::zero();
        for k in (0..n).rev() {
            direct += (R::from_u64(k as u64) + a).powf(-s);
        }
        let x = R::from_u64(n as u64) + a;
        let xs = x.powf(-s);
        let mut tail = x * xs / (s - R::one()) + xs / R::from_f64(2.0);
        let x2 = x * x;
        let mut fac = s * xs / x;
        let mut prev = f64::INFINITY;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                let k = R::from_u64(2 * j as u64);
                fac = fac * (s + k - R::one()) * (s + k) / x2;
            }
            let term = *c * fac;
            tail += term;
            let mag = libm::fabs(term.to_f64());
            if mag <= self.tol * libm::fabs((direct + tail).to_f64()) || mag > prev {
                break;
            }
            prev = mag;
        }
        Ok(direct + tail)
    }

    /// Riemann zeta `ζ(s) = ζ(s, 1)`.
    pub fn riemann(&self, s: R) -> Result<R> {
        self.eval(s, R::one())
    }
}

/// `ζ(σ, a)` in `f64` with a fresh evaluator.
pub fn hurwitz_zeta(sigma: f64, a: f64) -> Result<f64> {
    HurwitzZeta::<f64>::new().eval(sigma, a)
}

/// `ζ(2s)` as an exact multiple of `π^{2s}`: returns `|B_{2s}|(2)^{2s−1}/(2s)!`.
pub fn zeta_even_over_pi_pow(s: u64) -> BigRational {
    let b = bernoulli_numbers(2 * s as usize).pop().expect("non-empty");
    let b = if b < BigRational::from_integer(BigInt::from(0)) { -b } else { b };
    b * BigRational::from_integer(BigInt::from(2).pow(2 * s as u32 - 1)) / BigRational::from_integer(factorial(2 * s))
}
