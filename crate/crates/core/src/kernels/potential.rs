//! The potentials `K_{σ,p}(t) = 1 + p Σ_{m≠0} e^{2πimt}/|2πm|^σ`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::{bernoulli_poly_coeffs, factorial, horner};
use super::even_sigma;
use crate::error::{invalid, Result};
use crate::real::Real;
use crate::sum::tree_sum;

/// A symmetric 1-periodic pair potential `c`.
pub trait Potential<R: Real> {
    fn eval(&self, t: R) -> R;

    /// `c(j/N)` for `j = 0..N`.
    fn grid(&self, n: u64) -> Vec<R> {
        (0..n).map(|j| self.eval(R::frac(j, n))).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ConstantPotential<R>(pub R);

impl<R: Real> Potential<R> for ConstantPotential<R> {
    fn eval(&self, _t: R) -> R {
        self.0
    }
}

/// `K_{2s,p}(t) = 1 + p(−1)^{s−1}B_{2s}({t})/(2s)!`.
#[derive(Clone, Debug)]
pub struct BernoulliPotential<R> {
    s: u32,
    p: BigRational,
    scaled: Vec<BigRational>,
    scaled_r: Vec<R>,
}

impl<R: Real> BernoulliPotential<R> {
    /// `p` is taken exactly from its binary value.
    pub fn new(s: u32, p: f64) -> Result<Self> {
        let pq = BigRational::from_float(p).ok_or_else(|| invalid(format!("p must be finite, got {p}")))?;
        Self::with_exact_p(s, pq)
    }

    pub fn with_exact_p(s: u32, p: BigRational) -> Result<Self> {
        if s == 0 {
            return Err(invalid("Bernoulli potential needs s ≥ 1"));
        }
        let mut scale = &p / BigRational::from_integer(factorial(2 * s as u64));
        if s % 2 == 0 {
            scale = -scale;
        }
        let mut scaled: Vec<BigRational> = bernoulli_poly_coeffs(2 * s as usize).iter().map(|c| c * &scale).collect();
        scaled[0] += BigRational::one();
        let scaled_r = scaled.iter().map(R::from_rational).collect();
        Ok(BernoulliPotential { s, p, scaled, scaled_r })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, t: &BigRational) -> BigRational {
        let a = t - t.floor();
        horner(&self.scaled, &a)
    }
}

impl<R: Real> Potential<R> for BernoulliPotential<R> {
    fn eval(&self, t: R) -> R {
        let a = t - t.floor();
        self.scaled_r.iter().rev().fold(R::zero(), |acc, &c| acc * a + c)
    }

    fn grid(&self, n: u64) -> Vec<R> {
        let nb = BigInt::from(n);
        (0..n).map(|j| R::from_rational(&self.eval_exact(&BigRational::new(BigInt::from(j), nb.clone())))).collect()
    }
}

/// `K_{σ,p}` from its cosine series truncated at `M` terms, for any `σ > 1`.
///
/// `M` is the least integer with `2p/((2π)^σ(σ−1)M^{σ−1}) ≤ tol`.
#[derive(Clone, Debug)]
pub struct FourierPotential<R> {
    sigma: R,
    p: R,
    terms: u64,
    tail_bound: f64,
}

/// Refuse series longer than this.
const MAX_TERMS: u64 = 4_000_000_000;

impl<R: Real> FourierPotential<R> {
    pub fn new(sigma: f64, p: f64, tol: f64) -> Result<Self> {
        if !(sigma > 1.0) || !(p > 0.0) || !(tol > 0.0) {
            return Err(invalid(format!("Fourier potential needs sigma > 1, p > 0, tol > 0; got {sigma}, {p}, {tol}")));
        }
        let two_pi_s = libm::pow(2.0 * core::f64::consts::PI, sigma);
        let m = libm::pow(2.0 * p / (two_pi_s * (sigma - 1.0) * tol), 1.0 / (sigma - 1.0));
        if !(m < MAX_TERMS as f64) {
            return Err(invalid(format!("Fourier series for sigma = {sigma} needs more than {MAX_TERMS} terms")));
        }
        let terms = (libm::ceil(m) as u64).max(1);
        Ok(Self::with_terms(sigma, p, terms))
    }

    pub fn with_terms(sigma: f64, p: f64, terms: u64) -> Self {
        let two_pi_s = libm::pow(2.0 * core::f64::consts::PI, sigma);
        let tail_bound = 2.0 * p / (two_pi_s * (sigma - 1.0) * libm::pow(terms as f64, sigma - 1.0));
        FourierPotential { sigma: R::from_f64(sigma), p: R::from_f64(p), terms, tail_bound }
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// Bound on the neglected tail `Σ_{|m|>M}`.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    fn prefactor(&self) -> R {
        let two_pi = R::pi() * R::from_f64(2.0);
        R::from_f64(2.0) * self.p / two_pi.powf(self.sigma)
    }
}

impl<R: Real> Potential<R> for FourierPotential<R> {
    fn eval(&self, t: R) -> R {
        let a = t - t.floor();
        let s = self.sigma;
        let sum = tree_sum(1, self.terms + 1, &|m| {
            let arg = a.frac_mul(m) * R::from_f64(2.0);
            R::from_u64(m).powf(-s) * arg.cos_pi()
        });
        R::one() + self.prefactor() * sum
    }

    /// Buckets `m^{−σ}` by `m mod N`, so the series is summed once for the
    /// whole grid.
    fn grid(&self, n: u64) -> Vec<R> {
        let s = self.sigma;
        let q = self.terms.div_ceil(n);
        let bucket: Vec<R> = (0..n)
            .map(|r| {
                if r == 0 {
                    tree_sum(1, q + 1, &|k| R::from_u64(k * n).powf(-s))
                } else {
                    tree_sum(0, q, &|k| R::from_u64(r + k * n).powf(-s))
                }
            })
            .collect();
        let pre = self.prefactor();
        let mut out = vec![R::zero(); n as usize];
        for (j, slot) in out.iter_mut().enumerate() {
            let j = j as u64;
            let acc = tree_sum(0, n, &|r| {
                let turns = R::frac(2 * ((r * j) % n), n);
                bucket[r as usize] * turns.cos_pi()
            });
            *slot = R::one() + pre * acc;
        }
        out
    }
}

/// `K_{σ,p}`: exact Bernoulli form for even integer `σ`, cosine series otherwise.
#[derive(Clone, Debug)]
pub enum KPotential<R> {
    Bernoulli(BernoulliPotential<R>),
    Fourier(FourierPotential<R>),
}

impl<R: Real> KPotential<R> {
    pub const FOURIER_TOL: f64 = 1e-12;

    pub fn new(sigma: f64, p: f64) -> Result<Self> {
        if !(p > 0.0) {
            return Err(invalid(format!("potential needs p > 0, got {p}")));
        }
        match even_sigma(sigma) {
            Some(s) => Ok(KPotential::Bernoulli(BernoulliPotential::new(s, p)?)),
            None => Ok(KPotential::Fourier(FourierPotential::new(sigma, p, Self::FOURIER_TOL)?)),
        }
    }

    /// Truncation error bound of the evaluation route (0 when exact).
    pub fn tail_bound(&self) -> f64 {
        match self {
            KPotential::Bernoulli(_) => 0.0,
            KPotential::Fourier(f) => f.tail_bound(),
        }
    }
}

impl<R: Real> Potential<R> for KPotential<R> {
    fn eval(&self, t: R) -> R {
        match self {
            KPotential::Bernoulli(b) => b.eval(t),
            KPotential::Fourier(f) => f.eval(t),
        }
    }

    fn grid(&self, n: u64) -> Vec<R> {
        match self {
            KPotential::Bernoulli(b) => b.grid(n),
            KPotential::Fourier(f) => f.grid(n),
        }
    }
}

/// `K_{σ,p}(t)`.
pub fn potential_k<R: Real>(sigma: f64, p: f64, t: R) -> Result<R> {
    Ok(KPotential::<R>::new(sigma, p)?.eval(t))
}

/// `K_{2s,p}(0) = 1 + p(−1)^{s−1}B_{2s}/(2s)!` exactly.
pub fn bernoulli_potential_at_zero(s: u32, p: &BigRational) -> BigRational {
    BernoulliPotential::<f64>::with_exact_p(s, p.clone()).map(|b| b.eval_exact(&BigRational::zero())).expect("s ≥ 1")
}
