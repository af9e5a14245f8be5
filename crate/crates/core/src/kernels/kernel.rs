//! Symmetric 1-periodic weights `f` entering the Fibonacci sums.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::cot::bernoulli_kernel_coeffs;
use super::hurwitz::HurwitzZeta;
use crate::error::{invalid, Result};
use crate::real::Real;

/// Which weight a [`Kernel`] is.
#[derive(Clone, Debug, PartialEq)]
pub enum KernelKind {
    /// `f ≡ 1`.
    One,
    /// `f_σ(a) = sin^σ(πa)(ζ(σ,a) + ζ(σ,1−a))`, `f_σ(0) = π^σ`.
    FSigma { sigma: f64 },
    /// `Σ_j a_j cos^{2j}(πt)`.
    Trig { coeffs: Vec<f64> },
    /// `sin^{2s}(πt) Q_{2s−1}(cot πt)`, the weight turning the `|sin|^{−2s}`
    /// sum into the Bernoulli potential's DFT; stored as its `cos²` expansion.
    Bernoulli { s: u32, coeffs: Vec<BigInt> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Kernel {
    kind: KernelKind,
    value_at_zero: f64,
    holder_exponent: f64,
}

impl Kernel {
    pub fn one() -> Self {
        Kernel { kind: KernelKind::One, value_at_zero: 1.0, holder_exponent: 1.0 }
    }

    pub fn fsigma(sigma: f64) -> Result<Self> {
        if !(sigma > 1.0) || !sigma.is_finite() {
            return Err(invalid(format!("f_sigma needs sigma > 1, got {sigma}")));
        }
        let f0 = libm::pow(core::f64::consts::PI, sigma);
        Ok(Kernel { kind: KernelKind::FSigma { sigma }, value_at_zero: f0, holder_exponent: 1.0 })
    }

    pub fn trig(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(invalid("trig kernel needs a non-empty list of finite coefficients"));
        }
        let f0 = coeffs.iter().sum();
        Ok(Kernel { kind: KernelKind::Trig { coeffs }, value_at_zero: f0, holder_exponent: 1.0 })
    }

    /// Weight attached to `σ = 2s`.
    pub fn bernoulli(s: u32) -> Result<Self> {
        if s == 0 || s > 40 {
            return Err(invalid(format!("bern kernel needs 1 ≤ s ≤ 40, got s = {s}")));
        }
        let coeffs = bernoulli_kernel_coeffs(s);
        let f0 = coeffs.iter().fold(BigInt::zero(), |a, c| a + c).to_f64().unwrap_or(f64::INFINITY);
        Ok(Kernel { kind: KernelKind::Bernoulli { s, coeffs }, value_at_zero: f0, holder_exponent: 1.0 })
    }

    /// Parses `one`, `fsigma` (uses `sigma`), `fsigma:<s>`, `trig:a0,a1,...`
    /// or `bern:<2s>`.
    pub fn parse(spec: &str, sigma: f64) -> Result<Self> {
        let (head, arg) = match spec.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (spec, None),
        };
        let num = |s: &str| -> Result<f64> {
            s.trim().parse::<f64>().map_err(|_| invalid(format!("cannot parse number {s:?} in kernel {spec:?}")))
        };
        match (head, arg) {
            ("one", None) => Ok(Kernel::one()),
            ("fsigma", None) => Kernel::fsigma(sigma),
            ("fsigma", Some(a)) => Kernel::fsigma(num(a)?),
            ("trig", Some(a)) => Kernel::trig(a.split(',').map(num).collect::<Result<Vec<_>>>()?),
            ("bern", Some(a)) => {
                let two_s: u32 =
                    a.trim().parse().map_err(|_| invalid(format!("bern:<2s> needs an even integer, got {a:?}")))?;
                if two_s == 0 || two_s % 2 == 1 {
                    return Err(invalid(format!("bern:<2s> needs a positive even integer, got {two_s}")));
                }
                Kernel::bernoulli(two_s / 2)
            }
            _ => Err(invalid(format!(
                "unknown kernel {spec:?}; valid kernels are one, fsigma, fsigma:<sigma>, trig:<a0,a1,...>, bern:<2s>"
            ))),
        }
    }

    pub fn kind(&self) -> &KernelKind {
        &self.kind
    }

    /// `f(0)`.
    pub fn value_at_zero(&self) -> f64 {
        self.value_at_zero
    }

    /// Hölder exponent `α`. Every kernel here is continuously differentiable,
    /// so this is 1; it is recorded and not certified.
    pub fn holder_exponent(&self) -> f64 {
        self.holder_exponent
    }

    /// `f(0)` as an exact rational where it is one.
    pub fn value_at_zero_exact(&self) -> Option<BigRational> {
        match &self.kind {
            KernelKind::One => Some(BigRational::from_integer(BigInt::from(1))),
            KernelKind::FSigma { .. } => None,
            KernelKind::Trig { coeffs } => {
                coeffs.iter().try_fold(BigRational::zero(), |acc, &c| Some(acc + BigRational::from_float(c)?))
            }
            KernelKind::Bernoulli { coeffs, .. } => {
                Some(BigRational::from_integer(coeffs.iter().fold(BigInt::zero(), |a, c| a + c)))
            }
        }
    }

    /// Canonical name in the form accepted by [`Kernel::parse`].
    pub fn name(&self) -> String {
        match &self.kind {
            KernelKind::One => "one".into(),
            KernelKind::FSigma { sigma } => format!("fsigma:{sigma}"),
            KernelKind::Trig { coeffs } => {
                let parts: Vec<String> = coeffs.iter().map(|c| format!("{c}")).collect();
                format!("trig:{}", parts.join(","))
            }
            KernelKind::Bernoulli { s, .. } => format!("bern:{}", 2 * s),
        }
    }

    pub fn evaluator<R: Real>(&self) -> KernelEval<R> {
        let body = match &self.kind {
            KernelKind::One => EvalBody::One,
            KernelKind::FSigma { sigma } => EvalBody::FSigma { sigma: R::from_f64(*sigma), hz: HurwitzZeta::new() },
            KernelKind::Trig { coeffs } => EvalBody::Cos2(coeffs.iter().map(|&c| R::from_f64(c)).collect()),
            KernelKind::Bernoulli { coeffs, .. } => EvalBody::Cos2(coeffs.iter().map(R::from_bigint).collect()),
        };
        let f0 = match &self.kind {
            KernelKind::FSigma { sigma } => R::pi().powf(R::from_f64(*sigma)),
            KernelKind::Bernoulli { coeffs, .. } => R::from_bigint(&coeffs.iter().fold(BigInt::zero(), |a, c| a + c)),
            _ => R::from_f64(self.value_at_zero),
        };
        KernelEval { body, f0 }
    }
}

#[derive(Clone, Debug)]
enum EvalBody<R> {
    One,
    FSigma { sigma: R, hz: HurwitzZeta<R> },
    Cos2(Vec<R>),
}

/// A [`Kernel`] prepared for evaluation in precision `R`.
#[derive(Clone, Debug)]
pub struct KernelEval<R> {
    body: EvalBody<R>,
    f0: R,
}

impl<R: Real> KernelEval<R> {
    pub fn value_at_zero(&self) -> R {
        self.f0
    }

    pub fn is_constant_one(&self) -> bool {
        matches!(self.body, EvalBody::One)
    }

    /// `f(t)` for any real `t`, using 1-periodicity.
    pub fn eval(&self, t: R) -> R {
        let a = t - t.floor();
        match &self.body {
            EvalBody::One => R::one(),
            EvalBody::FSigma { sigma, hz } => {
                if a == R::zero() {
                    return self.f0;
                }
                let zsum = hz.eval(*sigma, a).expect("sigma > 1, a in (0,1)")
                    + hz.eval(*sigma, R::one() - a).expect("sigma > 1, a in (0,1)");
                a.sin_pi().abs().powf(*sigma) * zsum
            }
            EvalBody::Cos2(c) => {
                let cs = a.cos_pi();
                let c2 = cs * cs;
                c.iter().rev().fold(R::zero(), |acc, &k| acc * c2 + k)
            }
        }
    }
}

/// `f_σ(a)` in `f64`.
pub fn f_sigma(sigma: f64, a: f64) -> Result<f64> {
    Ok(Kernel::fsigma(sigma)?.evaluator::<f64>().eval(a))
}
