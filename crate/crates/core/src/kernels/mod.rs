//! Bernoulli numbers, the Hurwitz zeta function, weights `f`, the
//! potentials `K_{σ,p}` and their DFT tables.

pub mod bernoulli;
pub mod cot;
pub mod dft;
pub mod hurwitz;
pub mod ineq;
pub mod kernel;
pub mod potential;

pub use bernoulli::{bernoulli_number, bernoulli_poly};
pub use dft::{dft_coeffs, dft_coeffs_bernoulli};
pub use hurwitz::{hurwitz_zeta, HurwitzZeta};
pub use kernel::{f_sigma, Kernel, KernelEval, KernelKind};
pub use potential::{potential_k, BernoulliPotential, ConstantPotential, FourierPotential, KPotential, Potential};

/// `Some(s)` when `sigma = 2s` for an integer `1 ≤ s ≤ 64`.
pub fn even_sigma(sigma: f64) -> Option<u32> {
    let h = sigma / 2.0;
    if h >= 1.0 && h <= 64.0 && h == libm::round(h) {
        Some(h as u32)
    } else {
        None
    }
}
