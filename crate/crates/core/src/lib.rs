//! Exact and floating-point building blocks for tensor-product energies of
//! Fibonacci lattices.
//!
//! The crate is `no_std` and needs only `alloc`. Exact work (the ring
//! Z[φ], Wythoff arrays, Bernoulli numbers, generalized Dedekind sums) uses
//! arbitrary-precision integers and rationals. Floating-point work is generic
//! over [`Real`], implemented for `f64` and for the double-double [`Dd`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod checks;
pub mod dedekind;
pub mod energy;
pub mod error;
pub mod golden;
pub mod kernels;
pub mod real;
pub mod sum;
pub mod wythoff;

pub use error::{Error, Result};
pub use golden::GoldenInt;
pub use kernels::Kernel;
pub use real::{Dd, Real};
