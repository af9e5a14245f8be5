//! Elementary inequalities for `1/sin(πx)` used in the error analysis,
//! sampled on grids.

use core::fmt;

use crate::real::Real;

/// Relative and absolute slack granted to the right-hand sides.
pub const SLACK: f64 = 1e-15;

pub const DEFAULT_SIGMAS: [f64; 9] = [1.001, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IneqViolation {
    /// 1 to 4.
    pub which: u8,
    pub sigma: f64,
    pub x: f64,
    pub y: f64,
    pub lhs: f64,
    pub rhs: f64,
}

impl fmt::Display for IneqViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "inequality ({}) fails at sigma={}, x={}, y={}: {} > {}",
            self.which, self.sigma, self.x, self.y, self.lhs, self.rhs
        )
    }
}

fn holds(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + SLACK * rhs.abs().max(1.0)
}

/// (i) `1/sin(πx) ≤ 1/x` on `(0, 2/3]`.
pub fn ineq_i(x: f64) -> (f64, f64) {
    (1.0 / x.sin_pi(), 1.0 / x)
}

/// (ii) `|sin(πx)^{−σ} − sin(πy)^{−σ}| ≤ σπ^σ(1/x + 1/y)^{σ−1}|1/x − 1/y|`.
pub fn ineq_ii(sigma: f64, x: f64, y: f64) -> (f64, f64) {
    let lhs = (libm::pow(x.sin_pi(), -sigma) - libm::pow(y.sin_pi(), -sigma)).abs();
    let rhs = sigma
        * libm::pow(core::f64::consts::PI, sigma)
        * libm::pow(1.0 / x + 1.0 / y, sigma - 1.0)
        * (1.0 / x - 1.0 / y).abs();
    (lhs, rhs)
}

/// (iii) `(πx/sin(πx))^σ − 1 ≤ 4^{σ+1}x²` on `(0, 2/3]`.
pub fn ineq_iii(sigma: f64, x: f64) -> (f64, f64) {
    let r = core::f64::consts::PI * x / x.sin_pi();
    (libm::pow(r, sigma) - 1.0, libm::pow(4.0, sigma + 1.0) * x * x)
}

/// (iv) `|(1 − x)^{−σ} − 1| ≤ 4^σ|x|` on `|x| ≤ 2/3`.
pub fn ineq_iv(sigma: f64, x: f64) -> (f64, f64) {
    ((libm::pow(1.0 - x, -sigma) - 1.0).abs(), libm::pow(4.0, sigma) * x.abs())
}

/// Checks all four on `points`-point grids for each `σ`. Returns the number
/// of comparisons made, or the first violation.
pub fn check_calc_inequalities(points: usize, sigmas: &[f64]) -> Result<u64, IneqViolation> {
    let grid = |j: usize| (j as f64) * (2.0 / 3.0) / points as f64;
    let mut count = 0u64;
    let fail = |which, sigma, x, y, (lhs, rhs): (f64, f64)| IneqViolation { which, sigma, x, y, lhs, rhs };
    for j in 1..=points {
        let x = grid(j);
        let v = ineq_i(x);
        count += 1;
        if !holds(v.0, v.1) {
            return Err(fail(1, f64::NAN, x, f64::NAN, v));
        }
    }
    for &sigma in sigmas {
        for j in 1..=points {
            let x = grid(j);
            for l in 1..=points {
                let v = ineq_ii(sigma, x, grid(l));
                count += 1;
                if !holds(v.0, v.1) {
                    return Err(fail(2, sigma, x, grid(l), v));
                }
            }
            let v = ineq_iii(sigma, x);
            count += 1;
            if !holds(v.0, v.1) {
                return Err(fail(3, sigma, x, f64::NAN, v));
            }
        }
        for j in 0..=2 * points {
            let x = (j as f64 / points as f64 - 1.0) * (2.0 / 3.0);
            let v = ineq_iv(sigma, x);
            count += 1;
            if !holds(v.0, v.1) {
                return Err(fail(4, sigma, x, f64::NAN, v));
            }
        }
    }
    Ok(count)
}
