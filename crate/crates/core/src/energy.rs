//! Rank-1 lattices, tensor-product energies and the Fibonacci sums `Σ_n`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::golden::fib_u64;
use crate::kernels::hurwitz::HurwitzZeta;
use crate::kernels::potential::{BernoulliPotential, Potential};
use crate::kernels::KernelEval;
use crate::real::Real;
use crate::sum::{tree_sum, Reducer};
use crate::wythoff::{rows_below_half_fib, RowInvariants};

/// `Λ_{N,h} = {(k/N, {hk/N}) : 0 ≤ k < N}` with `gcd(N, h) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalLattice {
    n: u64,
    h: u64,
}

impl RationalLattice {
    pub fn new(n: u64, h: u64) -> Result<Self> {
        if n == 0 || h == 0 || h > n {
            return Err(invalid(format!("lattice needs 1 ≤ h ≤ N, got N = {n}, h = {h}")));
        }
        if n.gcd(&h) != 1 {
            return Err(Error::NotCoprime(n, h));
        }
        Ok(RationalLattice { n, h })
    }

    /// `Φ_n = Λ_{F_n, F_{n−1}}` for `2 ≤ n ≤ 92`.
    pub fn fibonacci(n: u64) -> Result<Self> {
        if !(2..=92).contains(&n) {
            return Err(invalid(format!("Fibonacci lattice index must be in 2..=92, got {n}")));
        }
        let big = fib_u64(n).expect("n ≤ 92");
        let small = fib_u64(n - 1).expect("n ≤ 92");
        RationalLattice::new(big, small)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    /// `hk mod N`.
    #[inline]
    pub fn residue(&self, k: u64) -> u64 {
        ((k as u128 * self.h as u128) % self.n as u128) as u64
    }

    pub fn points<R: Real>(&self) -> Vec<(R, R)> {
        (0..self.n).map(|k| (R::frac(k, self.n), R::frac(self.residue(k), self.n))).collect()
    }
}

/// The `N` points of the lattice as exact rationals.
pub fn lattice_points(lat: &RationalLattice) -> Vec<(BigRational, BigRational)> {
    let n = BigInt::from(lat.n);
    (0..lat.n)
        .map(|k| {
            (BigRational::new(BigInt::from(k), n.clone()), BigRational::new(BigInt::from(lat.residue(k)), n.clone()))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergyMethod {
    Direct,
    Dft,
    Wce,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnergyReport {
    pub value: f64,
    pub method: EnergyMethod,
    pub n: u64,
    pub h: u64,
    pub sigma: f64,
    pub p: f64,
    pub precision_bits: u32,
    /// Bound on the truncation error of the potential evaluation, if any.
    pub tail_bound: f64,
}

/// `E_c(X) = Σ_{x,y∈X} c(x₁−y₁)c(x₂−y₂)`, all `N²` pairs.
pub fn energy_direct<R: Real, P: Potential<R> + Sync, Red: Reducer>(red: &Red, c: &P, points: &[(R, R)]) -> R {
    let n = points.len() as u64;
    red.tree_sum(0, n * n, &|idx| {
        let (x, y) = (points[(idx / n) as usize], points[(idx % n) as usize]);
        c.eval(x.0 - y.0) * c.eval(x.1 - y.1)
    })
}

/// `E_c(Λ_{N,h})` by the full double sum, with `c` sampled once on the grid.
pub fn energy_direct_lattice<R: Real, P: Potential<R>, Red: Reducer>(red: &Red, c: &P, lat: &RationalLattice) -> R {
    let table = c.grid(lat.n);
    let n = lat.n;
    red.tree_sum(0, n * n, &|idx| {
        let (k, l) = (idx / n, idx % n);
        let d = (k + n - l) % n;
        table[d as usize] * table[lat.residue(d) as usize]
    })
}

/// Exact energy for the Bernoulli potential.
pub fn energy_direct_exact<R: Real>(c: &BernoulliPotential<R>, lat: &RationalLattice) -> BigRational {
    let n = lat.n;
    let nb = BigInt::from(n);
    let table: Vec<BigRational> =
        (0..n).map(|j| c.eval_exact(&BigRational::new(BigInt::from(j), nb.clone()))).collect();
    let mut acc = BigRational::zero();
    for k in 0..n {
        for l in 0..n {
            let d = (k + n - l) % n;
            acc += &table[d as usize] * &table[lat.residue(d) as usize];
        }
    }
    acc
}

/// `E(Λ_{N,h}) = N² Σ_m ĉ(m)ĉ(hm)` with `ĉ` extended `N`-periodically.
pub fn energy_dft<R: Real>(coeffs: &[R], lat: &RationalLattice) -> Result<R> {
    if coeffs.len() as u64 != lat.n {
        return Err(Error::LengthMismatch { expected: lat.n as usize, got: coeffs.len() });
    }
    let s = tree_sum(0, lat.n, &|m| coeffs[m as usize] * coeffs[lat.residue(m) as usize]);
    let nn = R::from_u64(lat.n);
    Ok(nn * nn * s)
}

/// `e_{σ,p}(Λ_{N,h}) = −1 + E_{σ,p}/N²` from its Hurwitz-zeta expansion.
pub fn wce_e<R: Real, Red: Reducer>(
    red: &Red,
    hz: &HurwitzZeta<R>,
    sigma: R,
    p: R,
    lat: &RationalLattice,
) -> Result<R> {
    let n = lat.n;
    let a = (R::from_f64(2.0) * R::pi() * R::from_u64(n)).powf(sigma);
    let z = hz.riemann(sigma)?;
    let four = R::from_f64(4.0);
    let pair = |m: u64| -> R {
        hz.eval(sigma, R::frac(m, n)).expect("sigma > 1") + hz.eval(sigma, R::frac(n - m, n)).expect("sigma > 1")
    };
    let cross = red.tree_sum(1, n, &|m| pair(m) * pair(lat.residue(m)));
    Ok(p * four * z / a + p * p * four * z * z / (a * a) + p * p * cross / (a * a))
}

#[inline]
fn sum_term<R: Real>(f: &KernelEval<R>, sigma: R, n: u64, a: u64, b: u64, one: bool) -> R {
    let (ta, tb) = (R::frac(a, n), R::frac(b, n));
    let den = (ta.sin_pi() * tb.sin_pi()).abs().powf(sigma);
    if one {
        R::one() / den
    } else {
        f.eval(ta) * f.eval(tb) / den
    }
}

fn checked_fib_pair(n: u64) -> Result<(u64, u64)> {
    if !(2..=92).contains(&n) {
        return Err(invalid(format!("Fibonacci sum index must be in 2..=92, got {n}")));
    }
    Ok((fib_u64(n).expect("n ≤ 92"), fib_u64(n - 1).expect("n ≤ 92")))
}

/// `Σ_n = F_n^{−σ} Σ_{m=1}^{F_n−1} f(m/F_n)f(F_{n−1}m/F_n)/|sin(πm/F_n)sin(πF_{n−1}m/F_n)|^σ`.
pub fn fib_sum<R: Real, Red: Reducer>(red: &Red, n: u64, sigma: R, f: &KernelEval<R>) -> Result<R> {
    let (big, small) = checked_fib_pair(n)?;
    let one = f.is_constant_one();
    let lat = RationalLattice { n: big, h: small };
    let s = red.tree_sum(1, big, &|m| sum_term(f, sigma, big, m, lat.residue(m), one));
    Ok(s / R::from_u64(big).powf(sigma))
}

/// One term per entry `W_{i,k} < F_n/2` of row `i`, paired with its dual
/// `W*_{i,n−k}`, for `k = 1..=k_max`; not doubled, not scaled by `F_n^{−σ}`.
pub fn row_terms<R: Real>(n: u64, sigma: R, f: &KernelEval<R>, i: u64) -> Result<Vec<R>> {
    let (big, _) = checked_fib_pair(n)?;
    let inv = RowInvariants::new(i);
    let mu = inv.mu as u64;
    if n <= mu + 1 {
        return Ok(Vec::new());
    }
    let one = f.is_constant_one();
    let (mut w, mut w_next) = inv.first_two();
    let mut out = Vec::with_capacity((n - mu - 1) as usize);
    for k in 1..=(n - mu - 1) {
        let dual = inv.dual(n - k).ok_or(Error::Overflow("dual entry"))?;
        out.push(sum_term(f, sigma, big, w as u64, dual as u64, one));
        let t = w + w_next;
        w = w_next;
        w_next = t;
    }
    Ok(out)
}

/// `Σ_n` summed over the Wythoff partition of `{m < F_n/2}`: each row's
/// terms are doubled for the reflection `m ↦ F_n − m`, and the middle term
/// `f(1/2)²` is added when `F_n` is even.
pub fn fib_sum_grouped<R: Real, Red: Reducer>(red: &Red, n: u64, sigma: R, f: &KernelEval<R>) -> Result<R> {
    let (big, _) = checked_fib_pair(n)?;
    let rows = rows_below_half_fib(n);
    let rows_sum = red.tree_sum(0, rows.len() as u64, &|r| {
        let terms = row_terms(n, sigma, f, rows[r as usize].0).expect("index checked above");
        tree_sum(0, terms.len() as u64, &|k| terms[k as usize])
    });
    let mut total = R::from_f64(2.0) * rows_sum;
    if big % 2 == 0 {
        let half = f.eval(R::from_f64(0.5));
        total += half * half;
    }
    Ok(total / R::from_u64(big).powf(sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::fib;
    use crate::kernels::dft::{dft_coeffs, dft_coeffs_bernoulli};
    use crate::kernels::potential::{ConstantPotential, KPotential};
    use crate::kernels::Kernel;
    use crate::real::Dd;
    use crate::sum::Sequential;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn lattice_examples() {
        let p = lattice_points(&RationalLattice::new(3, 2).unwrap());
        assert_eq!(p, [(q(0, 1), q(0, 1)), (q(1, 3), q(2, 3)), (q(2, 3), q(1, 3))]);
        let p = lattice_points(&RationalLattice::new(5, 3).unwrap());
        let want = [(0, 0), (1, 3), (2, 1), (3, 4), (4, 2)].map(|(a, b)| (q(a, 5), q(b, 5)));
        assert_eq!(p, want);
        assert_eq!(lattice_points(&RationalLattice::new(1, 1).unwrap()), [(q(0, 1), q(0, 1))]);
        assert_eq!(RationalLattice::new(6, 4), Err(Error::NotCoprime(6, 4)));
        assert!(RationalLattice::new(5, 0).is_err());
        assert_eq!(RationalLattice::fibonacci(7).unwrap(), RationalLattice::new(13, 8).unwrap());
    }

    #[test]
    fn constant_potential_energy_is_n_squared() {
        let lat = RationalLattice::new(13, 5).unwrap();
        let e = energy_direct(&Sequential, &ConstantPotential(1.0f64), &lat.points());
        assert_eq!(e, 169.0);
    }

    #[test]
    fn exact_energy_of_phi_3() {
        let lat = RationalLattice::fibonacci(3).unwrap();
        let k = BernoulliPotential::<f64>::new(1, 1.0).unwrap();
        let want = q(2, 1) * q(13, 12) * q(13, 12) + q(2, 1) * q(23, 24) * q(23, 24);
        assert_eq!(energy_direct_exact(&k, &lat), want);
        let coeffs = dft_coeffs(2.0f64, 1.0, 2).unwrap();
        let f = num_traits::ToPrimitive::to_f64(&want).unwrap();
        assert!((energy_dft(&coeffs, &lat).unwrap() - f).abs() < 1e-13);
    }

    #[test]
    fn dft_examples_and_errors() {
        let one = RationalLattice::new(1, 1).unwrap();
        assert_eq!(energy_dft(&[3.0f64], &one).unwrap(), 9.0);
        let lat = RationalLattice::new(5, 3).unwrap();
        assert_eq!(energy_dft(&[1.0f64; 4], &lat), Err(Error::LengthMismatch { expected: 5, got: 4 }));
        let diag = RationalLattice::new(7, 1).unwrap();
        let c = dft_coeffs(2.5f64, 1.0, 7).unwrap();
        let sq: f64 = c.iter().map(|x| x * x).sum();
        assert!((energy_dft(&c, &diag).unwrap() - 49.0 * sq).abs() < 1e-12);
    }

    #[test]
    fn three_routes_agree() {
        let hz = HurwitzZeta::<f64>::new();
        for sigma in [2.0, 2.5, 4.0] {
            for p in [1.0, 6.0] {
                let pot = KPotential::<f64>::new(sigma, p).unwrap();
                for n in [5u64, 6, 7] {
                    let lat = RationalLattice::fibonacci(n).unwrap();
                    let direct = energy_direct_lattice(&Sequential, &pot, &lat);
                    let dft = energy_dft(&dft_coeffs(sigma, p, lat.n()).unwrap(), &lat).unwrap();
                    let nn = (lat.n() * lat.n()) as f64;
                    let wce = nn * (1.0 + wce_e(&Sequential, &hz, sigma, p, &lat).unwrap());
                    assert!(((direct - dft) / dft).abs() < 1e-9, "sigma={sigma} p={p} n={n}");
                    assert!(((wce - dft) / dft).abs() < 1e-12, "sigma={sigma} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn direct_energy_on_generic_points_matches_lattice_form() {
        let lat = RationalLattice::new(8, 3).unwrap();
        let pot = BernoulliPotential::<f64>::new(1, 6.0).unwrap();
        let a = energy_direct(&Sequential, &pot, &lat.points());
        let b = energy_direct_lattice(&Sequential, &pot, &lat);
        assert!((a - b).abs() < 1e-12 * b);
        let exact = num_traits::ToPrimitive::to_f64(&energy_direct_exact(&pot, &lat)).unwrap();
        assert!((a - exact).abs() < 1e-12 * exact);
        let dft = energy_dft(&dft_coeffs_bernoulli(1, 6.0, 8).unwrap(), &lat).unwrap();
        assert!((dft - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn wce_closed_form_at_sigma_two() {
        // the right side equals e itself, not its square
        for n in 4..=12u64 {
            let lat = RationalLattice::fibonacci(n).unwrap();
            let p = 1.0;
            let e = wce_e(&Sequential, &HurwitzZeta::<Dd>::new(), Dd::from_f64(2.0), Dd::from_f64(p), &lat).unwrap();
            let f = Dd::from_bigint(&fib(n));
            let f2n = Dd::from_bigint(&fib(2 * n));
            let l2n = Dd::from_bigint(&crate::golden::lucas(2 * n));
            let sign = if n % 2 == 0 { Dd::one() } else { -Dd::one() };
            let nn = Dd::from_u64(n);
            let closed = Dd::from_f64(p) / (Dd::from_f64(6.0) * f * f)
                + Dd::from_f64(p * p) / (Dd::from_f64(300.0) * f.powi(4))
                    * (nn * f2n - Dd::frac(17, 60) * l2n - sign * Dd::frac(29, 15));
            assert!(((e - closed) / e).abs().to_f64() < 1e-25, "n = {n}");
        }
    }

    #[test]
    fn fib_sum_small_cases() {
        let one = Kernel::one().evaluator::<f64>();
        assert_eq!(fib_sum(&Sequential, 2, 2.0, &one).unwrap(), 0.0);
        assert!((fib_sum(&Sequential, 3, 2.0, &one).unwrap() - 0.25).abs() < 1e-15);
        assert!(fib_sum(&Sequential, 1, 2.0, &one).is_err());
    }

    #[test]
    fn reflection_symmetry_termwise() {
        let one = Kernel::one().evaluator::<f64>();
        for n in 3..=20u64 {
            let lat = RationalLattice::fibonacci(n).unwrap();
            let big = lat.n();
            for m in 1..big {
                let a = sum_term(&one, 2.0, big, m, lat.residue(m), true);
                let b = sum_term(&one, 2.0, big, big - m, lat.residue(big - m), true);
                assert!((a - b).abs() <= 1e-12 * a, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn grouped_equals_flat() {
        for spec in ["one", "trig:2,4", "bern:6", "fsigma"] {
            for sigma in [2.0, 2.5, 4.0] {
                let ev = Kernel::parse(spec, sigma).unwrap().evaluator::<f64>();
                for n in 3..=16u64 {
                    let flat = fib_sum(&Sequential, n, sigma, &ev).unwrap();
                    let grouped = fib_sum_grouped(&Sequential, n, sigma, &ev).unwrap();
                    assert!((flat - grouped).abs() <= 1e-12 * flat.abs().max(1e-300), "{spec} sigma={sigma} n={n}");
                }
            }
        }
    }

    #[test]
    fn middle_term_counted_once() {
        // F_12 = 144 is even and m = 72 maps to itself
        let ev = Kernel::one().evaluator::<f64>();
        let lat = RationalLattice::fibonacci(12).unwrap();
        assert_eq!(lat.residue(72), 72);
        let rows: u64 = rows_below_half_fib(12).iter().map(|r| r.1).sum();
        assert_eq!(2 * rows + 1, lat.n() - 1);
        let flat = fib_sum(&Sequential, 12, 2.0, &ev).unwrap();
        let grouped = fib_sum_grouped(&Sequential, 12, 2.0, &ev).unwrap();
        assert!((flat - grouped).abs() < 1e-12 * flat);
    }

    #[test]
    fn row_terms_cluster_near_figure_levels() {
        let ev = Kernel::one().evaluator::<f64>();
        let n = 15u64;
        let f2 = num_traits::ToPrimitive::to_f64(&fib(n)).unwrap().powi(2);
        let pi4 = core::f64::consts::PI.powi(4);
        for (i, eta) in [(1u64, 1.0f64), (2, 5.0), (3, 4.0)] {
            let terms = row_terms(n, 2.0, &ev, i).unwrap();
            let mid = terms[terms.len() / 2] / f2;
            let level = 5.0 / (pi4 * eta * eta);
            assert!((mid / level - 1.0).abs() < 0.1, "i={i}: {mid} vs {level}");
        }
    }

    #[test]
    fn flat_sum_is_nearly_linear() {
        let ev = Kernel::one().evaluator::<f64>();
        let s: Vec<f64> = (19..=30).map(|n| fib_sum(&Sequential, n, 2.0, &ev).unwrap()).collect();
        for w in s.windows(2) {
            assert!((w[1] - w[0] - 0.119256958).abs() < 1e-3);
        }
    }

    #[test]
    fn double_double_fib_sum_agrees() {
        let ev = Kernel::parse("trig:2,4", 4.0).unwrap().evaluator::<Dd>();
        let ef = Kernel::parse("trig:2,4", 4.0).unwrap().evaluator::<f64>();
        for n in [8u64, 14] {
            let d = fib_sum(&Sequential, n, Dd::from_f64(4.0), &ev).unwrap().to_f64();
            let f = fib_sum(&Sequential, n, 4.0, &ef).unwrap();
            assert!(((d - f) / d).abs() < 1e-13);
        }
    }
}
