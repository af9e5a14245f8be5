//! Identity checks over finite ranges, shared by the test suites and the
//! `verify` command. Each returns the number of comparisons made, or the
//! first counterexample.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::asymptotics::{closed_sum, dedekind_zeta, ZetaRouteKind};
use crate::dedekind::{
    apostol_check, cos2sin4_expr, fib_dedekind_sum, hwz_check, s13_closed, s22_closed, sigma2_closed,
    sigma2_closed_abstract, sigma2_expr, sigma4_closed, sigma4_expr, sigma6_closed, sigma6_expr, sin4_expr,
    trig_sum_from_dedekind, FibLucasExpr,
};
use crate::energy::{energy_dft, energy_direct_lattice, fib_sum, fib_sum_grouped, wce_e, RationalLattice};
use crate::golden::{fib, floor_phi_big, floor_phi_times, successor, GoldenInt};
use crate::kernels::dft::{bernoulli_dft_normalization, dft_coeffs, dft_coeffs_bernoulli};
use crate::kernels::ineq::{check_calc_inequalities, DEFAULT_SIGMAS};
use crate::kernels::{HurwitzZeta, KPotential, Kernel};
use crate::real::Real;
use crate::sum::Reducer;
use crate::wythoff::{
    dual_entry, half_fib_witness, locate, row_threshold_mu, wythoff_entry, RowInvariants, WythoffRow,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

pub type CheckResult = core::result::Result<u64, Counterexample>;

fn ensure(ok: bool, check: &'static str, detail: impl FnOnce() -> String) -> core::result::Result<(), Counterexample> {
    if ok {
        Ok(())
    } else {
        Err(Counterexample { check, detail: detail() })
    }
}

fn b(v: u64) -> BigInt {
    BigInt::from(v)
}

/// Every `m ≤ limit` appears exactly once in the array, and `locate` finds it.
pub fn wythoff_partition(limit: u64) -> CheckResult {
    let mut owner = vec![(0u64, 0u64); limit as usize + 1];
    let mut count = 0;
    let mut i = 1u64;
    loop {
        let (mut a, mut bb) = RowInvariants::new(i).first_two();
        if a > limit as u128 {
            break;
        }
        let mut k = 1u64;
        while a <= limit as u128 {
            ensure(owner[a as usize] == (0, 0), "partition", || format!("{a} appears twice"))?;
            owner[a as usize] = (i, k);
            let c = a + bb;
            a = bb;
            bb = c;
            k += 1;
        }
        i += 1;
    }
    for m in 1..=limit {
        let slot = locate(m).map_err(|e| Counterexample { check: "locate", detail: format!("{m}: {e}") })?;
        ensure(slot == owner[m as usize], "partition", || format!("{m} is in no row or locate disagrees"))?;
        ensure(wythoff_entry(slot.0, slot.1) == b(m), "locate", || format!("W{slot:?} != {m}"))?;
        count += 1;
    }
    Ok(count)
}

/// Recurrence, the successor rule `W_{i,k+1} = ⌊φW_{i,k} + φ⁻¹⌋` and
/// `η_i = (−1)^k(W_k² − W_kW_{k−1} − W_{k−1}²)`.
pub fn wythoff_rows(rows: u64, cols: i64) -> CheckResult {
    let mut count = 0;
    for i in 1..=rows {
        let r = WythoffRow::new(i).expect("i ≥ 1");
        for k in 2..=cols {
            let (w, v) = (r.entry(k), r.entry(k - 1));
            ensure(r.entry(k + 1) == &w + &v, "recurrence", || format!("i={i} k={k}"))?;
            ensure(successor(&v) == w, "successor", || format!("i={i} k={k}"))?;
            let form = &w * &w - &w * &v - &v * &v;
            let form = if k % 2 == 0 { form } else { -form };
            ensure(form == r.eta, "eta alternating form", || format!("i={i} k={k}"))?;
            count += 3;
        }
    }
    Ok(count)
}

/// `2W_{i,k} < F_n ⇔ n − k > μ_i`.
pub fn threshold_equivalence(rows: u64, n_max: u64) -> CheckResult {
    let mut count = 0;
    for i in 1..=rows {
        let mu = row_threshold_mu(i) as u64;
        for k in 1..n_max {
            let w = wythoff_entry(i, k);
            for n in (k + 1)..=n_max {
                let below = BigInt::from(2) * &w < fib(n);
                ensure(below == (n - k > mu), "mu threshold", || format!("i={i} k={k} n={n}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `W_{i,1} = F_{3ℓ}/2` at `i = (F_{3ℓ−2} + 1)/2`.
pub fn half_fib_witnesses(l_max: u64) -> CheckResult {
    for l in 1..=l_max {
        let (i, k, n) = half_fib_witness(l)
            .map_err(|e| Counterexample { check: "half-Fibonacci witness", detail: format!("{e}") })?;
        let i = i.to_u64().expect("small witness");
        ensure(BigInt::from(2) * wythoff_entry(i, k) == fib(n), "half-Fibonacci witness", || format!("ℓ={l}"))?;
    }
    Ok(l_max)
}

/// `F_{m−2} ≤ W*_{i,m} < F_m`, the backward extension
/// `W*_{i,m} = (−1)^m W_{i,−m}`, the Binet form with `w*_± = −w_∓`, and
/// independence of `n` in `W*_{i,n−k}`.
pub fn dual_suite(rows: u64, slots: u64) -> CheckResult {
    let sqrt5 = GoldenInt::sqrt5();
    let mut count = 0;
    for i in 1..=rows {
        let r = WythoffRow::new(i).expect("i ≥ 1");
        let (wsp, wsm) = (-&r.w_minus, -&r.w_plus);
        let mu = r.mu as u64;
        for slot in (mu + 1)..=(mu + slots) {
            let d = r.dual(slot).expect("slot above mu");
            ensure(fib(slot - 2) <= d && d < fib(slot), "dual bounds", || format!("i={i} slot={slot}"))?;
            let back = r.entry(-(slot as i64));
            ensure(d == if slot % 2 == 0 { back } else { -back }, "dual extension", || format!("i={i} slot={slot}"))?;
            let psi = GoldenInt::phi_pow(slot as i64).conjugate();
            let rhs = &wsp * &GoldenInt::phi_pow(slot as i64) - &wsm * &psi;
            ensure(&sqrt5 * &GoldenInt::from_int(d.clone()) == rhs, "dual coefficients", || {
                format!("i={i} slot={slot}")
            })?;
            count += 3;
        }
        for n in (mu + 2)..(mu + 12) {
            for k in 1..(n - mu) {
                let v = dual_entry(i, n, k).expect("k < n − mu");
                ensure(v == r.dual(n - k).expect("slot above mu"), "dual entry", || format!("i={i} n={n} k={k}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The four floor identities for `1 ≤ N ≤ limit`, exactly in Z[φ].
pub fn floor_lemmas(limit: u64) -> CheckResult {
    let phi_inv = GoldenInt::new(-1, 1);
    let fl = |x: GoldenInt| x.floor();
    for n in 1..=limit {
        let nb = b(n);
        let fpn = floor_phi_big(&nb);
        let fp2n = fl(GoldenInt::new(n, n));
        ensure(
            GoldenInt::new(0, fpn.clone()).cmp(&GoldenInt::from_int(fp2n.clone())) == Ordering::Less,
            "floor (i)",
            || format!("N={n}"),
        )?;
        ensure(fp2n == fl(&GoldenInt::new(0, fpn.clone()) + &phi_inv), "floor (ii)", || format!("N={n}"))?;
        let s = fl(&GoldenInt::new(0, n) + &phi_inv);
        ensure(&nb + &s == fl(&GoldenInt::new(0, s.clone()) + &phi_inv), "floor (iii)", || format!("N={n}"))?;
        let lo = fl(&GoldenInt::new(0, 2 * n - 1) + &phi_inv);
        let hi = fl(&GoldenInt::new(0, 2 * n + 1) + &phi_inv);
        let two_s = BigInt::from(2) * &s;
        ensure(lo < two_s && two_s < hi, "floor (iv)", || format!("N={n}"))?;
    }
    Ok(4 * limit)
}

/// `1 + 1/((φ+2)i²) < φi/⌊φi⌋` and `φi/(⌊φi⌋+1) ≤ 1 − 1/(2φ²i²)` with the
/// denominators cleared.
pub fn approximation_lemma(limit: u64) -> CheckResult {
    for i in 1..=limit {
        let f = floor_phi_times(i);
        let (i2, i3) = (b(i) * b(i), b(i) * b(i) * b(i));
        let lhs = GoldenInt::new(&f * (BigInt::from(2) * &i2 + 1u32), &f * &i2);
        let rhs = GoldenInt::new(i3.clone(), BigInt::from(3) * &i3);
        ensure(lhs.cmp(&rhs) == Ordering::Less, "approximation lower", || format!("i={i}"))?;
        let f1 = &f + 1u32;
        let lhs = GoldenInt::new(BigInt::from(2) * &i3, BigInt::from(4) * &i3);
        let rhs = GoldenInt::new((BigInt::from(2) * &i2 - 1u32) * &f1, BigInt::from(2) * &i2 * &f1);
        ensure(lhs.cmp(&rhs) != Ordering::Greater, "approximation upper", || format!("i={i}"))?;
    }
    Ok(2 * limit)
}

pub fn calc_inequalities(points: usize) -> CheckResult {
    check_calc_inequalities(points, &DEFAULT_SIGMAS)
        .map_err(|v| Counterexample { check: "calc inequality", detail: format!("{v}") })
}

/// `(F_{n−1}, F_n)` for `2 ≤ n ≤ n_max`.
pub fn fibonacci_pairs(n_max: u64) -> Vec<(u64, u64)> {
    (2..=n_max).map(|n| (fib(n - 1).to_u64().unwrap(), fib(n).to_u64().unwrap())).collect()
}

/// Both reciprocity laws on each coprime pair.
pub fn reciprocity(pairs: &[(u64, u64)]) -> CheckResult {
    for &(bb, c) in pairs {
        let err = |e| Counterexample { check: "reciprocity", detail: format!("({bb}, {c}): {e}") };
        ensure(apostol_check(bb, c).map_err(err)?, "Apostol s13 reciprocity", || format!("({bb}, {c})"))?;
        ensure(hwz_check(bb, c).map_err(err)?, "s22 reciprocity", || format!("({bb}, {c})"))?;
    }
    Ok(2 * pairs.len() as u64)
}

/// Exact identities: `s_{2,2}` and `s_{1,3}` against their closed forms with
/// the parity relation for `3 ≤ n ≤ n_max`, the two σ = 2 variants, and the
/// trig/Bernoulli bridge for `s = 1, 2, 3`.
pub fn closed_forms_exact(n_max: u64) -> CheckResult {
    let mut count = 0;
    let err = |e| Counterexample { check: "closed form", detail: format!("{e}") };
    for n in 3..=n_max {
        ensure(fib_dedekind_sum(2, 2, n).map_err(err)? == s22_closed(n).map_err(err)?, "s22 closed form", || {
            format!("n={n}")
        })?;
        let s13 = fib_dedekind_sum(1, 3, n).map_err(err)?;
        ensure(s13 == s13_closed(n).map_err(err)?, "s13 closed form", || format!("n={n}"))?;
        let s31 = fib_dedekind_sum(3, 1, n).map_err(err)?;
        ensure(s13 == if n % 2 == 0 { s31 } else { -s31 }, "s13/s31 parity", || format!("n={n}"))?;
        count += 3;
    }
    for n in 2..=n_max.max(50) {
        ensure(sigma2_closed(n).map_err(err)? == sigma2_closed_abstract(n).map_err(err)?, "sigma2 variants", || {
            format!("n={n}")
        })?;
        count += 1;
    }
    for n in 2..=n_max.min(20) {
        ensure(trig_sum_from_dedekind(1, n).map_err(err)? == sigma2_closed(n).map_err(err)?, "bridge s=1", || {
            format!("n={n}")
        })?;
        count += 1;
    }
    for n in 2..=n_max.min(14) {
        ensure(trig_sum_from_dedekind(2, n).map_err(err)? == sigma4_closed(n).map_err(err)?, "bridge s=2", || {
            format!("n={n}")
        })?;
        ensure(trig_sum_from_dedekind(3, n).map_err(err)? == sigma6_closed(n).map_err(err)?, "bridge s=3", || {
            format!("n={n}")
        })?;
        count += 2;
    }
    Ok(count)
}

/// A closed form checked against a float trig sum.
pub struct FloatOracle {
    pub name: &'static str,
    pub expr: FibLucasExpr,
    pub sigma: u32,
    pub kernel: Kernel,
    pub n_max: u64,
    pub rel_tol: f64,
}

pub fn float_oracles() -> Vec<FloatOracle> {
    let trig = |c: Vec<f64>| Kernel::trig(c).expect("finite coefficients");
    vec![
        FloatOracle { name: "sigma2", expr: sigma2_expr(), sigma: 2, kernel: Kernel::one(), n_max: 20, rel_tol: 1e-9 },
        FloatOracle {
            name: "sigma4",
            expr: sigma4_expr(),
            sigma: 4,
            kernel: trig(vec![2.0, 4.0]),
            n_max: 16,
            rel_tol: 1e-8,
        },
        FloatOracle {
            name: "sigma6",
            expr: sigma6_expr(),
            sigma: 6,
            kernel: trig(vec![16.0, 88.0, 16.0]),
            n_max: 16,
            rel_tol: 1e-8,
        },
        FloatOracle { name: "sin4", expr: sin4_expr(), sigma: 4, kernel: Kernel::one(), n_max: 16, rel_tol: 1e-8 },
        FloatOracle {
            name: "cos2sin4",
            expr: cos2sin4_expr(),
            sigma: 4,
            kernel: trig(vec![0.0, 1.0]),
            n_max: 16,
            rel_tol: 1e-8,
        },
    ]
}

/// Worst relative error of one oracle over `5 ≤ n ≤ n_max`.
pub fn float_oracle_error<R: Real, Red: Reducer>(red: &Red, o: &FloatOracle, n_max: u64) -> (u64, f64) {
    let f = o.kernel.evaluator::<R>();
    let mut worst = (5, 0.0f64);
    for n in 5..=n_max {
        let got = fib_sum(red, n, R::from_u64(o.sigma as u64), &f).expect("n in range").to_f64();
        let want = closed_sum::<f64>(&o.expr, o.sigma, n);
        let rel = ((got - want) / want).abs();
        if rel > worst.1 {
            worst = (n, rel);
        }
    }
    worst
}

/// Float trig sums against every closed form, and flat against grouped
/// summation. `rel_tol` replaces each oracle's own tolerance.
pub fn closed_forms_float<Red: Reducer>(red: &Red, n_cap: u64, rel_tol: Option<f64>) -> CheckResult {
    let mut count = 0;
    for o in float_oracles() {
        let n_max = o.n_max.min(n_cap);
        let (n, rel) = float_oracle_error::<f64, _>(red, &o, n_max);
        ensure(rel <= rel_tol.unwrap_or(o.rel_tol), "trig sum vs closed form", || {
            format!("{} at n={n}: relative error {rel:e}", o.name)
        })?;
        let f = o.kernel.evaluator::<f64>();
        for n in 5..=n_max {
            let s = o.sigma as f64;
            let flat = fib_sum(red, n, s, &f).expect("n in range");
            let grouped = fib_sum_grouped(red, n, s, &f).expect("n in range");
            ensure(((flat - grouped) / flat).abs() < 1e-12, "grouped vs flat", || format!("{} n={n}", o.name))?;
        }
        count += 2 * (n_max - 4);
    }
    Ok(count)
}

/// Hurwitz and Bernoulli DFT tables agree for even σ; the Bernoulli table is
/// exactly normalized; the three energy routes agree on Fibonacci lattices.
pub fn dft_suite<Red: Reducer>(red: &Red, sizes: &[u64], rel_tol: f64) -> CheckResult {
    let mut count = 0;
    for &n in sizes {
        for s in 1..=3u32 {
            let a = dft_coeffs(2.0 * s as f64, 6.0, n)
                .map_err(|e| Counterexample { check: "dft", detail: format!("{e}") })?;
            let bb =
                dft_coeffs_bernoulli(s, 6.0, n).map_err(|e| Counterexample { check: "dft", detail: format!("{e}") })?;
            for (m, (x, y)) in a.iter().zip(&bb).enumerate() {
                ensure((x - y).abs() <= 1e-12 * y.abs().max(1e-300), "dft routes", || format!("s={s} N={n} m={m}"))?;
            }
            let (sum, k0) = bernoulli_dft_normalization(s, &BigRational::from_integer(6.into()), n);
            ensure(sum == k0, "dft normalization", || format!("s={s} N={n}"))?;
            count += n + 1;
        }
    }
    let hz = HurwitzZeta::<f64>::new();
    for sigma in [2.0, 2.5, 4.0] {
        for p in [1.0, 6.0] {
            let pot = KPotential::<f64>::new(sigma, p)
                .map_err(|e| Counterexample { check: "energy", detail: format!("{e}") })?;
            for &n in sizes {
                let lat = fibonacci_lattice_with_size(n).ok_or_else(|| Counterexample {
                    check: "energy",
                    detail: format!("{n} is not a Fibonacci number"),
                })?;
                let direct = energy_direct_lattice(red, &pot, &lat);
                let dft = energy_dft(&dft_coeffs(sigma, p, n).expect("sigma > 1"), &lat).expect("lengths match");
                let nn = (n * n) as f64;
                let wce = nn * (1.0 + wce_e(red, &hz, sigma, p, &lat).expect("sigma > 1"));
                ensure(((direct - dft) / dft).abs() < rel_tol, "energy direct vs dft", || {
                    format!("sigma={sigma} p={p} N={n}: {direct} vs {dft}")
                })?;
                ensure(((wce - dft) / dft).abs() < rel_tol, "energy wce vs dft", || {
                    format!("sigma={sigma} p={p} N={n}: {wce} vs {dft}")
                })?;
                count += 2;
            }
        }
    }
    Ok(count)
}

/// `Λ_{F_n, F_{n−1}}` with `F_n = size`.
pub fn fibonacci_lattice_with_size(size: u64) -> Option<RationalLattice> {
    (2..=92u64).find(|&n| fib(n) == b(size)).and_then(|n| RationalLattice::fibonacci(n).ok())
}

/// The three `ζ_{Q(√5)}` routes agree within their error bars.
pub fn zeta_routes<Red: Reducer>(red: &Red, sigmas: &[f64], i_max: u64, l_terms: u64) -> CheckResult {
    let mut count = 0;
    for &sigma in sigmas {
        let err = |e| Counterexample { check: "zeta routes", detail: format!("sigma={sigma}: {e}") };
        let eta = dedekind_zeta(red, sigma, ZetaRouteKind::EtaSeries, i_max).map_err(err)?;
        let chi = dedekind_zeta(red, sigma, ZetaRouteKind::CharacterSeries, l_terms).map_err(err)?;
        ensure(eta.agrees_with(&chi), "zeta eta vs character", || {
            format!("sigma={sigma}: {} vs {}", eta.value, chi.value)
        })?;
        count += 1;
        if crate::kernels::even_sigma(sigma).is_some() {
            let bern = dedekind_zeta(red, sigma, ZetaRouteKind::BernoulliClosedForm, 0).map_err(err)?;
            ensure(bern.agrees_with(&eta) && bern.agrees_with(&chi), "zeta closed form", || {
                format!("sigma={sigma}: {} vs {} / {}", bern.value, eta.value, chi.value)
            })?;
            count += 2;
        }
    }
    Ok(count)
}
