//! Cross-module identities through the public API.

use fiblat_core::asymptotics::{closed_sum, constant_c, constant_c_closed};
use fiblat_core::dedekind::{sigma2_expr, trig_sum_from_dedekind};
use fiblat_core::energy::{energy_direct_exact, fib_sum, wce_e, RationalLattice};
use fiblat_core::golden::fib;
use fiblat_core::kernels::{BernoulliPotential, HurwitzZeta};
use fiblat_core::sum::Sequential;
use fiblat_core::wythoff::{locate, row_threshold_mu, wythoff_entry, WythoffRow};
use fiblat_core::{Dd, Kernel, Real};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

proptest! {
    #[test]
    fn locate_inverts_entries(i in 1u64..5000, k in 1u64..30) {
        let w = wythoff_entry(i, k);
        prop_assume!(w < BigInt::from(u64::MAX));
        prop_assert_eq!(locate(w.to_u64().unwrap()).unwrap(), (i, k));
    }

    /// `(−1)^k F_{n−1} W_{i,k} ≡ W*_{i,n−k} (mod F_n)`.
    #[test]
    fn dual_entry_is_a_residue(i in 1u64..500, k in 1u64..20, extra in 1u64..20) {
        let mu = row_threshold_mu(i) as u64;
        let n = k + mu + extra;
        let r = WythoffRow::new(i).unwrap();
        let f = fib(n);
        let lhs: BigInt = fib(n - 1) * wythoff_entry(i, k) * BigInt::from(if k % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(lhs.mod_floor(&f), r.dual(n - k).unwrap().mod_floor(&f));
    }

    #[test]
    fn trig_sum_matches_closed_form(n in 3u64..28) {
        let f = Kernel::one().evaluator::<f64>();
        let direct = fib_sum(&Sequential, n, 2.0, &f).unwrap();
        let closed = closed_sum::<f64>(&sigma2_expr(), 2, n);
        prop_assert!(((direct - closed) / closed).abs() < 1e-11);
    }
}

/// The σ = 2 trig sum from `s_{2,2}` agrees with the sum itself.
#[test]
fn bridge_against_float_sum() {
    let f = Kernel::one().evaluator::<Dd>();
    for n in 3..=16 {
        let exact = trig_sum_from_dedekind(1, n).unwrap() / BigRational::from_integer(fib(n).pow(2));
        let direct = fib_sum(&Sequential, n, Dd::from_u64(2), &f).unwrap();
        let rel = ((direct - Dd::from_rational(&exact)) / direct).abs().to_f64();
        assert!(rel < 1e-25, "n = {n}: {rel:e}");
    }
}

/// Exact energy of a Bernoulli potential against its Hurwitz-zeta expansion.
#[test]
fn exact_energy_against_zeta_expansion() {
    let hz = HurwitzZeta::<f64>::new();
    for n in [5u64, 8, 13, 21] {
        let lat = RationalLattice::fibonacci((2..40).find(|&k| fib(k) == BigInt::from(n)).unwrap()).unwrap();
        let pot = BernoulliPotential::<f64>::with_exact_p(1, BigRational::one()).unwrap();
        let exact = energy_direct_exact(&pot, &lat).to_f64().unwrap();
        let nn = (n * n) as f64;
        let zeta = nn * (1.0 + wce_e(&Sequential, &hz, 2.0, 1.0, &lat).unwrap());
        assert!(((exact - zeta) / exact).abs() < 1e-12, "N = {n}: {exact} vs {zeta}");
    }
}

/// `C` from the η-series agrees at both precisions and with the closed form.
#[test]
fn constant_c_precisions_agree() {
    let exact = constant_c_closed(4.0, &BigRational::one()).unwrap();
    let (a, ta) = constant_c(&Sequential, 4.0, 1.0, 20_000).unwrap();
    let (b, tb) = constant_c(&Sequential, Dd::from_u64(4), Dd::one(), 20_000).unwrap();
    assert!((a - b.to_f64()).abs() < 1e-15 * a);
    assert!((exact.to_f64() - a).abs() <= ta + 1e-15);
    assert!((exact.to_real::<Dd>() - b).abs() <= tb + Dd::from_f64(1e-28));
}
