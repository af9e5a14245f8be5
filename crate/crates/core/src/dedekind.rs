//! Generalized Dedekind sums and closed forms over the Fibonacci grid.
//!
//! `s_{ℓ,m}(a, b; c) = Σ_{k=0}^{c−1} B_ℓ({ak/c}) B_m({bk/c})`, exact.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::golden::{fib, lucas};
use crate::kernels::bernoulli::{bernoulli_number, bernoulli_numbers, binomial};

/// Degrees and arguments of `s_{ℓ,m}(a, b; c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DedekindSumSpec {
    pub ell: u32,
    pub m: u32,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl DedekindSumSpec {
    pub fn new(ell: u32, m: u32, a: u64, b: u64, c: u64) -> Result<Self> {
        if ell == 0 || m == 0 || c == 0 {
            return Err(invalid("Dedekind sum needs ℓ, m ≥ 1 and c ≥ 1"));
        }
        if a.gcd(&c) != 1 {
            return Err(Error::NotCoprime(a, c));
        }
        if b.gcd(&c) != 1 {
            return Err(Error::NotCoprime(b, c));
        }
        Ok(DedekindSumSpec { ell, m, a, b, c })
    }
}

/// `d c^ℓ B_ℓ(x/c) = Σ_j e_j x^j` with integer `e_j`; returns `(d, e)`.
fn scaled_bernoulli(ell: u32, c: u64) -> (BigInt, Vec<BigInt>) {
    let b = bernoulli_numbers(ell as usize);
    let d = b.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let cb = BigInt::from(c);
    let e = (0..=ell as usize)
        .map(|j| {
            let coef = &b[ell as usize - j] * BigRational::from_integer(binomial(ell as u64, j as u64) * &d);
            debug_assert!(coef.is_integer());
            coef.to_integer() * cb.pow(ell - j as u32)
        })
        .collect();
    (d, e)
}

/// `Σ_j |e_j| c^j`, an upper bound for the scaled values on `0..c`.
fn value_bound(e: &[BigInt], c: u64) -> BigInt {
    let cb = BigInt::from(c);
    e.iter().enumerate().fold(BigInt::zero(), |acc, (j, x)| acc + x.abs() * cb.pow(j as u32))
}

fn table_i128(e: &[BigInt], c: u64) -> Vec<i128> {
    let ei: Vec<i128> = e.iter().map(|x| x.to_i128().expect("checked by bound")).collect();
    (0..c as i128).map(|x| ei.iter().rev().fold(0i128, |acc, &k| acc * x + k)).collect()
}

fn table_big(e: &[BigInt], c: u64) -> Vec<BigInt> {
    (0..c)
        .map(|x| {
            let xb = BigInt::from(x);
            e.iter().rev().fold(BigInt::zero(), |acc, k| acc * &xb + k)
        })
        .collect()
}

/// Exact `s_{ℓ,m}(a, b; c)` in `O(c)` integer operations.
pub fn gen_dedekind_sum(spec: &DedekindSumSpec) -> BigRational {
    let DedekindSumSpec { ell, m, a, b, c } = *spec;
    let (dl, el) = scaled_bernoulli(ell, c);
    let (dm, em) = scaled_bernoulli(m, c);
    let bound = value_bound(&el, c) * value_bound(&em, c) * BigInt::from(c);
    let (a, b) = ((a % c) as u128, (b % c) as u128);
    let cc = c as u128;
    let total = if bound.bits() < 126 {
        let (tl, tm) = (table_i128(&el, c), table_i128(&em, c));
        let mut acc = 0i128;
        for k in 0..cc {
            acc += tl[((a * k) % cc) as usize] * tm[((b * k) % cc) as usize];
        }
        BigInt::from(acc)
    } else {
        let (tl, tm) = (table_big(&el, c), table_big(&em, c));
        let mut acc = BigInt::zero();
        for k in 0..cc {
            acc += &tl[((a * k) % cc) as usize] * &tm[((b * k) % cc) as usize];
        }
        acc
    };
    BigRational::new(total, dl * dm * BigInt::from(c).pow(ell + m))
}

/// `s_{ℓ,m}(a, b; c)` with argument checks.
pub fn dedekind_sum(ell: u32, m: u32, a: u64, b: u64, c: u64) -> Result<BigRational> {
    Ok(gen_dedekind_sum(&DedekindSumSpec::new(ell, m, a, b, c)?))
}

/// `s_{ℓ,m}(1, F_{n−1}; F_n)`.
pub fn fib_dedekind_sum(ell: u32, m: u32, n: u64) -> Result<BigRational> {
    let c = fib(n).to_u64().ok_or(Error::Overflow("F_n exceeds u64"))?;
    let b = fib(n - 1).to_u64().expect("smaller than F_n");
    dedekind_sum(ell, m, 1, b, c)
}

/// Which sequence a [`FibLucasTerm`] multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seq {
    One,
    /// `F_{jn}`.
    F(u64),
    /// `L_{jn}`.
    L(u64),
}

/// `coef · n^{n_power} · (−1)^{n·alternating} · seq`.
#[derive(Clone, Debug, PartialEq)]
pub struct FibLucasTerm {
    pub coef: BigRational,
    pub n_power: u32,
    pub alternating: bool,
    pub seq: Seq,
}

/// `Σ terms / F_n^{denominator_power}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FibLucasExpr {
    pub terms: Vec<FibLucasTerm>,
    pub denominator_power: u32,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn t(n: i64, d: i64, n_power: u32, alternating: bool, seq: Seq) -> FibLucasTerm {
    FibLucasTerm { coef: q(n, d), n_power, alternating, seq }
}

impl FibLucasExpr {
    pub fn eval(&self, n: u64) -> BigRational {
        let nb = BigInt::from(n);
        let mut acc = BigRational::zero();
        for term in &self.terms {
            let seq = match term.seq {
                Seq::One => BigInt::one(),
                Seq::F(j) => fib(j * n),
                Seq::L(j) => lucas(j * n),
            };
            let mut v = &term.coef * BigRational::from_integer(seq * nb.pow(term.n_power));
            if term.alternating && n % 2 == 1 {
                v = -v;
            }
            acc += v;
        }
        if self.denominator_power > 0 {
            acc /= BigRational::from_integer(fib(n).pow(self.denominator_power));
        }
        acc
    }

    fn coef_of(&self, n_power: u32, seq: Seq) -> BigRational {
        self.terms
            .iter()
            .filter(|x| !x.alternating && x.n_power == n_power && x.seq == seq)
            .fold(BigRational::zero(), |acc, x| acc + &x.coef)
    }

    /// For a sum of order `F_n^σ`, the limits `C`, `D` of
    /// `expr/F_n^σ = Cn + D + o(1)`. `C = r_C/√5` and `D = r_D`; returns
    /// `(r_C, r_D)`.
    ///
    /// Uses `F_{σn}/F_n^σ → 5^{(σ−1)/2}` and `L_{σn}/F_n^σ → 5^{σ/2}`.
    pub fn asymptotic_constants(&self, sigma: u32) -> (BigRational, BigRational) {
        assert!(sigma % 2 == 0 && sigma >= 2 && self.denominator_power == 0);
        let s = sigma / 2;
        let five_s = BigRational::from_integer(BigInt::from(5).pow(s));
        let c = self.coef_of(1, Seq::F(sigma as u64)) * &five_s;
        let d =
            self.coef_of(0, Seq::L(sigma as u64)) * &five_s + self.coef_of(0, Seq::F(sigma as u64)) * five_s / q(5, 1);
        (c, d)
    }
}

/// `s_{2,2}(1, F_{n−1}; F_n) = nF_{2n}/(75F_n³) − 17L_{2n}/(4500F_n³) − (−1)^n 29/(1125F_n³)`.
pub fn s22_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(1, 75, 1, false, Seq::F(2)),
            t(-17, 4500, 0, false, Seq::L(2)),
            t(-29, 1125, 0, true, Seq::One),
        ],
        denominator_power: 3,
    }
}

/// `s_{1,3}(1, F_{n−1}; F_n) = L_{3n}/(1500F_n³) + (−1)^n n/(50F_n²) − (−1)^n 13L_n/(750F_n³)`.
pub fn s13_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(1, 1500, 0, false, Seq::L(3)),
            t(1, 50, 1, true, Seq::F(1)),
            t(-13, 750, 0, true, Seq::L(1)),
        ],
        denominator_power: 3,
    }
}

/// `Σ_{m=1}^{F_n−1} 1/(sin²(πm/F_n) sin²(πF_{n−1}m/F_n))`.
pub fn sigma2_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(4, 75, 1, false, Seq::F(2)),
            t(-17, 1125, 0, false, Seq::L(2)),
            t(-116, 1125, 0, true, Seq::One),
            t(-1, 9, 0, false, Seq::One),
        ],
        denominator_power: 0,
    }
}

/// The `σ = 4` sum with weight `2 + 4cos²` on both factors.
pub fn sigma4_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(32, 1875, 1, false, Seq::F(4)),
            t(-196, 28125, 0, false, Seq::L(4)),
            t(256, 1875, 1, true, Seq::F(2)),
            t(-3776, 28125, 0, true, Seq::L(2)),
            t(-7556, 28125, 0, false, Seq::One),
        ],
        denominator_power: 0,
    }
}

/// The `σ = 6` sum with weight `16 + 88cos² + 16cos⁴` on both factors.
pub fn sigma6_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(68608, 984375, 1, false, Seq::F(6)),
            t(59606528, 20155078125, 0, false, Seq::L(6)),
            t(548864, 328125, 1, true, Seq::F(4)),
            t(-2876091392, 2239453125, 0, true, Seq::L(4)),
            t(68608, 13125, 1, false, Seq::F(2)),
            t(-128925952, 17915625, 0, false, Seq::L(2)),
            t(-1909649408, 161240625, 0, true, Seq::One),
            t(-256, 3969, 0, false, Seq::One),
        ],
        denominator_power: 0,
    }
}

/// `Σ 1/(sin⁴ sin⁴)` over the Fibonacci grid.
pub fn sin4_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(8, 16875, 1, false, Seq::F(4)),
            t(2357, 1771875, 0, false, Seq::L(4)),
            t(16, 675, 1, false, Seq::F(2)),
            t(64, 16875, 1, true, Seq::F(2)),
            t(-676, 70875, 0, false, Seq::L(2)),
            t(-7408, 1771875, 0, true, Seq::L(2)),
            t(-147023, 1771875, 0, false, Seq::One),
            t(-1616, 23625, 0, true, Seq::One),
        ],
        denominator_power: 0,
    }
}

/// `Σ cos² cos²/(sin⁴ sin⁴)` over the Fibonacci grid.
pub fn cos2sin4_expr() -> FibLucasExpr {
    FibLucasExpr {
        terms: alloc::vec![
            t(8, 16875, 1, false, Seq::F(4)),
            t(-1693, 1771875, 0, false, Seq::L(4)),
            t(4, 675, 1, false, Seq::F(2)),
            t(64, 16875, 1, true, Seq::F(2)),
            t(-19, 70875, 0, false, Seq::L(2)),
            t(-6208, 1771875, 0, true, Seq::L(2)),
            t(-11948, 1771875, 0, false, Seq::One),
            t(-4, 23625, 0, true, Seq::One),
        ],
        denominator_power: 0,
    }
}

fn check_n(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(invalid(format!("closed forms need n ≥ 2, got {n}")));
    }
    Ok(n)
}

pub fn s22_closed(n: u64) -> Result<BigRational> {
    Ok(s22_expr().eval(check_n(n)?))
}

pub fn s13_closed(n: u64) -> Result<BigRational> {
    Ok(s13_expr().eval(check_n(n)?))
}

pub fn sigma2_closed(n: u64) -> Result<BigRational> {
    Ok(sigma2_expr().eval(check_n(n)?))
}

/// `4nF_{2n}/75 − 17F_n²/225 − (−1)^n 2/15 − 1/9`.
pub fn sigma2_closed_abstract(n: u64) -> Result<BigRational> {
    let n = check_n(n)?;
    let f = BigRational::from_integer(fib(n));
    let sign = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
    Ok(q(4 * n as i64, 75) * BigRational::from_integer(fib(2 * n)) - q(17, 225) * &f * &f - sign * q(2, 15) - q(1, 9))
}

pub fn sigma4_closed(n: u64) -> Result<BigRational> {
    Ok(sigma4_expr().eval(check_n(n)?))
}

pub fn sigma6_closed(n: u64) -> Result<BigRational> {
    Ok(sigma6_expr().eval(check_n(n)?))
}

pub fn sin4_closed(n: u64) -> Result<BigRational> {
    Ok(sin4_expr().eval(check_n(n)?))
}

pub fn cos2sin4_closed(n: u64) -> Result<BigRational> {
    Ok(cos2sin4_expr().eval(check_n(n)?))
}

/// `e_{2,p}(Φ_n) = p/(6F_n²) + p²(nF_{2n} − 17L_{2n}/60 − (−1)^n 29/15)/(300F_n⁴)`.
pub fn wce2_closed(n: u64, p: &BigRational) -> Result<BigRational> {
    let n = check_n(n)?;
    let f = BigRational::from_integer(fib(n));
    let f2 = &f * &f;
    let sign = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
    let inner = BigRational::from_integer(fib(2 * n) * n)
        - q(17, 60) * BigRational::from_integer(lucas(2 * n))
        - sign * q(29, 15);
    Ok(p / (q(6, 1) * &f2) + p * p * inner / (q(300, 1) * &f2 * &f2))
}

/// The `|sin|^{−2s}` sum with the weight `sin^{2s}Q_{2s−1}(cot)` on both
/// factors, from `s_{2s,2s}(1, F_{n−1}; F_n)`:
/// `Σ = 2^{4s}/(4s²) · (F_n^{4s−1} s_{2s,2s} − B_{2s}²)`.
///
/// At `n = 2` the grid is the single point `k = 0`, the sum is empty, and
/// the bracket vanishes since `s_{2s,2s}(1,1;1) = B_{2s}²`.
pub fn trig_sum_from_dedekind(s: u32, n: u64) -> Result<BigRational> {
    let n = check_n(n)?;
    let ded = fib_dedekind_sum(2 * s, 2 * s, n)?;
    let b = bernoulli_number(2 * s as usize);
    let f = BigRational::from_integer(fib(n).pow(4 * s - 1));
    let scale = BigRational::new(BigInt::from(2).pow(4 * s), BigInt::from(4 * s * s));
    Ok(scale * (f * ded - &b * &b))
}

fn s(ell: u32, m: u32, b: u64, c: u64) -> BigRational {
    gen_dedekind_sum(&DedekindSumSpec { ell, m, a: 1, b, c })
}

fn coprime_pair(b: u64, c: u64) -> Result<()> {
    if b == 0 || c == 0 {
        return Err(invalid("reciprocity checks need b, c ≥ 1"));
    }
    if b.gcd(&c) != 1 {
        return Err(Error::NotCoprime(b, c));
    }
    Ok(())
}

/// `4(bc³s_{1,3}(1,b;c) + b³c s_{1,3}(1,c;b)) = −1/10 − (b⁴ − 5b²c² + c⁴)/30`.
pub fn apostol_check(b: u64, c: u64) -> Result<bool> {
    coprime_pair(b, c)?;
    let (bb, cb) = (BigRational::from_integer(b.into()), BigRational::from_integer(c.into()));
    let lhs = q(4, 1) * (&bb * cb.pow(3) * s(1, 3, b, c) + bb.pow(3) * &cb * s(1, 3, c, b));
    let rhs = q(-1, 10) - (bb.pow(4) - q(5, 1) * bb.pow(2) * cb.pow(2) + cb.pow(4)) / q(30, 1);
    Ok(lhs == rhs)
}

/// `s_{2,2}(1,b;c)/(4b) = (s_{3,1}(1,b;c) + s_{3,1}(1,c;b))/6 + s_{1,3}(1,b;c)/(6b²)
///  + 1/(720b³c³) + b/(720c³) + c/(240b³)`.
pub fn hwz_check(b: u64, c: u64) -> Result<bool> {
    coprime_pair(b, c)?;
    let (bb, cb) = (BigRational::from_integer(b.into()), BigRational::from_integer(c.into()));
    let lhs = s(2, 2, b, c) / (q(4, 1) * &bb);
    let rhs = (s(3, 1, b, c) + s(3, 1, c, b)) / q(6, 1)
        + s(1, 3, b, c) / (q(6, 1) * bb.pow(2))
        + q(1, 720) / (bb.pow(3) * cb.pow(3))
        + &bb / (q(720, 1) * cb.pow(3))
        + &cb / (q(240, 1) * bb.pow(3));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(ell: u32, m: u32, a: u64, b: u64, c: u64) -> BigRational {
        use crate::kernels::bernoulli::bernoulli_poly;
        let cb = BigInt::from(c);
        (0..c).fold(BigRational::zero(), |acc, k| {
            let x = BigRational::new(BigInt::from((a * k) % c), cb.clone());
            let y = BigRational::new(BigInt::from((b * k) % c), cb.clone());
            acc + bernoulli_poly(ell as usize, &x) * bernoulli_poly(m as usize, &y)
        })
    }

    #[test]
    fn examples() {
        assert_eq!(dedekind_sum(2, 2, 1, 1, 2).unwrap(), q(5, 144));
        assert_eq!(dedekind_sum(1, 3, 1, 1, 2).unwrap(), q(0, 1));
        assert_eq!(s22_closed(3).unwrap(), q(5, 144));
        assert_eq!(dedekind_sum(2, 2, 1, 1, 1).unwrap(), q(1, 36));
        assert_eq!(s22_closed(2).unwrap(), q(1, 36));
        assert_eq!(s13_closed(2).unwrap(), q(0, 1));
        assert_eq!(fib_dedekind_sum(1, 3, 2).unwrap(), q(0, 1));
        assert_eq!(dedekind_sum(2, 2, 2, 1, 4), Err(Error::NotCoprime(2, 4)));
        assert_eq!(dedekind_sum(2, 2, 1, 3, 6), Err(Error::NotCoprime(3, 6)));
    }

    #[test]
    fn fast_sum_matches_naive() {
        for (ell, m, a, b, c) in
            [(1, 1, 1, 3, 7), (2, 2, 1, 8, 13), (1, 3, 2, 5, 9), (3, 1, 1, 1, 1), (4, 4, 3, 7, 20), (6, 6, 1, 21, 34)]
        {
            assert_eq!(dedekind_sum(ell, m, a, b, c).unwrap(), naive(ell, m, a, b, c), "{ell} {m} {a} {b} {c}");
        }
    }

    #[test]
    fn wide_path_matches_narrow_path() {
        // degree 12 on c = 4181 overflows i128 and takes the BigInt path
        let spec = DedekindSumSpec::new(12, 12, 1, 2584, 4181).unwrap();
        let (_, e) = scaled_bernoulli(12, 4181);
        assert!((value_bound(&e, 4181).pow(2) * BigInt::from(4181u32)).bits() >= 126);
        let fast = gen_dedekind_sum(&spec);
        assert_eq!(fast, naive(12, 12, 1, 2584, 4181));
    }

    #[test]
    fn master_identities() {
        for n in 3..=25u64 {
            assert_eq!(fib_dedekind_sum(2, 2, n).unwrap(), s22_closed(n).unwrap(), "s22 n={n}");
            let s13 = fib_dedekind_sum(1, 3, n).unwrap();
            assert_eq!(s13, s13_closed(n).unwrap(), "s13 n={n}");
            let s31 = fib_dedekind_sum(3, 1, n).unwrap();
            assert_eq!(s13, if n % 2 == 0 { s31 } else { -s31 }, "parity n={n}");
        }
    }

    #[test]
    fn bridge_between_trig_and_bernoulli_sums() {
        for n in 2..=20u64 {
            assert_eq!(trig_sum_from_dedekind(1, n).unwrap(), sigma2_closed(n).unwrap(), "n = {n}");
            // equivalently 4F_n³ s_{2,2} − 1/9
            let f3 = BigRational::from_integer(fib(n).pow(3));
            assert_eq!(q(4, 1) * f3 * s22_closed(n).unwrap() - q(1, 9), sigma2_closed(n).unwrap());
        }
        for n in 2..=14u64 {
            assert_eq!(trig_sum_from_dedekind(2, n).unwrap(), sigma4_closed(n).unwrap(), "sigma4 n={n}");
            assert_eq!(trig_sum_from_dedekind(3, n).unwrap(), sigma6_closed(n).unwrap(), "sigma6 n={n}");
        }
    }

    #[test]
    fn empty_sum_at_n_two() {
        for f in [sigma2_closed, sigma4_closed, sigma6_closed, sin4_closed, cos2sin4_closed, sigma2_closed_abstract] {
            assert_eq!(f(2).unwrap(), q(0, 1));
        }
        assert_eq!(sigma2_closed(3).unwrap(), q(1, 1));
        assert!(sigma2_closed(1).is_err());
    }

    #[test]
    fn both_sigma2_variants_agree() {
        for n in 2..=50u64 {
            assert_eq!(sigma2_closed(n).unwrap(), sigma2_closed_abstract(n).unwrap());
        }
    }

    #[test]
    fn asymptotic_constants_from_closed_forms() {
        assert_eq!(sigma2_expr().asymptotic_constants(2), (q(4, 15), q(-17, 225)));
        let (c4, d4) = sigma4_expr().asymptotic_constants(4);
        assert_eq!(c4, q(32 * 25, 1875));
        assert_eq!(d4, q(-196 * 25, 28125));
        let (_, d6) = sigma6_expr().asymptotic_constants(6);
        assert_eq!(d6, q(59606528 * 125, 20155078125));
    }

    #[test]
    fn reciprocity_examples() {
        for (b, c) in [(1, 2), (8, 13), (3, 7), (34, 55), (2, 9), (2, 1), (1, 1)] {
            assert!(apostol_check(b, c).unwrap(), "apostol {b} {c}");
            assert!(hwz_check(b, c).unwrap(), "hwz {b} {c}");
        }
        assert_eq!(apostol_check(4, 6), Err(Error::NotCoprime(4, 6)));
    }

    #[test]
    fn wce_closed_form_matches_exact_energy() {
        use crate::energy::{energy_direct_exact, RationalLattice};
        use crate::kernels::potential::BernoulliPotential;
        for n in 2..=12u64 {
            for p in [1i64, 6] {
                let lat = RationalLattice::fibonacci(n).unwrap();
                let pot = BernoulliPotential::<f64>::with_exact_p(1, q(p, 1)).unwrap();
                let nn = BigRational::from_integer(BigInt::from(lat.n()).pow(2));
                let e = energy_direct_exact(&pot, &lat) / nn - q(1, 1);
                assert_eq!(e, wce2_closed(n, &q(p, 1)).unwrap(), "n={n} p={p}");
            }
        }
    }

    proptest! {
        #[test]
        fn odd_degree_flips_under_reflection(c in 2u64..400, b0 in 1u64..400, ell in 1u32..5, m_half in 1u32..4) {
            let m = 2 * m_half + 1;
            let b = b0 % c;
            prop_assume!(b > 0 && b.gcd(&c) == 1);
            let s1 = dedekind_sum(ell, m, 1, b, c).unwrap();
            let s2 = dedekind_sum(ell, m, 1, c - b, c).unwrap();
            prop_assert_eq!(s2, -s1);
        }

        #[test]
        fn reciprocity_on_random_pairs(b in 1u64..300, c in 1u64..300) {
            prop_assume!(b.gcd(&c) == 1);
            prop_assert!(apostol_check(b, c).unwrap());
            prop_assert!(hwz_check(b, c).unwrap());
        }
    }
}
