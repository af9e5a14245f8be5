//! The ring Z[φ], Fibonacci and Lucas numbers, and exact floors involving φ.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `a + bφ` of Z[φ], where φ is the golden ratio.
///
/// The ordering is the one induced by the real embedding. Since φ is
/// irrational the embedding is injective, so this is a total order that
/// agrees with `Eq`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: BigInt::zero() }
    }

    pub fn zero() -> Self {
        GoldenInt::default()
    }

    pub fn one() -> Self {
        GoldenInt::from_int(1)
    }

    pub fn phi() -> Self {
        GoldenInt::new(0, 1)
    }

    /// `√5 = 2φ − 1`.
    pub fn sqrt5() -> Self {
        GoldenInt::new(-1, 2)
    }

    /// The Galois conjugate `ψ = 1 − φ = −1/φ`.
    pub fn psi() -> Self {
        GoldenInt::new(1, -1)
    }

    /// `φ^n` for any integer `n`: `F_{n−1} + F_nφ` for `n ≥ 0`, and
    /// `(−1)^m (F_{m+1} − F_mφ)` for `n = −m < 0`.
    pub fn phi_pow(n: i64) -> Self {
        if n >= 0 {
            let n = n as u64;
            let (f, f1) = fib_pair_raw(n);
            // F_{n-1} = F_{n+1} - F_n
            GoldenInt { a: &f1 - &f, b: f }
        } else {
            let m = n.unsigned_abs();
            let (f, f1) = fib_pair_raw(m);
            let g = GoldenInt { a: f1, b: -f };
            if m % 2 == 1 {
                -g
            } else {
                g
            }
        }
    }

    /// The Galois conjugate `a + bψ = (a + b) − bφ`.
    pub fn conjugate(&self) -> Self {
        GoldenInt { a: &self.a + &self.b, b: -&self.b }
    }

    /// `ν(a + bφ) = a² + ab − b²`, the product with the conjugate.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Sign of the real number `a + bφ`, decided in integers.
    ///
    /// With `p = 2a + b` the value is `(p + b√5)/2`; mixed signs are settled
    /// by comparing `p²` with `5b²`.
    pub fn signum(&self) -> Ordering {
        let p: BigInt = BigInt::from(2) * &self.a + &self.b;
        let q = &self.b;
        match (p.sign(), q.sign()) {
            (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
            (Sign::Plus | Sign::NoSign, Sign::Plus | Sign::NoSign) => Ordering::Greater,
            (Sign::Minus | Sign::NoSign, Sign::Minus | Sign::NoSign) => Ordering::Less,
            (Sign::Plus, Sign::Minus) => (&p * &p).cmp(&(BigInt::from(5) * q * q)),
            (Sign::Minus, Sign::Plus) => (BigInt::from(5) * q * q).cmp(&(&p * &p)),
        }
    }

    /// Exact `⌊a + bφ⌋`.
    pub fn floor(&self) -> BigInt {
        let fb = if self.b.is_negative() { -floor_phi_big(&-&self.b) - 1 } else { floor_phi_big(&self.b) };
        &self.a + fb
    }

    pub fn to_f64(&self) -> f64 {
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * phi
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}φ", self.a, -&self.b)
        } else {
            write!(f, "{} + {}φ", self.a, self.b)
        }
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    /// `(a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ`.
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let bd = &self.b * &rhs.b;
        GoldenInt { a: &self.a * &rhs.a + &bd, b: &self.a * &rhs.b + &self.b * &rhs.a + bd }
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -self.a, b: -self.b }
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, rhs: GoldenInt) -> GoldenInt {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, rhs: &GoldenInt) -> GoldenInt {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `F_n` and `L_n` together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibPair {
    pub n: u64,
    pub f: BigInt,
    pub l: BigInt,
}

impl FibPair {
    pub fn new(n: u64) -> Self {
        let (f, f1) = fib_pair_raw(n);
        // L_n = 2F_{n+1} - F_n
        let l = BigInt::from(2) * f1 - &f;
        FibPair { n, f, l }
    }
}

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair_raw(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..64 - n.leading_zeros()).rev() {
        // F_{2k} = F_k(2F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
        let two_b = BigInt::from(2) * &b;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// The Fibonacci number `F_n` (`F_0 = 0`, `F_1 = 1`).
pub fn fib(n: u64) -> BigInt {
    fib_pair_raw(n).0
}

/// The Lucas number `L_n` (`L_0 = 2`, `L_1 = 1`).
pub fn lucas(n: u64) -> BigInt {
    FibPair::new(n).l
}

/// `F_n` as a `u128`, or `None` once it overflows (`n > 186`).
pub fn fib_u128(n: u64) -> Option<u128> {
    if n > 186 {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 1..n {
        let c = a.checked_add(b)?;
        a = b;
        b = c;
    }
    Some(b)
}

/// `F_n` as a `u64` for `n ≤ 93`.
pub fn fib_u64(n: u64) -> Option<u64> {
    fib_u128(n).and_then(|v| u64::try_from(v).ok())
}

/// Exact `⌊φx⌋` for `x ≥ 0`, as `(x + isqrt(5x²)) / 2`.
pub fn floor_phi_big(x: &BigInt) -> BigInt {
    debug_assert!(!x.is_negative());
    let r = (BigInt::from(5) * x * x).sqrt();
    (x + r) / 2
}

/// Exact `⌊φi⌋`.
pub fn floor_phi_times(i: u64) -> BigInt {
    floor_phi_big(&BigInt::from(i))
}

pub(crate) fn isqrt_u128(v: u128) -> u128 {
    if v == 0 {
        return 0;
    }
    let mut r = libm::sqrt(v as f64) as u128;
    while r.checked_mul(r).is_none_or(|s| s > v) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= v) {
        r += 1;
    }
    r
}

/// Exact `⌊φi⌋` in machine integers, valid for `i < 2^61`.
pub fn floor_phi_u64(i: u64) -> u64 {
    let i = i as u128;
    ((i + isqrt_u128(5 * i * i)) / 2) as u64
}

/// Exact `⌊φx + φ⁻¹⌋ = ⌊(x+1)φ⌋ − 1` for `x ≥ 0`.
pub fn successor(x: &BigInt) -> BigInt {
    floor_phi_big(&(x + 1u32)) - 1u32
}
