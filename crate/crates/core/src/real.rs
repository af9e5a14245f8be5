//! Floating-point backends.
//!
//! Numerical code is written once against [`Real`] and run either in `f64`
//! or in the double-double type [`Dd`] (about 106 significant bits). Running
//! both and comparing is the crate's numerical-error proxy.

use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Real:
    Copy
    + Send
    + Sync
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + 'static
{
    /// Significand bits of the format.
    const BITS: u32;
    /// Unit roundoff `2^{-BITS}`.
    const EPSILON: f64;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn from_u64(x: u64) -> Self;
    fn from_bigint(x: &BigInt) -> Self;
    fn to_dd(self) -> Dd;
    fn from_dd(x: Dd) -> Self;

    fn pi() -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn floor(self) -> Self;
    /// `sin(πx)`, with the argument reduction done on `x` rather than `πx`.
    fn sin_pi(self) -> Self;
    /// `cos(πx)`.
    fn cos_pi(self) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn from_i64(x: i64) -> Self {
        let r = Self::from_u64(x.unsigned_abs());
        if x < 0 {
            -r
        } else {
            r
        }
    }

    fn from_u128(x: u128) -> Self {
        let hi = Self::from_u64((x >> 64) as u64) * Self::from_f64(18446744073709551616.0);
        hi + Self::from_u64(x as u64)
    }

    fn from_i128(x: i128) -> Self {
        let r = Self::from_u128(x.unsigned_abs());
        if x < 0 {
            -r
        } else {
            r
        }
    }

    /// `n / d` rounded once in the working format.
    fn frac(n: u64, d: u64) -> Self {
        Self::from_u64(n) / Self::from_u64(d)
    }

    fn from_rational(x: &BigRational) -> Self {
        let (n, d) = (x.numer(), x.denom());
        // keep both sides inside the exponent range before dividing
        let excess = n.bits().max(d.bits()).saturating_sub(900);
        if excess > 0 {
            Self::from_bigint(&(n >> excess)) / Self::from_bigint(&(d >> excess))
        } else {
            Self::from_bigint(n) / Self::from_bigint(d)
        }
    }

    fn phi() -> Self {
        (Self::one() + Self::from_f64(5.0).sqrt()) / Self::from_f64(2.0)
    }

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        if n < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }

    /// `self^e` for `self > 0`; integral `e` goes through [`Real::powi`].
    fn powf(self, e: Self) -> Self {
        let ef = e.to_f64();
        if ef == libm::round(ef) && libm::fabs(ef) < 1024.0 && Self::from_f64(ef) == e {
            self.powi(ef as i32)
        } else {
            (e * self.ln()).exp()
        }
    }

    fn is_finite(self) -> bool {
        self.to_f64().is_finite()
    }

    /// Fractional part of `m·t`, with the product formed in double-double so
    /// that large `m` does not destroy the argument.
    fn frac_mul(self, m: u64) -> Self {
        let p = self.to_dd() * Dd::from_u64(m);
        Self::from_dd(p - p.floor())
    }
}

impl Real for f64 {
    const BITS: u32 = 53;
    const EPSILON: f64 = f64::EPSILON / 2.0;

    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn from_u64(x: u64) -> Self {
        x as f64
    }
    fn to_dd(self) -> Dd {
        Dd::from_f64(self)
    }
    fn from_dd(x: Dd) -> Self {
        x.hi + x.lo
    }
    fn from_bigint(x: &BigInt) -> Self {
        x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
    }
    fn pi() -> Self {
        core::f64::consts::PI
    }
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    fn exp(self) -> Self {
        libm::exp(self)
    }
    fn ln(self) -> Self {
        libm::log(self)
    }
    fn floor(self) -> Self {
        libm::floor(self)
    }
    fn sin_pi(self) -> Self {
        let (neg, t) = reduce_half_turn(self);
        let s =
            if t <= 0.25 { libm::sin(core::f64::consts::PI * t) } else { libm::cos(core::f64::consts::PI * (0.5 - t)) };
        if neg {
            -s
        } else {
            s
        }
    }
    fn cos_pi(self) -> Self {
        let t = libm::fabs(self - 2.0 * libm::round(self / 2.0));
        // cos(πt) for t in [0, 1]
        if t <= 0.25 {
            libm::cos(core::f64::consts::PI * t)
        } else if t <= 0.75 {
            libm::sin(core::f64::consts::PI * (0.5 - t))
        } else {
            -libm::cos(core::f64::consts::PI * (1.0 - t))
        }
    }
    fn powf(self, e: Self) -> Self {
        libm::pow(self, e)
    }
    fn powi(self, n: i32) -> Self {
        libm::pow(self, n as f64)
    }
}

/// Reduce `x` for `sin(πx)`: returns `(negate, t)` with `t ∈ [0, 1/2]`.
fn reduce_half_turn(x: f64) -> (bool, f64) {
    let mut t = x - 2.0 * libm::round(x / 2.0);
    let mut neg = false;
    if t < 0.0 {
        neg = true;
        t = -t;
    }
    if t > 0.5 {
        t = 1.0 - t;
    }
    (neg, t)
}

/// Double-double number `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = 134217729.0 * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    const PI: Dd = Dd::new(3.141592653589793116e+00, 1.224646799147353207e-16);
    const LN2: Dd = Dd::new(6.931471805599452862e-01, 2.319046813846299558e-17);

    fn from_sum(a: f64, b: f64) -> Dd {
        let (s, e) = two_sum(a, b);
        Dd::new(s, e)
    }

    fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (s, e) = quick_two_sum(p1, p2 + self.lo * b);
        Dd::new(s, e)
    }

    fn ldexp(self, e: i32) -> Dd {
        Dd::new(libm::scalbn(self.hi, e), libm::scalbn(self.lo, e))
    }

    fn sqr(self) -> Dd {
        self * self
    }

    const TAYLOR_CUTOFF: f64 = 1e-34;

    /// Taylor series of `sin y` for `|y| ≤ π/4`.
    fn sin_taylor(y: Dd) -> Dd {
        let y2 = y.sqr();
        let mut term = y;
        let mut s = y;
        let mut k = 1.0;
        loop {
            term = -(term * y2) / Dd::from_f64((2.0 * k) * (2.0 * k + 1.0));
            s += term;
            if libm::fabs(term.hi) < Self::TAYLOR_CUTOFF {
                return s;
            }
            k += 1.0;
        }
    }

    /// Taylor series of `cos y` for `|y| ≤ π/4`.
    fn cos_taylor(y: Dd) -> Dd {
        let y2 = y.sqr();
        let mut term = Dd::one();
        let mut s = Dd::one();
        let mut k = 1.0;
        loop {
            term = -(term * y2) / Dd::from_f64((2.0 * k - 1.0) * (2.0 * k));
            s += term;
            if libm::fabs(term.hi) < Self::TAYLOR_CUTOFF {
                return s;
            }
            k += 1.0;
        }
    }

    /// Reduce to `t ∈ [−1, 1]` with `x ≡ t (mod 2)`.
    fn reduce_mod2(self) -> Dd {
        let n = libm::round(self.hi / 2.0);
        self - Dd::from_f64(2.0 * n)
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(self, digits: usize, out: &mut impl fmt::Write) -> fmt::Result {
        if !self.hi.is_finite() {
            return write!(out, "{}", self.hi);
        }
        if self.hi == 0.0 {
            return write!(out, "0");
        }
        let mut x = self.abs();
        if self.hi < 0.0 {
            out.write_char('-')?;
        }
        let mut e = libm::floor(libm::log10(x.hi)) as i32;
        x = x * Dd::from_f64(10.0).powi(-e);
        if x.hi >= 10.0 {
            x = x / Dd::from_f64(10.0);
            e += 1;
        } else if x.hi < 1.0 {
            x = x * Dd::from_f64(10.0);
            e -= 1;
        }
        let mut ds = alloc::vec::Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = libm::floor(x.hi).clamp(0.0, 9.0);
            ds.push(d as u8);
            x = (x - Dd::from_f64(d)) * Dd::from_f64(10.0);
        }
        // round half up on the guard digit
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    e += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        ds.truncate(digits);
        write!(out, "{}.", ds[0])?;
        for d in &ds[1..] {
            write!(out, "{d}")?;
        }
        write!(out, "e{e}")
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_decimal(f.precision().unwrap_or(32).max(1), f)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd::new(s1, s2)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd::new(-self.hi, -self.lo)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let (s, e) = quick_two_sum(p1, p2 + (self.hi * b.lo + self.lo * b.hi));
        Dd::new(s, e)
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e) + Dd::from_f64(q3)
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr for Dd {
            #[inline]
            fn $m(&mut self, rhs: Dd) {
                *self = *self $op rhs;
            }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

impl Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::zero(), |a, b| a + b)
    }
}

impl Real for Dd {
    const BITS: u32 = 106;
    const EPSILON: f64 = 1.232595164407831e-32;

    fn from_f64(x: f64) -> Self {
        Dd::new(x, 0.0)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn to_dd(self) -> Dd {
        self
    }

    fn from_dd(x: Dd) -> Self {
        x
    }

    fn from_u64(x: u64) -> Self {
        let hi = x as f64;
        let lo = (x as i128 - hi as i128) as f64;
        let (s, e) = quick_two_sum(hi, lo);
        Dd::new(s, e)
    }

    fn from_bigint(x: &BigInt) -> Self {
        let hi = x.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return Dd::from_f64(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY });
        }
        let rest = x - BigInt::from_f64(hi).expect("finite float is an integer here");
        let lo = rest.to_f64().unwrap_or(0.0);
        Dd::from_sum(hi, lo)
    }

    fn pi() -> Self {
        Dd::PI
    }

    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Dd::zero() } else { Dd::from_f64(f64::NAN) };
        }
        let x = 1.0 / libm::sqrt(self.hi);
        let ax = self.hi * x;
        let corr = (self - Dd::from_f64(ax).sqr()).hi * (x * 0.5);
        Dd::from_sum(ax, corr)
    }

    fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::zero();
        }
        let m = libm::floor(self.hi / Dd::LN2.hi + 0.5);
        // r = (x - m ln2) / 2^9, then expm1 by Taylor and nine squarings
        let r = (self - Dd::LN2.mul_f64(m)).ldexp(-9);
        let mut term = r;
        let mut s = r;
        let mut k = 2.0;
        loop {
            term = term * r / Dd::from_f64(k);
            s += term;
            if libm::fabs(term.hi) < 1e-36 {
                break;
            }
            k += 1.0;
        }
        for _ in 0..9 {
            s = s.ldexp(1) + s.sqr();
        }
        (s + Dd::one()).ldexp(m as i32)
    }

    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::from_f64(if self.hi == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        // one Newton step on exp(y) = x doubles the accuracy of the f64 guess
        let y = Dd::from_f64(libm::log(self.hi));
        y + self * (-y).exp() - Dd::one()
    }

    fn floor(self) -> Self {
        let fh = libm::floor(self.hi);
        if fh == self.hi {
            let (s, e) = quick_two_sum(fh, libm::floor(self.lo));
            Dd::new(s, e)
        } else {
            Dd::from_f64(fh)
        }
    }

    fn sin_pi(self) -> Self {
        let mut t = self.reduce_mod2();
        let mut neg = false;
        if t.hi < 0.0 {
            neg = true;
            t = -t;
        }
        if t.hi > 0.5 {
            t = Dd::one() - t;
        }
        let s =
            if t.hi <= 0.25 { Dd::sin_taylor(Dd::PI * t) } else { Dd::cos_taylor(Dd::PI * (Dd::from_f64(0.5) - t)) };
        if neg {
            -s
        } else {
            s
        }
    }

    fn cos_pi(self) -> Self {
        let t = self.reduce_mod2().abs();
        if t.hi <= 0.25 {
            Dd::cos_taylor(Dd::PI * t)
        } else if t.hi <= 0.75 {
            Dd::sin_taylor(Dd::PI * (Dd::from_f64(0.5) - t))
        } else {
            -Dd::cos_taylor(Dd::PI * (Dd::one() - t))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use astro_float::{BigFloat, Consts, RoundingMode};
    use proptest::prelude::*;

    const P: usize = 256;
    const RM: RoundingMode = RoundingMode::ToEven;

    fn big(x: Dd) -> BigFloat {
        BigFloat::from_f64(x.hi, P).add(&BigFloat::from_f64(x.lo, P), P, RM)
    }

    /// `|got − want| < tol·|want|`, decided in 256-bit arithmetic.
    fn close(got: Dd, want: &BigFloat, tol: f64) -> bool {
        let d = big(got).sub(want, P, RM).abs();
        let bound = want.abs().mul(&BigFloat::from_f64(tol, P), P, RM);
        d < bound
    }

    #[test]
    fn basic_arithmetic_is_exact_where_it_should_be() {
        let a = Dd::from_f64(1.0) + Dd::from_f64(1e-20);
        assert_eq!(a.hi, 1.0);
        assert_eq!(a.lo, 1e-20);
        let third = Dd::one() / Dd::from_f64(3.0);
        let back = third * Dd::from_f64(3.0) - Dd::one();
        assert!(libm::fabs(back.to_f64()) < 1e-31);
        let r2 = Dd::from_f64(2.0).sqrt();
        assert!(libm::fabs((r2 * r2 - Dd::from_f64(2.0)).to_f64()) < 1e-31);
    }

    #[test]
    fn conversions() {
        let x = u64::MAX;
        let d = Dd::from_u64(x);
        assert_eq!(d.hi as u128 as i128 + d.lo as i128, x as i128);
        let b = BigInt::from(10).pow(40) + 7;
        let z = Dd::from_bigint(&b);
        assert!(libm::fabs(z.hi - 1e40) < 1e25);
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        let t = Dd::from_rational(&r);
        assert!(libm::fabs((t - Dd::one() / Dd::from_f64(3.0)).to_f64()) < 1e-32);
        assert_eq!(<f64 as Real>::from_i64(-12), -12.0);
        assert_eq!(Dd::from_u128(1u128 << 100).hi, libm::scalbn(1.0, 100));
    }

    #[test]
    fn transcendental_functions_against_wide_floats() {
        let mut cc = Consts::new().unwrap();
        let samples = [1e-8, 0.001, 0.1, 0.3, 0.5, 0.7777, 1.0, 2.5, 7.25, 33.0, 150.5];
        for &x in &samples {
            let d = Dd::from_f64(x);
            let bx = BigFloat::from_f64(x, P);
            assert!(close(d.exp(), &bx.exp(P, RM, &mut cc), 1e-30), "exp({x})");
            assert!(close((-d).exp(), &bx.clone().neg().exp(P, RM, &mut cc), 1e-30), "exp(-{x})");
            assert!(close(d.ln(), &bx.ln(P, RM, &mut cc), 1e-30) || x == 1.0, "ln({x})");
            assert!(close(d.sqrt(), &bx.sqrt(P, RM), 1e-31), "sqrt({x})");
        }
        let pi = cc.pi(P, RM);
        for &x in &[1e-7, 0.01, 0.2, 0.25, 0.3, 0.49, 0.5, 0.61, 0.9, 1.3, -0.4, 17.8] {
            let bx = BigFloat::from_f64(x, P).mul(&pi, P, RM);
            let d = Dd::from_f64(x);
            assert!(close(d.sin_pi(), &bx.sin(P, RM, &mut cc), 1e-30), "sin_pi({x})");
            if libm::fabs(x - 0.5) > 1e-3 {
                assert!(close(d.cos_pi(), &bx.cos(P, RM, &mut cc), 1e-29), "cos_pi({x})");
            }
        }
        let base = Dd::from_f64(1234.5);
        let e = Dd::from_f64(-2.5);
        let want = BigFloat::from_f64(1234.5, P).pow(&BigFloat::from_f64(-2.5, P), P, RM, &mut cc);
        assert!(close(base.powf(e), &want, 1e-29));
    }

    #[test]
    fn f64_backend_trig_reduction() {
        assert_eq!(<f64 as Real>::sin_pi(1.0), 0.0);
        assert_eq!(<f64 as Real>::sin_pi(0.5), 1.0);
        assert!((<f64 as Real>::sin_pi(1.0 / 6.0) - 0.5).abs() < 1e-16);
        assert!((<f64 as Real>::cos_pi(2.0 / 3.0) + 0.5).abs() < 1e-15);
        assert!((<f64 as Real>::sin_pi(-0.25) + libm::sqrt(0.5)).abs() < 3e-16);
    }

    #[test]
    fn decimal_rendering() {
        let third = Dd::one() / Dd::from_f64(3.0);
        assert_eq!(std::format!("{third:.20}"), "3.3333333333333333333e-1");
        assert_eq!(std::format!("{:.5}", Dd::from_f64(-2.0)), "-2.0000e0");
        assert_eq!(std::format!("{:.3}", Dd::from_f64(9.9996)), "1.00e1");
    }

    proptest! {
        #[test]
        fn sin_pi_matches_f64_loosely(x in -50.0f64..50.0) {
            let d = Dd::from_f64(x).sin_pi().to_f64();
            prop_assert!((d - <f64 as Real>::sin_pi(x)).abs() < 1e-14);
        }

        #[test]
        fn exp_ln_roundtrip(x in 1e-6f64..1e6) {
            let d = Dd::from_f64(x);
            let back = d.ln().exp();
            prop_assert!(((back - d) / d).abs().to_f64() < 1e-30);
        }

        #[test]
        fn division_inverts_multiplication(a in -1e6f64..1e6, b in 1e-3f64..1e3) {
            let q = Dd::from_f64(a) / Dd::from_f64(b);
            let back = q * Dd::from_f64(b) - Dd::from_f64(a);
            prop_assert!(back.abs().to_f64() <= 1e-30 * a.abs().max(1.0));
        }
    }
}
