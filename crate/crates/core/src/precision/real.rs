//! Extended-precision real numbers.
//!
//! [`Real`] wraps an [`astro_float::BigFloat`] together with the working
//! precision it was created at. Binary operations run at the larger of the
//! two operand precisions, so a value built at `Precision::digits(80)` keeps
//! its extra digits when mixed with 50-digit values.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, WORD_BIT_SIZE};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// log2(10)
const BITS_PER_DIGIT: f64 = std::f64::consts::LOG2_10;

/// Extra binary digits carried on top of the requested decimal precision.
const GUARD_BITS: usize = 32;

thread_local! {
    // Memoised constants (pi, ln 2, ...). Pure cache: results never depend on its state.
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("allocate constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision, stored in bits but usually specified in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision {
    bits: usize,
}

impl Precision {
    /// Smallest precision accepted at user-facing entry points.
    pub const MIN_DIGITS: u32 = 30;
    pub const DEFAULT_DIGITS: u32 = 50;

    /// `digits` significant decimal digits plus a fixed binary guard.
    pub fn digits(digits: u32) -> Self {
        let bits = (digits as f64 * BITS_PER_DIGIT).ceil() as usize + GUARD_BITS;
        Precision { bits }
    }

    /// Like [`Precision::digits`], but rejects anything below [`Precision::MIN_DIGITS`].
    pub fn checked_digits(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidPrecision {
                got: digits,
                min: Self::MIN_DIGITS,
            });
        }
        Ok(Self::digits(digits))
    }

    pub fn from_bits(bits: usize) -> Self {
        Precision { bits: bits.max(64) }
    }

    pub fn bits(self) -> usize {
        self.bits
    }

    /// Decimal digits this precision was requested with (guard bits excluded).
    pub fn decimal_digits(self) -> u32 {
        ((self.bits.saturating_sub(GUARD_BITS)) as f64 / BITS_PER_DIGIT).floor() as u32
    }

    pub fn with_extra_digits(self, extra: u32) -> Self {
        Precision {
            bits: self.bits + (extra as f64 * BITS_PER_DIGIT).ceil() as usize,
        }
    }

    pub fn with_extra_bits(self, extra: usize) -> Self {
        Precision {
            bits: self.bits + extra,
        }
    }

    /// `10^(slack - P)` with `P` the decimal digits of this precision.
    pub fn tolerance(self, slack: i32) -> Real {
        Real::pow10(slack - self.decimal_digits() as i32, self)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::digits(Self::DEFAULT_DIGITS)
    }
}

#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    bits: usize,
}

impl Real {
    fn wrap(v: BigFloat, bits: usize) -> Self {
        debug_assert!(!v.is_nan(), "NaN produced in extended-precision arithmetic");
        Real { v, bits }
    }

    pub fn zero(p: Precision) -> Self {
        Self::from_i64(0, p)
    }

    pub fn one(p: Precision) -> Self {
        Self::from_i64(1, p)
    }

    pub fn from_i64(x: i64, p: Precision) -> Self {
        Self::wrap(BigFloat::from_i64(x, p.bits), p.bits)
    }

    pub fn from_u64(x: u64, p: Precision) -> Self {
        Self::wrap(BigFloat::from_u64(x, p.bits), p.bits)
    }

    /// Exact conversion of the binary value of `x`.
    pub fn from_f64(x: f64, p: Precision) -> Self {
        Self::wrap(BigFloat::from_f64(x, p.bits), p.bits)
    }

    /// `num / den` rounded to `p`.
    pub fn from_ratio(num: i64, den: i64, p: Precision) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num, p) / Self::from_i64(den, p)
    }

    /// Parses a decimal literal such as `0.25`, `-1.5e-3` or `1/3`.
    pub fn parse(s: &str, p: Precision) -> Result<Self> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let num = Self::parse(n, p)?;
            let den = Self::parse(d, p)?;
            if den.is_zero() {
                return Err(Error::Parse(s.to_string()));
            }
            return Ok(num / den);
        }
        let ok = !t.is_empty()
            && t.chars()
                .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'));
        if !ok {
            return Err(Error::Parse(s.to_string()));
        }
        let v = with_consts(|cc| BigFloat::parse(t, Radix::Dec, p.bits, RM, cc));
        if v.is_nan() || v.is_inf() {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Real { v, bits: p.bits })
    }

    pub fn pi(p: Precision) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(p.bits, RM)), p.bits)
    }

    /// `10^k`, exact for `k >= 0`.
    pub fn pow10(k: i32, p: Precision) -> Self {
        let ten = Self::from_i64(10, p);
        ten.powi(k as i64)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn precision(&self) -> Precision {
        Precision::from_bits(self.bits)
    }

    /// Re-rounds (or widens) to precision `p`.
    pub fn with_precision(&self, p: Precision) -> Self {
        let mut v = self.v.clone();
        v.set_precision(p.bits, RM).expect("valid precision");
        Real { v, bits: p.bits }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn signum(&self) -> i32 {
        if self.v.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.bits)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.v.reciprocal(self.bits, RM), self.bits)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.bits, RM), self.bits)
    }

    pub fn cbrt(&self) -> Self {
        Self::wrap(self.v.cbrt(self.bits, RM), self.bits)
    }

    pub fn exp(&self) -> Self {
        let bits = self.bits;
        Self::wrap(with_consts(|cc| self.v.exp(bits, RM, cc)), bits)
    }

    pub fn ln(&self) -> Self {
        let bits = self.bits;
        Self::wrap(with_consts(|cc| self.v.ln(bits, RM, cc)), bits)
    }

    pub fn sin(&self) -> Self {
        let bits = self.bits;
        Self::wrap(with_consts(|cc| self.v.sin(bits, RM, cc)), bits)
    }

    pub fn cos(&self) -> Self {
        let bits = self.bits;
        Self::wrap(with_consts(|cc| self.v.cos(bits, RM, cc)), bits)
    }

    /// Integer power by repeated squaring; negative exponents invert.
    pub fn powi(&self, n: i64) -> Self {
        let m = self.v.powi(n.unsigned_abs() as usize, self.bits, RM);
        let r = Self::wrap(m, self.bits);
        if n < 0 {
            r.recip()
        } else {
            r
        }
    }

    /// `self^e` for `self > 0`.
    pub fn pow(&self, e: &Real) -> Self {
        let bits = self.bits.max(e.bits);
        Self::wrap(with_consts(|cc| self.v.pow(&e.v, bits, RM, cc)), bits)
    }

    pub fn floor(&self) -> Self {
        Self::wrap(self.v.floor(), self.bits)
    }

    /// Nearest integer (ties away from zero).
    pub fn round(&self) -> Self {
        let half = Self::from_ratio(1, 2, self.precision());
        if self.is_negative() {
            -(&(-self) + &half).floor()
        } else {
            (self + &half).floor()
        }
    }

    pub fn max(&self, other: &Real) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |self| < 2^e`; `None` for zero.
    pub fn exponent2(&self) -> Option<i64> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent().map(|e| e as i64)
        }
    }

    /// Approximate `log10 |self|`; `-inf` for zero.
    pub fn log10_abs(&self) -> f64 {
        match self.v.as_raw_parts() {
            Some((m, _, _, e, _)) if !self.v.is_zero() => {
                let frac = top_fraction(m);
                (frac.log2() + e as f64) * std::f64::consts::LOG10_2
            }
            _ => f64::NEG_INFINITY,
        }
    }

    /// Nearest `f64` (saturating to `±inf`/`0` outside the double range).
    pub fn to_f64(&self) -> f64 {
        match self.v.as_raw_parts() {
            Some((m, _, s, e, _)) if !self.v.is_zero() => {
                let frac = top_fraction(m);
                let e = e as i64;
                let mag = if e > 1100 {
                    f64::INFINITY
                } else if e < -1100 {
                    0.0
                } else {
                    frac * 2f64.powi(e as i32)
                };
                if s == Sign::Neg {
                    -mag
                } else {
                    mag
                }
            }
            _ => 0.0,
        }
    }

    /// Decimal rendering with exactly `digits` significant digits.
    ///
    /// Values with decimal exponent in `[-6, 21)` are written positionally,
    /// everything else as `d.ddd…e±x`. Zero is written as `0`.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.v.is_zero() {
            return "0".to_string();
        }
        let digits = digits.max(1) as usize;
        let raw = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).expect("format real");
        let (neg, body) = match raw.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, raw.as_str()),
        };
        let (mant, exp) = match body.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i64>().expect("decimal exponent")),
            None => (body, 0),
        };
        let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
        let mut ds: Vec<u8> = int_part
            .bytes()
            .chain(frac_part.bytes())
            .map(|b| b - b'0')
            .collect();
        // position of the decimal point relative to the first digit
        let mut exp10 = exp + int_part.len() as i64 - 1;
        let lead = ds.iter().position(|&d| d != 0).unwrap_or(0);
        ds.drain(..lead);
        exp10 -= lead as i64;

        if ds.len() > digits {
            let round_up = ds[digits] >= 5;
            ds.truncate(digits);
            if round_up {
                let mut i = digits;
                loop {
                    if i == 0 {
                        ds.insert(0, 1);
                        ds.truncate(digits);
                        exp10 += 1;
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
        }
        ds.resize(digits, 0);

        let text: String = ds.iter().map(|d| (b'0' + d) as char).collect();
        let mut out = String::with_capacity(digits + 8);
        if neg {
            out.push('-');
        }
        if (-6..21).contains(&exp10) {
            if exp10 < 0 {
                out.push_str("0.");
                out.extend(std::iter::repeat_n('0', (-exp10 - 1) as usize));
                out.push_str(&text);
            } else {
                let int_len = exp10 as usize + 1;
                if int_len >= digits {
                    out.push_str(&text);
                    out.extend(std::iter::repeat_n('0', int_len - digits));
                } else {
                    out.push_str(&text[..int_len]);
                    out.push('.');
                    out.push_str(&text[int_len..]);
                }
            }
        } else {
            out.push_str(&text[..1]);
            if digits > 1 {
                out.push('.');
                out.push_str(&text[1..]);
            }
            out.push('e');
            out.push_str(&exp10.to_string());
        }
        out
    }

    /// `|self - other| <= tol * |other|` (absolute when `other` is zero).
    pub fn rel_close(&self, other: &Real, tol: &Real) -> bool {
        let diff = (self - other).abs();
        if other.is_zero() {
            diff <= *tol
        } else {
            diff <= tol * &other.abs()
        }
    }

    /// `|self - other| / |other|`, or the absolute difference when `other` is zero.
    pub fn rel_diff(&self, other: &Real) -> Real {
        let diff = (self - other).abs();
        if other.is_zero() {
            diff
        } else {
            diff / other.abs()
        }
    }
}

/// Leading mantissa bits as a fraction in [1/2, 1).
fn top_fraction(m: &[astro_float::Word]) -> f64 {
    let base = 2f64.powi(WORD_BIT_SIZE as i32);
    let mut frac = 0.0;
    let mut scale = 1.0 / base;
    for w in m.iter().rev().take(128 / WORD_BIT_SIZE) {
        frac += *w as f64 * scale;
        scale /= base;
    }
    frac
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .map(|d| d as u32)
            .unwrap_or_else(|| self.precision().decimal_digits());
        f.write_str(&self.to_decimal(digits))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({}, {} bits)", self.to_decimal(25), self.bits)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.v.partial_cmp(&other.v) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $astro:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let bits = self.bits.max(rhs.bits);
                Real::wrap(self.v.$astro(&rhs.v, bits, RM), bits)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<i64> for &Real {
            type Output = Real;
            fn $method(self, rhs: i64) -> Real {
                Real::wrap(
                    self.v.$astro(&BigFloat::from_i64(rhs, 64), self.bits, RM),
                    self.bits,
                )
            }
        }
        impl $tr<i64> for Real {
            type Output = Real;
            fn $method(self, rhs: i64) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $assign_tr<&Real> for Real {
            fn $assign_method(&mut self, rhs: &Real) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_tr<Real> for Real {
            fn $assign_method(&mut self, rhs: Real) {
                *self = (&*self).$method(&rhs);
            }
        }
        impl $assign_tr<i64> for Real {
            fn $assign_method(&mut self, rhs: i64) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

real_binop!(Add, add, add, AddAssign, add_assign);
real_binop!(Sub, sub, sub, SubAssign, sub_assign);
real_binop!(Mul, mul, mul, MulAssign, mul_assign);
real_binop!(Div, div, div, DivAssign, div_assign);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.neg(), self.bits)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.clone().neg(), self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn decimal_rendering() {
        let q = Real::from_ratio(1, 4, p());
        assert_eq!(q.to_decimal(5), "0.25000");
        assert_eq!(Real::from_ratio(2, 3, p()).to_decimal(4), "0.6667");
        assert_eq!(Real::from_i64(-1234, p()).to_decimal(6), "-1234.00");
        assert_eq!(Real::from_i64(1234, p()).to_decimal(2), "1200");
        assert_eq!(
            Real::from_ratio(1, 3, p()).powi(30).to_decimal(3),
            "4.86e-15"
        );
        assert_eq!(
            Real::from_ratio(999_999, 1_000_000, p()).to_decimal(3),
            "1.00"
        );
        assert_eq!(Real::zero(p()).to_decimal(10), "0");
    }

    #[test]
    fn parse_accepts_fractions_and_exponents() {
        let a = Real::parse("1/3", p()).unwrap();
        let b = Real::from_ratio(1, 3, p());
        assert_eq!(a, b);
        let c = Real::parse("-2.5e-3", p()).unwrap();
        assert_eq!(c, Real::from_ratio(-1, 400, p()));
        assert!(Real::parse("abc", p()).is_err());
        assert!(Real::parse("1/0", p()).is_err());
    }

    #[test]
    fn decimal_round_trip_is_stable() {
        let x = Real::pi(p()).sqrt() / 7;
        let s = x.to_decimal(50);
        let y = Real::parse(&s, p()).unwrap();
        assert_eq!(y.to_decimal(50), s);
    }

    #[test]
    fn f64_view() {
        assert_eq!(Real::from_i64(1, p()).to_f64(), 1.0);
        assert_eq!(Real::from_ratio(-3, 8, p()).to_f64(), -0.375);
        let big = Real::from_i64(10, p()).powi(200);
        assert!((big.to_f64() / 1e200 - 1.0).abs() < 1e-15);
        assert!((big.log10_abs() - 200.0).abs() < 1e-12);
        assert_eq!(Real::from_i64(5, p()).exponent2(), Some(3));
    }

    #[test]
    fn precision_bookkeeping() {
        let pr = Precision::digits(50);
        assert_eq!(pr.decimal_digits(), 50);
        assert!(Precision::checked_digits(29).is_err());
        let hi = Real::one(pr.with_extra_digits(30));
        let lo = Real::one(pr);
        assert_eq!((&hi + &lo).bits(), hi.bits());
    }
}
