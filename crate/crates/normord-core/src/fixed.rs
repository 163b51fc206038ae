//! Fixed-point arithmetic over arbitrary-precision mantissas with directed
//! rounding, and the certified intervals built from it. A value is
//! `mant / 2^bits`; every inexact operation takes an explicit rounding
//! direction so enclosures stay rigorous.

use alloc::string::{String, ToString};
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Toward −∞.
    Down,
    /// Toward +∞.
    Up,
}

/// Fixed-point number: `mant / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fx {
    mant: BigInt,
    bits: u32,
}

fn div_directed(num: &BigInt, den: &BigInt, round: Rounding) -> BigInt {
    debug_assert!(den.is_positive());
    match round {
        Rounding::Down => num.div_floor(den),
        Rounding::Up => num.div_ceil(den),
    }
}

impl Fx {
    pub fn zero(bits: u32) -> Self {
        Fx {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Fx {
            mant: BigInt::one() << bits,
            bits,
        }
    }

    pub fn from_i128(v: i128, bits: u32) -> Self {
        Fx {
            mant: BigInt::from(v) << bits,
            bits,
        }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        Fx {
            mant: v.clone() << bits,
            bits,
        }
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32, round: Rounding) -> Self {
        assert!(den.is_positive());
        Fx {
            mant: div_directed(&(num.clone() << bits), den, round),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    /// Multiply by the exact rational num/den with directed rounding.
    pub fn mul_ratio(&self, num: u128, den: u128, round: Rounding) -> Self {
        Fx {
            mant: div_directed(&(&self.mant * BigInt::from(num)), &BigInt::from(den), round),
            bits: self.bits,
        }
    }

    /// Exact multiplication by an integer.
    pub fn mul_u128(&self, k: u128) -> Self {
        Fx {
            mant: &self.mant * BigInt::from(k),
            bits: self.bits,
        }
    }

    pub fn div_u128(&self, k: u128, round: Rounding) -> Self {
        Fx {
            mant: div_directed(&self.mant, &BigInt::from(k), round),
            bits: self.bits,
        }
    }

    pub fn square(&self, round: Rounding) -> Self {
        let prod = &self.mant * &self.mant;
        Fx {
            mant: div_directed(&prod, &(BigInt::one() << self.bits), round),
            bits: self.bits,
        }
    }

    pub fn add(&self, other: &Fx) -> Self {
        assert_eq!(self.bits, other.bits);
        Fx {
            mant: &self.mant + &other.mant,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Fx) -> Self {
        assert_eq!(self.bits, other.bits);
        Fx {
            mant: &self.mant - &other.mant,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Self {
        Fx {
            mant: -&self.mant,
            bits: self.bits,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn cmp_fx(&self, other: &Fx) -> Ordering {
        assert_eq!(self.bits, other.bits);
        self.mant.cmp(&other.mant)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let num = self.mant.to_f64().unwrap_or(f64::NAN);
        num / libm_exp2(self.bits)
    }

    /// Scientific-notation rendering with `sig` significant digits,
    /// round-half-up. Deterministic across platforms.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.mant.is_zero() {
            return "0".to_string();
        }
        let neg = self.mant.is_negative();
        let m: BigUint = self.mant.magnitude().clone();
        let b = self.bits;

        // decimal exponent e with 10^e <= |value| < 10^(e+1)
        let mut e = num_traits::Float::floor(
            ((m.bits() as i64) - (b as i64)) as f64 * core::f64::consts::LOG10_2,
        ) as i64;
        let ge_pow10 = |e: i64| -> bool {
            if e >= 0 {
                m >= BigUint::from(10u32).pow(e as u32) << b
            } else {
                &m * BigUint::from(10u32).pow((-e) as u32) >= BigUint::one() << b
            }
        };
        while !ge_pow10(e) {
            e -= 1;
        }
        while ge_pow10(e + 1) {
            e += 1;
        }

        // t = round(|value| * 10^(sig-1-e)) has exactly sig digits
        let k = sig as i64 - 1 - e;
        let (num, den) = if k >= 0 {
            (
                &m * BigUint::from(10u32).pow(k as u32),
                BigUint::one() << b,
            )
        } else {
            (
                m.clone(),
                (BigUint::one() << b) * BigUint::from(10u32).pow((-k) as u32),
            )
        };
        let t = (&num * 2u32 + &den) / (den * 2u32);
        let mut digits = t.to_string();
        if digits.len() > sig {
            // rounding carried into an extra digit (all-nines case)
            e += 1;
            digits.truncate(sig);
        }
        debug_assert_eq!(digits.len(), sig);

        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&digits[..1]);
        if sig > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&e.to_string());
        out
    }
}

// 2^bits as f64; bits can exceed f64 range only for absurd precisions.
fn libm_exp2(bits: u32) -> f64 {
    num_traits::Float::powi(2.0f64, bits as i32)
}

/// Certified enclosure [lo, hi] with lo ≤ true value ≤ hi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Fx,
    hi: Fx,
}

impl Interval {
    pub fn new(lo: Fx, hi: Fx) -> Self {
        assert_eq!(lo.bits(), hi.bits());
        assert!(lo.cmp_fx(&hi) != Ordering::Greater, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(v: Fx) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Fx {
        &self.lo
    }

    pub fn hi(&self) -> &Fx {
        &self.hi
    }

    pub fn bits(&self) -> u32 {
        self.lo.bits()
    }

    pub fn width(&self) -> Fx {
        self.hi.sub(&self.lo)
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        self.lo.to_rational() <= *r && *r <= self.hi.to_rational()
    }

    pub fn contains_f64(&self, v: f64) -> bool {
        match BigRational::from_float(v) {
            Some(r) => self.contains(&r),
            None => false,
        }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.to_rational() <= other.hi.to_rational()
            && other.lo.to_rational() <= self.hi.to_rational()
    }

    /// True when every point of `self` lies within `other`.
    pub fn within(&self, other: &Interval) -> bool {
        other.lo.to_rational() <= self.lo.to_rational()
            && self.hi.to_rational() <= other.hi.to_rational()
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.sub(&other.hi), self.hi.sub(&other.lo))
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.add(&other.lo), self.hi.add(&other.hi))
    }

    /// Outward-rounded scaling by the nonnegative rational num/den.
    pub fn mul_ratio(&self, num: u128, den: u128) -> Interval {
        Interval::new(
            self.lo.mul_ratio(num, den, Rounding::Down),
            self.hi.mul_ratio(num, den, Rounding::Up),
        )
    }

    /// Outward-rounded square; requires a nonnegative interval.
    pub fn square_nonneg(&self) -> Interval {
        assert!(!self.lo.is_negative());
        Interval::new(self.lo.square(Rounding::Down), self.hi.square(Rounding::Up))
    }

    /// Sign of the whole interval, if certified: Greater when lo > 0,
    /// Less when hi < 0, None when the interval contains 0.
    pub fn certified_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Midpoint as a dyadic rational with denominator 2^64, rounded to
    /// nearest. Used to derive exact slopes from enclosures.
    pub fn midpoint_q64(&self) -> BigInt {
        let sum = self.lo.mantissa() + self.hi.mantissa();
        let bits = self.bits();
        // num = round(sum / 2 * 2^64 / 2^bits)
        let shifted: BigInt = sum << 64;
        let den = BigInt::one() << (bits + 1);
        let (q, r) = shifted.div_mod_floor(&den);
        if &r * 2 >= den {
            q + 1
        } else {
            q
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }

    pub fn mid_f64(&self) -> f64 {
        let (a, b) = self.to_f64_pair();
        0.5 * (a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_rounding_is_directed() {
        let bits = 32;
        let down = Fx::from_ratio(&BigInt::from(1), &BigInt::from(3), bits, Rounding::Down);
        let up = Fx::from_ratio(&BigInt::from(1), &BigInt::from(3), bits, Rounding::Up);
        assert!(down.cmp_fx(&up) == Ordering::Less);
        assert_eq!(up.mantissa() - down.mantissa(), BigInt::one());
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(Interval::new(down, up).contains(&third));
    }

    #[test]
    fn decimal_rendering() {
        let bits = 96;
        let x = Fx::from_ratio(&BigInt::from(3), &BigInt::from(4), bits, Rounding::Down);
        assert_eq!(x.to_decimal(3), "7.50e-1");
        let y = Fx::from_i128(1234, bits);
        assert_eq!(y.to_decimal(4), "1.234e3");
        assert_eq!(y.to_decimal(2), "1.2e3");
        let z = Fx::from_i128(-5, bits);
        assert_eq!(z.to_decimal(1), "-5e0");
        assert_eq!(Fx::zero(bits).to_decimal(15), "0");
    }

    #[test]
    fn decimal_carry() {
        let bits = 96;
        // 999.6 rounds to 1.0e3 at 2 significant digits
        let x = Fx::from_ratio(&BigInt::from(4998), &BigInt::from(5), bits, Rounding::Down);
        assert_eq!(x.to_decimal(2), "1.0e3");
    }

    #[test]
    fn interval_sign_and_sub() {
        let bits = 64;
        let a = Interval::new(Fx::from_i128(2, bits), Fx::from_i128(3, bits));
        let b = Interval::new(Fx::from_i128(10, bits), Fx::from_i128(11, bits));
        let d = b.sub(&a);
        assert_eq!(d.lo().to_f64(), 7.0);
        assert_eq!(d.hi().to_f64(), 9.0);
        assert_eq!(d.certified_sign(), Some(Ordering::Greater));
        let z = a.sub(&a);
        assert_eq!(z.certified_sign(), None);
    }

    #[test]
    fn midpoint_q64() {
        let bits = 128;
        let half = Interval::point(Fx::from_ratio(
            &BigInt::from(1),
            &BigInt::from(2),
            bits,
            Rounding::Down,
        ));
        assert_eq!(half.midpoint_q64(), BigInt::one() << 63);
        let one = Interval::point(Fx::one(bits));
        assert_eq!(one.midpoint_q64(), BigInt::one() << 64);
    }

    #[test]
    fn contains_f64_roundtrip() {
        let bits = 96;
        let iv = Interval::new(
            Fx::from_ratio(&BigInt::from(607), &BigInt::from(1000), bits, Rounding::Down),
            Fx::from_ratio(&BigInt::from(609), &BigInt::from(1000), bits, Rounding::Up),
        );
        assert!(iv.contains_f64(0.6079271018540267));
        assert!(!iv.contains_f64(0.61));
    }
}
