//! Certified evaluation of the two Euler products
//! A = ∏ₚ(1 − p⁻²) and B = ∏ₚ(1 − 2p⁻² + p⁻³), and the sign decision for
//! B − A² by interval arithmetic.

use alloc::format;

use crate::fixed::{Fx, Interval, Rounding};
use crate::sieve::primes_up_to;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantName {
    A,
    B,
}

impl ConstantName {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstantName::A => "A",
            ConstantName::B => "B",
        }
    }
}

/// Truncated Euler product with a certified enclosure of the full product.
#[derive(Debug, Clone)]
pub struct EulerProductConstant {
    pub name: ConstantName,
    pub truncation_prime: u64,
    /// Rounded-down partial product over primes ≤ truncation_prime.
    pub partial: Fx,
    /// Interval certified to contain the infinite product.
    pub enclosure: Interval,
    pub precision_bits: u32,
}

impl EulerProductConstant {
    /// Number of decimal digits pinned down by the enclosure width.
    pub fn decimal_digits_certified(&self) -> u32 {
        let width = self.enclosure.width().to_f64();
        if width <= 0.0 {
            return self.precision_bits * 30103 / 100000;
        }
        let digits = -num_traits::Float::log10(width);
        if digits <= 0.0 {
            0
        } else {
            digits as u32
        }
    }
}

fn check_args(p_limit: u64, precision_bits: u32) -> Result<()> {
    if p_limit < 2 {
        return Err(Error::InvalidArgument(format!(
            "prime limit must be ≥ 2, got {p_limit}"
        )));
    }
    if precision_bits < 64 {
        return Err(Error::InvalidArgument(format!(
            "cannot certify below 64 bits of precision, got {precision_bits}"
        )));
    }
    Ok(())
}

/// Lower bound for partial·e^(−c/P): multiply by ((8P − c)/8P)⁸, which is
/// ≤ e^(−c/P) since log(1 − u) ≤ −u.
fn tail_lower(partial_lo: &Fx, c: u64, p_limit: u64) -> Fx {
    let num = (8 * p_limit - c) as u128;
    let den = (8 * p_limit) as u128;
    let mut out = partial_lo.clone();
    for _ in 0..8 {
        out = out.mul_ratio(num, den, Rounding::Down);
    }
    out
}

fn product<FAC>(p_limit: u64, precision_bits: u32, factor: FAC) -> (Fx, Fx)
where
    FAC: Fn(u64) -> (u128, u128),
{
    let mut lo = Fx::one(precision_bits);
    let mut hi = Fx::one(precision_bits);
    for &p in &primes_up_to(p_limit) {
        let (num, den) = factor(p as u64);
        lo = lo.mul_ratio(num, den, Rounding::Down);
        hi = hi.mul_ratio(num, den, Rounding::Up);
    }
    (lo, hi)
}

/// A = ∏ₚ(1 − p⁻²), truncated at `p_limit`. Tail log-mass is below
/// ∑_{n>P} 2/n² ≤ 2/P, so [partial·e^(−2/P), partial] encloses the product.
pub fn constant_a(p_limit: u64, precision_bits: u32) -> Result<EulerProductConstant> {
    check_args(p_limit, precision_bits)?;
    let (lo, hi) = product(p_limit, precision_bits, |p| {
        let p2 = (p as u128) * (p as u128);
        (p2 - 1, p2)
    });
    let enclosure = Interval::new(tail_lower(&lo, 2, p_limit), hi);
    Ok(EulerProductConstant {
        name: ConstantName::A,
        truncation_prime: p_limit,
        partial: lo,
        enclosure,
        precision_bits,
    })
}

/// B = ∏ₚ(1 − 2p⁻² + p⁻³), truncated at `p_limit`. Each factor is
/// (p³ − 2p + 1)/p³ ∈ (0, 1); tail log-mass is below ∑_{n>P} 4/n² ≤ 4/P.
pub fn constant_b(p_limit: u64, precision_bits: u32) -> Result<EulerProductConstant> {
    check_args(p_limit, precision_bits)?;
    let (lo, hi) = product(p_limit, precision_bits, |p| {
        let p = p as u128;
        let p3 = p * p * p;
        (p3 - 2 * p + 1, p3)
    });
    let enclosure = Interval::new(tail_lower(&lo, 4, p_limit), hi);
    Ok(EulerProductConstant {
        name: ConstantName::B,
        truncation_prime: p_limit,
        partial: lo,
        enclosure,
        precision_bits,
    })
}

/// Certified interval for B − A²: [b.lo − a.hi², b.hi − a.lo²]. The sign is
/// decided only when the interval excludes zero.
pub fn criterion_margin(a: &EulerProductConstant, b: &EulerProductConstant) -> Result<Interval> {
    if a.precision_bits != b.precision_bits {
        return Err(Error::InvalidArgument(
            "constants must share a precision to be combined".into(),
        ));
    }
    Ok(b.enclosure.sub(&a.enclosure.square_nonneg()))
}
