//! Exact-rational verification of the Möbius-inversion identity for φ(n)/n,
//! the squared identity with g(a) = ∏_{p|a}(1 − 2p), and the chained bound
//! |g(b)| ≤ ∏_{p|b}2p ≤ 2^ω(b)·b ≤ d(b)·b. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::sieve::{brute_oracle, factorize, FunctionId};

/// Exact fraction, always reduced, denominator ≥ 1.
pub type Rational = BigRational;

fn q(num: i128, den: i128) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn distinct_primes(n: u64) -> impl Iterator<Item = u64> {
    factorize(n).into_iter().map(|(p, _)| p)
}

/// ∑_{d|n} μ(d)/d by explicit enumeration of the squarefree divisors
/// (the only divisors with μ(d) ≠ 0). Equals φ(n)/n.
pub fn mobius_ratio(n: u64) -> Rational {
    assert!(n >= 1);
    let primes: alloc::vec::Vec<u64> = distinct_primes(n).collect();
    let k = primes.len();
    let mut sum = q(0, 1);
    for mask in 0u32..(1 << k) {
        let mut d: i128 = 1;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d *= p as i128;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        sum += q(sign, d);
    }
    sum
}

/// g(a) = ∏_{p|a}(1 − 2p); g(1) = 1. Depends only on the radical of a.
pub fn g(a: u64) -> i128 {
    assert!(a >= 1);
    distinct_primes(a).map(|p| 1 - 2 * p as i128).product()
}

/// Checks (∑_{d|n} μ(d)/d)² = ∑_{a|n} μ²(a)·g(a)/a² in exact rationals.
pub fn squared_identity_check(n: u64) -> bool {
    assert!(n >= 1);
    let lhs = {
        let r = mobius_ratio(n);
        &r * &r
    };
    let primes: alloc::vec::Vec<u64> = distinct_primes(n).collect();
    let k = primes.len();
    let mut rhs = q(0, 1);
    for mask in 0u32..(1 << k) {
        let mut a: i128 = 1;
        let mut ga: i128 = 1;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a *= p as i128;
                ga *= 1 - 2 * p as i128;
            }
        }
        rhs += q(ga, a * a);
    }
    lhs == rhs
}

/// Checks the full chain |g(b)| ≤ ∏_{p|b}2p ≤ 2^ω(b)·b ≤ d(b)·b.
pub fn g_bound_check(b: u64) -> bool {
    assert!(b >= 1);
    let g_abs = g(b).unsigned_abs();
    let prod_2p: u128 = distinct_primes(b).map(|p| 2 * p as u128).product();
    let omega = brute_oracle(b, FunctionId::Omega) as u32;
    let pow2_b = (1u128 << omega) * b as u128;
    let d_b = brute_oracle(b, FunctionId::DivisorCount) as u128 * b as u128;
    g_abs <= prod_2p && prod_2p <= pow2_b && pow2_b <= d_b
}

/// First n in 1..=limit with mobius_ratio(n) ≠ φ(n)/n, if any.
pub fn mobius_ratio_counterexample(limit: u64) -> Option<u64> {
    (1..=limit).find(|&n| {
        let phi = brute_oracle(n, FunctionId::Phi) as i128;
        mobius_ratio(n) != q(phi, n as i128)
    })
}

/// First n in 1..=limit failing the squared identity, if any.
pub fn squared_identity_counterexample(limit: u64) -> Option<u64> {
    (1..=limit).find(|&n| !squared_identity_check(n))
}

/// First b in 1..=limit failing the bound chain, if any.
pub fn g_bound_counterexample(limit: u64) -> Option<u64> {
    (1..=limit).find(|&b| !g_bound_check(b))
}
