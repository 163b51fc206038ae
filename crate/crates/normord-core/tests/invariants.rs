//! Exhaustive range invariants at the 10⁴ scale.

use normord_core::identity::{
    g_bound_counterexample, mobius_ratio_counterexample, squared_identity_counterexample,
};
use normord_core::sieve::{build_table, factorize, FunctionId, FunctionSet};

const LIMIT: u64 = 10_000;

#[test]
fn multiplicativity_on_coprime_pairs() {
    let t = build_table(LIMIT, FunctionSet::ALL).unwrap();
    for m in 2..=100u64 {
        for n in 2..=LIMIT / m {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            let v = |f: FunctionId, k: u64| t.value(f, k);
            assert_eq!(
                v(FunctionId::Phi, m * n),
                v(FunctionId::Phi, m) * v(FunctionId::Phi, n)
            );
            assert_eq!(
                v(FunctionId::DivisorCount, m * n),
                v(FunctionId::DivisorCount, m) * v(FunctionId::DivisorCount, n)
            );
            assert_eq!(
                v(FunctionId::Mu, m * n),
                v(FunctionId::Mu, m) * v(FunctionId::Mu, n)
            );
            assert_eq!(
                v(FunctionId::Omega, m * n),
                v(FunctionId::Omega, m) + v(FunctionId::Omega, n)
            );
        }
    }
}

#[test]
fn phi_divisor_sum_identity() {
    // ∑_{k|n} φ(k) = n
    let t = build_table(LIMIT, FunctionSet::single(FunctionId::Phi)).unwrap();
    let mut acc = vec![0i64; LIMIT as usize + 1];
    for k in 1..=LIMIT {
        let phi_k = t.value(FunctionId::Phi, k);
        let mut n = k;
        while n <= LIMIT {
            acc[n as usize] += phi_k;
            n += k;
        }
    }
    for n in 1..=LIMIT {
        assert_eq!(acc[n as usize], n as i64, "n={n}");
    }
}

#[test]
fn mu_vanishes_exactly_on_squareful_numbers() {
    let t = build_table(LIMIT, FunctionSet::single(FunctionId::Mu)).unwrap();
    for n in 1..=LIMIT {
        let squareful = factorize(n).iter().any(|&(_, e)| e > 1);
        assert_eq!(t.value(FunctionId::Mu, n) == 0, squareful, "n={n}");
    }
}

#[test]
fn phi_within_class_m_bound() {
    // 0 ≤ φ(n) < 2n, strict at n = 1 as well
    let t = build_table(LIMIT, FunctionSet::single(FunctionId::Phi)).unwrap();
    for n in 1..=LIMIT {
        let v = t.value(FunctionId::Phi, n);
        assert!(v >= 0 && (v as u64) < 2 * n, "n={n}");
    }
}

#[test]
fn identity_suite_exhaustive() {
    assert_eq!(mobius_ratio_counterexample(LIMIT), None);
    assert_eq!(squared_identity_counterexample(LIMIT), None);
    assert_eq!(g_bound_counterexample(LIMIT), None);
}

#[test]
fn prime_count_at_one_million() {
    let primes = normord_core::sieve::primes_up_to(1_000_000);
    assert_eq!(primes.len(), 78_498);
    // confirm the tail against an independent primality check
    for &p in primes.iter().rev().take(20) {
        assert_eq!(factorize(p as u64), vec![(p as u64, 1)]);
    }
}
