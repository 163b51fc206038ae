//! Tabulation of φ(n), μ(n), d(n), ω(n) and smallest prime factors, either
//! materialized up to a cap or streamed in fixed-size segments, plus the
//! trial-division oracle used to cross-check every sieve path.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Default materialization cap; larger limits must use streaming mode.
pub const DEFAULT_MATERIALIZATION_CAP: u64 = 10_000_000;

/// Hard ceiling for any sieving operation, streaming included.
pub const SIEVE_LIMIT_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    /// Euler's totient φ(n).
    Phi,
    /// Möbius function μ(n).
    Mu,
    /// Number-of-divisors function d(n).
    DivisorCount,
    /// Number of distinct prime divisors ω(n).
    Omega,
}

impl FunctionId {
    pub const ALL: [FunctionId; 4] = [
        FunctionId::Phi,
        FunctionId::Mu,
        FunctionId::DivisorCount,
        FunctionId::Omega,
    ];

    pub fn bit(self) -> u8 {
        match self {
            FunctionId::Phi => 1,
            FunctionId::Mu => 2,
            FunctionId::DivisorCount => 4,
            FunctionId::Omega => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Phi => "phi",
            FunctionId::Mu => "mu",
            FunctionId::DivisorCount => "divisor_count",
            FunctionId::Omega => "omega",
        }
    }
}

/// Small set of [`FunctionId`]s, stored as a bitmap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FunctionSet(u8);

impl FunctionSet {
    pub const ALL: FunctionSet = FunctionSet(0b1111);

    pub fn empty() -> Self {
        FunctionSet(0)
    }

    pub fn single(f: FunctionId) -> Self {
        FunctionSet(f.bit())
    }

    #[must_use]
    pub fn with(self, f: FunctionId) -> Self {
        FunctionSet(self.0 | f.bit())
    }

    pub fn contains(self, f: FunctionId) -> bool {
        self.0 & f.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn from_bits(bits: u8) -> Result<Self> {
        if bits & !0b1111 != 0 {
            return Err(Error::InvalidArgument(format!(
                "unknown function bits {bits:#x}"
            )));
        }
        Ok(FunctionSet(bits))
    }

    /// Members in canonical order (φ, μ, d, ω).
    pub fn iter(self) -> impl Iterator<Item = FunctionId> {
        FunctionId::ALL.into_iter().filter(move |f| self.contains(*f))
    }
}

impl FromIterator<FunctionId> for FunctionSet {
    fn from_iter<I: IntoIterator<Item = FunctionId>>(iter: I) -> Self {
        iter.into_iter().fold(FunctionSet::empty(), FunctionSet::with)
    }
}

/// Value arrays for a contiguous range of n, one per tabulated function.
///
/// Widths hold the maxima up to [`SIEVE_LIMIT_CAP`]: φ(n) ≤ n < 2³², μ ∈
/// {−1, 0, 1}, d(n) ≤ 1344 for n ≤ 10⁹, ω(n) ≤ 9.
#[derive(Debug, Clone, Default)]
struct ValueArrays {
    phi: Option<Vec<u32>>,
    mu: Option<Vec<i8>>,
    divisor_count: Option<Vec<u16>>,
    omega: Option<Vec<u8>>,
}

impl ValueArrays {
    fn functions(&self) -> FunctionSet {
        let mut set = FunctionSet::empty();
        if self.phi.is_some() {
            set = set.with(FunctionId::Phi);
        }
        if self.mu.is_some() {
            set = set.with(FunctionId::Mu);
        }
        if self.divisor_count.is_some() {
            set = set.with(FunctionId::DivisorCount);
        }
        if self.omega.is_some() {
            set = set.with(FunctionId::Omega);
        }
        set
    }

    fn get(&self, f: FunctionId, idx: usize) -> Option<i64> {
        match f {
            FunctionId::Phi => self.phi.as_ref().map(|v| v[idx] as i64),
            FunctionId::Mu => self.mu.as_ref().map(|v| v[idx] as i64),
            FunctionId::DivisorCount => self.divisor_count.as_ref().map(|v| v[idx] as i64),
            FunctionId::Omega => self.omega.as_ref().map(|v| v[idx] as i64),
        }
    }
}

/// Materialized table of function values over 1..=limit.
///
/// Indexing is by n directly; index 0 is unused padding.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    spf: Vec<u32>,
    vals: ValueArrays,
}

impl SieveTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn functions(&self) -> FunctionSet {
        self.vals.functions()
    }

    /// Smallest prime factor of n, for 2 ≤ n ≤ limit.
    pub fn spf(&self, n: u64) -> u32 {
        assert!((2..=self.limit).contains(&n), "spf defined for 2..=limit");
        self.spf[n as usize]
    }

    /// f(n) for 1 ≤ n ≤ limit; panics if f was not tabulated.
    pub fn value(&self, f: FunctionId, n: u64) -> i64 {
        assert!((1..=self.limit).contains(&n));
        self.vals
            .get(f, n as usize)
            .expect("function not tabulated in this table")
    }

    /// φ values as a slice indexed by n (index 0 and, if absent, None).
    pub fn phi_values(&self) -> Option<&[u32]> {
        self.vals.phi.as_deref()
    }

    pub fn mu_values(&self) -> Option<&[i8]> {
        self.vals.mu.as_deref()
    }

    pub fn divisor_count_values(&self) -> Option<&[u16]> {
        self.vals.divisor_count.as_deref()
    }

    pub fn omega_values(&self) -> Option<&[u8]> {
        self.vals.omega.as_deref()
    }
}

/// One streamed block of values over lo..=hi (inclusive).
#[derive(Debug, Clone)]
pub struct Segment {
    lo: u64,
    hi: u64,
    vals: ValueArrays,
}

impl Segment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn functions(&self) -> FunctionSet {
        self.vals.functions()
    }

    /// f(n) for lo ≤ n ≤ hi.
    pub fn value(&self, f: FunctionId, n: u64) -> i64 {
        assert!((self.lo..=self.hi).contains(&n));
        self.vals
            .get(f, (n - self.lo) as usize)
            .expect("function not tabulated in this segment")
    }

    pub fn phi_values(&self) -> Option<&[u32]> {
        self.vals.phi.as_deref()
    }

    pub fn mu_values(&self) -> Option<&[i8]> {
        self.vals.mu.as_deref()
    }

    pub fn divisor_count_values(&self) -> Option<&[u16]> {
        self.vals.divisor_count.as_deref()
    }

    pub fn omega_values(&self) -> Option<&[u8]> {
        self.vals.omega.as_deref()
    }
}

/// Linear sieve of smallest prime factors over 0..=limit.
///
/// spf[0] = spf[1] = 0; every composite is marked exactly once.
fn linear_spf(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=limit {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let spf_i = spf[i];
        for &p in &primes {
            let t = i as u64 * p as u64;
            if p > spf_i || t > limit as u64 {
                break;
            }
            spf[t as usize] = p;
        }
    }
    spf
}

fn derive_phi(spf: &[u32]) -> Vec<u32> {
    let n = spf.len() - 1;
    let mut phi = vec![0u32; n + 1];
    if n >= 1 {
        phi[1] = 1;
    }
    for t in 2..=n {
        let p = spf[t] as usize;
        let m = t / p;
        phi[t] = if spf[m] as usize == p {
            phi[m] * p as u32
        } else {
            phi[m] * (p as u32 - 1)
        };
    }
    phi
}

fn derive_mu(spf: &[u32]) -> Vec<i8> {
    let n = spf.len() - 1;
    let mut mu = vec![0i8; n + 1];
    if n >= 1 {
        mu[1] = 1;
    }
    for t in 2..=n {
        let p = spf[t] as usize;
        let m = t / p;
        mu[t] = if spf[m] as usize == p { 0 } else { -mu[m] };
    }
    mu
}

fn derive_omega(spf: &[u32]) -> Vec<u8> {
    let n = spf.len() - 1;
    let mut omega = vec![0u8; n + 1];
    for t in 2..=n {
        let p = spf[t] as usize;
        let m = t / p;
        omega[t] = if spf[m] as usize == p {
            omega[m]
        } else {
            omega[m] + 1
        };
    }
    omega
}

fn derive_divisor_count(spf: &[u32]) -> Vec<u16> {
    let n = spf.len() - 1;
    let mut d = vec![0u16; n + 1];
    // cnt[t] = exponent of spf[t] in t
    let mut cnt = vec![0u8; n + 1];
    if n >= 1 {
        d[1] = 1;
    }
    for t in 2..=n {
        let p = spf[t] as usize;
        let m = t / p;
        if spf[m] as usize == p {
            cnt[t] = cnt[m] + 1;
            d[t] = d[m] / (cnt[m] as u16 + 1) * (cnt[m] as u16 + 2);
        } else {
            cnt[t] = 1;
            d[t] = d[m] * 2;
        }
    }
    d
}

/// Builds a materialized table with the default cap of 10⁷.
pub fn build_table(limit: u64, functions: FunctionSet) -> Result<SieveTable> {
    build_table_with_cap(limit, functions, DEFAULT_MATERIALIZATION_CAP)
}

/// Builds a materialized table of the requested functions up to `limit`.
pub fn build_table_with_cap(limit: u64, functions: FunctionSet, cap: u64) -> Result<SieveTable> {
    if limit == 0 {
        return Err(Error::InvalidArgument("limit must be ≥ 1".into()));
    }
    if limit > cap.min(SIEVE_LIMIT_CAP) {
        return Err(Error::Capacity {
            limit,
            cap: cap.min(SIEVE_LIMIT_CAP),
        });
    }
    let n = limit as usize;
    let spf = linear_spf(n);
    let vals = ValueArrays {
        phi: functions.contains(FunctionId::Phi).then(|| derive_phi(&spf)),
        mu: functions.contains(FunctionId::Mu).then(|| derive_mu(&spf)),
        divisor_count: functions
            .contains(FunctionId::DivisorCount)
            .then(|| derive_divisor_count(&spf)),
        omega: functions
            .contains(FunctionId::Omega)
            .then(|| derive_omega(&spf)),
    };
    Ok(SieveTable { limit, spf, vals })
}

/// Reassembles a table from stored value arrays (index 0 unused, entries
/// for n = 1..=limit). Smallest prime factors are re-sieved; they are not
/// part of the dump format.
pub fn assemble_table(
    limit: u64,
    phi: Option<Vec<u32>>,
    mu: Option<Vec<i8>>,
    divisor_count: Option<Vec<u16>>,
    omega: Option<Vec<u8>>,
) -> Result<SieveTable> {
    if limit == 0 {
        return Err(Error::InvalidArgument("limit must be ≥ 1".into()));
    }
    let want = limit as usize + 1;
    for (name, len) in [
        ("phi", phi.as_ref().map(Vec::len)),
        ("mu", mu.as_ref().map(Vec::len)),
        ("divisor_count", divisor_count.as_ref().map(Vec::len)),
        ("omega", omega.as_ref().map(Vec::len)),
    ] {
        if let Some(len) = len {
            if len != want {
                return Err(Error::InvalidArgument(format!(
                    "{name} array has length {len}, expected {want}"
                )));
            }
        }
    }
    let spf = linear_spf(limit as usize);
    Ok(SieveTable {
        limit,
        spf,
        vals: ValueArrays {
            phi,
            mu,
            divisor_count,
            omega,
        },
    })
}

/// Streams segments covering 1..=limit in ascending order.
///
/// Values are computed by factoring each n with primes ≤ √hi and are
/// identical to the materialized table on every range.
pub fn stream_segments<F>(
    limit: u64,
    segment_size: u64,
    functions: FunctionSet,
    mut consumer: F,
) -> Result<()>
where
    F: FnMut(&Segment),
{
    if limit == 0 {
        return Err(Error::InvalidArgument("limit must be ≥ 1".into()));
    }
    if segment_size == 0 {
        return Err(Error::InvalidArgument("segment_size must be ≥ 1".into()));
    }
    if limit > SIEVE_LIMIT_CAP {
        return Err(Error::Capacity {
            limit,
            cap: SIEVE_LIMIT_CAP,
        });
    }

    let base_primes = primes_up_to(isqrt(limit));
    let max_size = segment_size as usize;

    let mut rem = vec![0u64; max_size];
    let mut phi = vec![0u64; max_size];
    let mut dcnt = vec![0u32; max_size];
    let mut omega = vec![0u8; max_size];
    let mut mu = vec![0i8; max_size];

    let mut lo = 1u64;
    while lo <= limit {
        let hi = (lo + segment_size - 1).min(limit);
        let size = (hi - lo + 1) as usize;

        for i in 0..size {
            rem[i] = lo + i as u64;
            phi[i] = 1;
            dcnt[i] = 1;
            omega[i] = 0;
            mu[i] = 1;
        }

        for &p in &base_primes {
            let p = p as u64;
            if p * p > hi {
                break;
            }
            let start = lo.div_ceil(p) * p;
            let mut m = start;
            while m <= hi {
                let i = (m - lo) as usize;
                let mut e = 0u32;
                let mut pe = 1u64;
                while rem[i] % p == 0 {
                    rem[i] /= p;
                    e += 1;
                    pe *= p;
                }
                // pe = p^e with e ≥ 1 here
                phi[i] *= pe / p * (p - 1);
                dcnt[i] *= e + 1;
                omega[i] += 1;
                mu[i] = if e > 1 { 0 } else { -mu[i] };
                m += p;
            }
        }

        // leftover factor is a single prime > √hi
        for i in 0..size {
            let r = rem[i];
            if r > 1 {
                phi[i] *= r - 1;
                dcnt[i] *= 2;
                omega[i] += 1;
                mu[i] = -mu[i];
            }
        }

        let vals = ValueArrays {
            phi: functions
                .contains(FunctionId::Phi)
                .then(|| phi[..size].iter().map(|&v| v as u32).collect()),
            mu: functions
                .contains(FunctionId::Mu)
                .then(|| mu[..size].to_vec()),
            divisor_count: functions
                .contains(FunctionId::DivisorCount)
                .then(|| dcnt[..size].iter().map(|&v| v as u16).collect()),
            omega: functions
                .contains(FunctionId::Omega)
                .then(|| omega[..size].to_vec()),
        };
        let segment = Segment { lo, hi, vals };
        consumer(&segment);

        lo = hi + 1;
    }
    Ok(())
}

/// Integer square root.
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

/// All primes ≤ p_limit, ascending, by plain Eratosthenes.
pub fn primes_up_to(p_limit: u64) -> Vec<u32> {
    if p_limit < 2 {
        return Vec::new();
    }
    let n = p_limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Trial-division factorization of n into (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Independent reference value of f(n) computed by trial division only.
pub fn brute_oracle(n: u64, f: FunctionId) -> i64 {
    assert!(n >= 1);
    let factors = factorize(n);
    match f {
        FunctionId::Phi => {
            let mut phi = 1u64;
            for &(p, e) in &factors {
                phi *= p.pow(e - 1) * (p - 1);
            }
            phi as i64
        }
        FunctionId::Mu => {
            if factors.iter().any(|&(_, e)| e > 1) {
                0
            } else if factors.len() % 2 == 0 {
                1
            } else {
                -1
            }
        }
        FunctionId::DivisorCount => factors.iter().map(|&(_, e)| (e + 1) as i64).product(),
        FunctionId::Omega => factors.len() as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn table_limit_one() {
        let t = build_table(1, FunctionSet::ALL).unwrap();
        assert_eq!(t.value(FunctionId::Phi, 1), 1);
        assert_eq!(t.value(FunctionId::Mu, 1), 1);
        assert_eq!(t.value(FunctionId::DivisorCount, 1), 1);
        assert_eq!(t.value(FunctionId::Omega, 1), 0);
    }

    #[test]
    fn phi_first_ten() {
        let t = build_table(10, FunctionSet::single(FunctionId::Phi)).unwrap();
        let got: Vec<i64> = (1..=10).map(|n| t.value(FunctionId::Phi, n)).collect();
        assert_eq!(got, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
    }

    #[test]
    fn table_matches_brute_oracle() {
        let t = build_table(2000, FunctionSet::ALL).unwrap();
        for n in 1..=2000u64 {
            for f in FunctionId::ALL {
                assert_eq!(t.value(f, n), brute_oracle(n, f), "{} at n={n}", f.name());
            }
        }
    }

    #[test]
    fn spf_divides_and_is_prime() {
        let t = build_table(5000, FunctionSet::empty()).unwrap();
        for n in 2..=5000u64 {
            let p = t.spf(n) as u64;
            assert_eq!(n % p, 0);
            assert_eq!(factorize(p).len(), 1);
            assert_eq!(factorize(p)[0], (p, 1));
        }
    }

    #[test]
    fn zero_limit_rejected() {
        assert!(matches!(
            build_table(0, FunctionSet::ALL),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn cap_exceeded_advises_streaming() {
        let err = build_table_with_cap(1001, FunctionSet::ALL, 1000).unwrap_err();
        assert_eq!(err, Error::Capacity { limit: 1001, cap: 1000 });
    }

    #[test]
    fn segment_ranges_partition() {
        let mut seen = Vec::new();
        stream_segments(10, 4, FunctionSet::single(FunctionId::Phi), |s| {
            seen.push((s.lo(), s.hi()))
        })
        .unwrap();
        assert_eq!(seen, [(1, 4), (5, 8), (9, 10)]);
    }

    #[test]
    fn oversized_segment_is_single_block() {
        let mut seen = Vec::new();
        stream_segments(10, 100, FunctionSet::ALL, |s| seen.push((s.lo(), s.hi()))).unwrap();
        assert_eq!(seen, [(1, 10)]);
    }

    #[test]
    fn segments_match_table() {
        let limit = 100_000;
        let t = build_table(limit, FunctionSet::ALL).unwrap();
        stream_segments(limit, 1 << 14, FunctionSet::ALL, |s| {
            for n in s.lo()..=s.hi() {
                for f in FunctionId::ALL {
                    assert_eq!(s.value(f, n), t.value(f, n), "{} at n={n}", f.name());
                }
            }
        })
        .unwrap();
    }

    #[test]
    fn primes_small() {
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(10), [2, 3, 5, 7]);
        assert_eq!(primes_up_to(2), [2]);
    }

    #[test]
    fn brute_oracle_examples() {
        assert_eq!(brute_oracle(12, FunctionId::Omega), 2);
        assert_eq!(brute_oracle(36, FunctionId::DivisorCount), 9);
        assert_eq!(brute_oracle(10, FunctionId::Phi), 4);
    }

    #[test]
    fn isqrt_exact() {
        for n in 0..2000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "n={n}");
        }
        assert_eq!(isqrt(u64::MAX), (1u64 << 32) - 1);
    }
}
