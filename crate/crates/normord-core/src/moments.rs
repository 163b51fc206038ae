//! Exact checkpointed moment sums ∑ψ(n), ∑ψ²(n), ∑n·ψ(n) with 128-bit
//! accumulation, the hyperbola-method divisor-sum oracle, and remainder
//! profiles against the asymptotic main terms.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Float;

use crate::fixed::{Fx, Interval};
use crate::sieve::{
    build_table_with_cap, isqrt, stream_segments, FunctionId, FunctionSet, SieveTable,
    DEFAULT_MATERIALIZATION_CAP, SIEVE_LIMIT_CAP,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentKind {
    /// ∑_{n≤x} ψ(n)
    First,
    /// ∑_{n≤x} ψ²(n)
    Second,
    /// ∑_{n≤x} n·ψ(n)
    WeightedFirst,
}

impl MomentKind {
    pub fn name(self) -> &'static str {
        match self {
            MomentKind::First => "first",
            MomentKind::Second => "second",
            MomentKind::WeightedFirst => "weighted_first",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checkpoint {
    pub x: u64,
    pub sum: i128,
}

#[derive(Debug, Clone)]
pub struct MomentSeries {
    pub function: FunctionId,
    pub kind: MomentKind,
    pub checkpoints: Vec<Checkpoint>,
}

impl MomentSeries {
    pub fn limit(&self) -> u64 {
        self.checkpoints.last().map_or(0, |c| c.x)
    }

    pub fn final_sum(&self) -> i128 {
        self.checkpoints.last().map_or(0, |c| c.sum)
    }
}

/// Ascending checkpoint positions; the final point is always the limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    points: Vec<u64>,
}

/// Default geometric spacing: one checkpoint per quarter decade.
pub const DEFAULT_CHECKPOINT_RATIO: f64 = 1.7782794100389228; // 10^(1/4)

/// First checkpoint of the default schedule.
pub const DEFAULT_FIRST_CHECKPOINT: u64 = 1_000;

impl Schedule {
    /// Single checkpoint at the limit.
    pub fn single(limit: u64) -> Schedule {
        Schedule { points: alloc::vec![limit] }
    }

    /// Geometric checkpoints first, round(first·ratio), round(first·ratio²), …
    /// capped at and always ending with `limit`.
    pub fn geometric(limit: u64, first: u64, ratio: f64) -> Result<Schedule> {
        if limit == 0 || first == 0 {
            return Err(Error::InvalidArgument("schedule bounds must be ≥ 1".into()));
        }
        if !(ratio > 1.0) {
            return Err(Error::InvalidArgument(format!(
                "checkpoint ratio must exceed 1, got {ratio}"
            )));
        }
        let mut points = Vec::new();
        let mut k = 0i32;
        loop {
            // recomputed from k each time so rounding does not accumulate
            let x = Float::round(first as f64 * Float::powi(ratio, k)) as u64;
            if x > limit {
                break;
            }
            if points.last() != Some(&x) {
                points.push(x);
            }
            k += 1;
            if k > 4000 {
                break;
            }
        }
        if points.last() != Some(&limit) {
            points.push(limit);
        }
        Ok(Schedule { points })
    }

    pub fn default_for(limit: u64) -> Schedule {
        Schedule::geometric(limit, DEFAULT_FIRST_CHECKPOINT, DEFAULT_CHECKPOINT_RATIO)
            .expect("default schedule parameters are valid")
    }

    pub fn from_points(points: Vec<u64>) -> Result<Schedule> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("empty schedule".into()));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) || points[0] == 0 {
            return Err(Error::InvalidArgument(
                "schedule points must be positive and strictly ascending".into(),
            ));
        }
        Ok(Schedule { points })
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }

    pub fn limit(&self) -> u64 {
        *self.points.last().unwrap()
    }
}

fn term(kind: MomentKind, n: u64, v: i64) -> i128 {
    let v = v as i128;
    match kind {
        MomentKind::First => v,
        MomentKind::Second => v * v,
        MomentKind::WeightedFirst => n as i128 * v,
    }
}

struct Accumulator<'a> {
    kind: MomentKind,
    sum: i128,
    points: &'a [u64],
    next: usize,
    out: Vec<Checkpoint>,
}

impl<'a> Accumulator<'a> {
    fn new(kind: MomentKind, points: &'a [u64]) -> Self {
        Accumulator {
            kind,
            sum: 0,
            points,
            next: 0,
            out: Vec::with_capacity(points.len()),
        }
    }

    fn feed<T: Copy + Into<i64>>(&mut self, lo: u64, values: &[T]) -> Result<()> {
        for (i, &v) in values.iter().enumerate() {
            let n = lo + i as u64;
            self.sum = self
                .sum
                .checked_add(term(self.kind, n, v.into()))
                .ok_or_else(|| {
                    Error::Precision(format!(
                        "128-bit accumulator overflowed at n={n}; use a smaller limit"
                    ))
                })?;
            while self.next < self.points.len() && self.points[self.next] == n {
                self.out.push(Checkpoint { x: n, sum: self.sum });
                self.next += 1;
            }
        }
        Ok(())
    }
}

fn validate(limit: u64, schedule: &Schedule) -> Result<()> {
    if limit == 0 {
        return Err(Error::InvalidArgument("limit must be ≥ 1".into()));
    }
    if schedule.limit() != limit {
        return Err(Error::InvalidArgument(format!(
            "schedule must end at the limit ({} != {limit})",
            schedule.limit()
        )));
    }
    if limit > SIEVE_LIMIT_CAP {
        return Err(Error::Precision(format!(
            "limit {limit} exceeds the verified 128-bit accumulation range (≤ {SIEVE_LIMIT_CAP})"
        )));
    }
    Ok(())
}

/// Moment sum read off a materialized table.
pub fn moment_sum_from_table(
    table: &SieveTable,
    f: FunctionId,
    kind: MomentKind,
    schedule: &Schedule,
) -> Result<MomentSeries> {
    validate(table.limit(), schedule)?;
    let mut acc = Accumulator::new(kind, schedule.points());
    match f {
        FunctionId::Phi => acc.feed(1, &table.phi_values().ok_or_else(not_tabulated)?[1..])?,
        FunctionId::Mu => acc.feed(1, &table.mu_values().ok_or_else(not_tabulated)?[1..])?,
        FunctionId::DivisorCount => acc.feed(
            1,
            &table.divisor_count_values().ok_or_else(not_tabulated)?[1..],
        )?,
        FunctionId::Omega => acc.feed(1, &table.omega_values().ok_or_else(not_tabulated)?[1..])?,
    }
    Ok(MomentSeries {
        function: f,
        kind,
        checkpoints: acc.out,
    })
}

fn not_tabulated() -> Error {
    Error::InvalidArgument("function not tabulated in the supplied table".into())
}

/// Moment sum over streamed segments; exact match with the table path.
pub fn moment_sum_streaming(
    f: FunctionId,
    kind: MomentKind,
    limit: u64,
    segment_size: u64,
    schedule: &Schedule,
) -> Result<MomentSeries> {
    validate(limit, schedule)?;
    let mut acc = Accumulator::new(kind, schedule.points());
    let mut failed = None;
    stream_segments(limit, segment_size, FunctionSet::single(f), |seg| {
        if failed.is_some() {
            return;
        }
        let r = match f {
            FunctionId::Phi => acc.feed(seg.lo(), seg.phi_values().unwrap()),
            FunctionId::Mu => acc.feed(seg.lo(), seg.mu_values().unwrap()),
            FunctionId::DivisorCount => acc.feed(seg.lo(), seg.divisor_count_values().unwrap()),
            FunctionId::Omega => acc.feed(seg.lo(), seg.omega_values().unwrap()),
        };
        if let Err(e) = r {
            failed = Some(e);
        }
    })?;
    if let Some(e) = failed {
        return Err(e);
    }
    Ok(MomentSeries {
        function: f,
        kind,
        checkpoints: acc.out,
    })
}

/// Default segment size for streaming moment sums.
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;

/// Materializes when the limit fits under the cap, streams otherwise.
pub fn moment_sum(
    f: FunctionId,
    kind: MomentKind,
    limit: u64,
    schedule: &Schedule,
) -> Result<MomentSeries> {
    if limit <= DEFAULT_MATERIALIZATION_CAP {
        let table = build_table_with_cap(limit, FunctionSet::single(f), DEFAULT_MATERIALIZATION_CAP)?;
        moment_sum_from_table(&table, f, kind, schedule)
    } else {
        moment_sum_streaming(f, kind, limit, DEFAULT_SEGMENT_SIZE, schedule)
    }
}

/// ∑_{n≤x} d(n) by the hyperbola method:
/// 2·∑_{k≤√x} ⌊x/k⌋ − ⌊√x⌋², in O(√x) steps. Independent of any sieve.
pub fn hyperbola_divisor_sum(limit: u64) -> Result<i128> {
    if limit == 0 {
        return Err(Error::InvalidArgument("limit must be ≥ 1".into()));
    }
    let r = isqrt(limit);
    let mut s: i128 = 0;
    for k in 1..=r {
        s += (limit / k) as i128;
    }
    Ok(2 * s - (r as i128) * (r as i128))
}

/// Asymptotic main term the remainder is measured against.
#[derive(Debug, Clone)]
pub enum Prediction {
    /// Remainder equals the raw sum.
    Zero,
    /// A·x²/2 with a certified enclosure of A.
    HalfAxSquared(Interval),
    /// B·x³/3 with a certified enclosure of B.
    ThirdBxCubed(Interval),
}

impl Prediction {
    pub fn name(&self) -> &'static str {
        match self {
            Prediction::Zero => "zero",
            Prediction::HalfAxSquared(_) => "A*x^2/2",
            Prediction::ThirdBxCubed(_) => "B*x^3/3",
        }
    }
}

/// Error-term growth rate used to normalize remainders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Envelope {
    /// x·log x
    XLogX,
    /// x²·log²x
    XSquaredLogSquaredX,
    /// x·log³x
    XLogCubedX,
}

impl Envelope {
    pub fn name(self) -> &'static str {
        match self {
            Envelope::XLogX => "x*log(x)",
            Envelope::XSquaredLogSquaredX => "x^2*log^2(x)",
            Envelope::XLogCubedX => "x*log^3(x)",
        }
    }

    pub fn value(self, x: u64) -> f64 {
        let xf = x as f64;
        let l = Float::ln(xf);
        match self {
            Envelope::XLogX => xf * l,
            Envelope::XSquaredLogSquaredX => xf * xf * l * l,
            Envelope::XLogCubedX => xf * l * l * l,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RemainderPoint {
    pub x: u64,
    /// Exact sum minus the predicted main term, as a certified enclosure.
    pub remainder: Interval,
    /// Remainder bounds divided by the envelope at x; zero at x = 1.
    pub normalized_lo: f64,
    pub normalized_hi: f64,
}

impl RemainderPoint {
    /// Largest normalized magnitude consistent with the enclosure.
    pub fn normalized_abs(&self) -> f64 {
        Float::max(Float::abs(self.normalized_lo), Float::abs(self.normalized_hi))
    }
}

#[derive(Debug, Clone)]
pub struct RemainderProfile {
    pub function: FunctionId,
    pub kind: MomentKind,
    pub prediction: &'static str,
    pub envelope: Envelope,
    pub points: Vec<RemainderPoint>,
}

impl RemainderProfile {
    /// sup of |normalized remainder| over checkpoints with lo ≤ x ≤ hi.
    pub fn sup_normalized(&self, lo: u64, hi: u64) -> f64 {
        self.points
            .iter()
            .filter(|p| (lo..=hi).contains(&p.x))
            .map(|p| p.normalized_abs())
            .fold(0.0, Float::max)
    }
}

/// Per-checkpoint remainder against a predicted main term.
///
/// The subtraction runs in fixed point at the enclosure's precision, so the
/// rounding error of each remainder bound is below 2^−bits, far under 10⁻⁶
/// of any envelope here.
pub fn remainder_profile(
    series: &MomentSeries,
    prediction: &Prediction,
    envelope: Envelope,
) -> Result<RemainderProfile> {
    match (&prediction, series.kind) {
        (Prediction::Zero, _) => {}
        (Prediction::HalfAxSquared(_), MomentKind::First) => {}
        (Prediction::ThirdBxCubed(_), MomentKind::Second) => {}
        _ => {
            return Err(Error::InvalidArgument(format!(
                "prediction {} does not match a {} moment series",
                prediction.name(),
                series.kind.name()
            )))
        }
    }
    let bits = match prediction {
        Prediction::Zero => 128,
        Prediction::HalfAxSquared(enc) | Prediction::ThirdBxCubed(enc) => enc.bits(),
    };
    let mut points = Vec::with_capacity(series.checkpoints.len());
    for cp in &series.checkpoints {
        let x = cp.x as u128;
        let sum = Interval::point(Fx::from_i128(cp.sum, bits));
        let pred = match prediction {
            Prediction::Zero => Interval::point(Fx::zero(bits)),
            Prediction::HalfAxSquared(enc) => enc.mul_ratio(x * x, 2),
            Prediction::ThirdBxCubed(enc) => enc.mul_ratio(x * x * x, 3),
        };
        let remainder = sum.sub(&pred);
        let (normalized_lo, normalized_hi) = if cp.x >= 2 {
            let env = envelope.value(cp.x);
            let (rl, rh) = remainder.to_f64_pair();
            (rl / env, rh / env)
        } else {
            (0.0, 0.0)
        };
        points.push(RemainderPoint {
            x: cp.x,
            remainder,
            normalized_lo,
            normalized_hi,
        });
    }
    Ok(RemainderProfile {
        function: series.function,
        kind: series.kind,
        prediction: prediction.name(),
        envelope,
        points,
    })
}
