//! The verification suites behind `normord run`. Each suite computes its
//! artifacts, records per-assertion pass/fail, and hands back JSON/CSV
//! content for deterministic emission.

use anyhow::anyhow;
use num_bigint::BigInt;
use serde_json::json;

use normord_core::analyzer::{
    class_m_verdict, d_moment_fit, estimate_moment_constants,
    exceptional_density, turan_statistic, variance_from_series, MomentEstimates, Slope, Verdict,
};
use normord_core::euler::{constant_a, constant_b, criterion_margin, EulerProductConstant};
use normord_core::moments::{
    hyperbola_divisor_sum, moment_sum_from_table, moment_sum_streaming, remainder_profile,
    Envelope, MomentKind, MomentSeries, Prediction, Schedule,
};
use normord_core::sieve::{
    brute_oracle, build_table_with_cap, stream_segments, FunctionId, FunctionSet, SieveTable,
    DEFAULT_MATERIALIZATION_CAP,
};

use crate::config::{RunConfig, SuiteName};
use crate::report::{fmt_f64, series_csv, SuiteOutput, SuiteReport};

/// Note attached to every analyzer report, per the linear-candidate design.
const LINEAR_CANDIDATE_NOTE: &str =
    "candidate normal orders are restricted to the linear family f(n) = c*n";

/// Identity scans are exact-rational and quadratic-ish in divisor counts;
/// they run over min(limit, IDENTITY_CAP).
const IDENTITY_CAP: u64 = 10_000;

const BASEL_A: f64 = 0.6079271018540267; // 6/pi^2

/// Shared lazily-built artifacts so an `all` run sieves once, not ten times.
pub struct SuiteContext {
    pub cfg: RunConfig,
    table: Option<SieveTable>,
    a: Option<EulerProductConstant>,
    b: Option<EulerProductConstant>,
    s1: Option<MomentSeries>,
    s2: Option<MomentSeries>,
    swf: Option<MomentSeries>,
}

impl SuiteContext {
    pub fn new(cfg: RunConfig) -> Self {
        SuiteContext {
            cfg,
            table: None,
            a: None,
            b: None,
            s1: None,
            s2: None,
            swf: None,
        }
    }

    fn table(&mut self) -> anyhow::Result<&SieveTable> {
        if self.table.is_none() {
            let limit = self.cfg.limit.min(DEFAULT_MATERIALIZATION_CAP);
            self.table = Some(build_table_with_cap(
                limit,
                FunctionSet::ALL,
                DEFAULT_MATERIALIZATION_CAP,
            )?);
        }
        Ok(self.table.as_ref().unwrap())
    }

    fn constant(&mut self, which: FunctionId) -> anyhow::Result<EulerProductConstant> {
        // FunctionId is only a tag here; Phi selects A, DivisorCount selects B
        match which {
            FunctionId::Phi => {
                if self.a.is_none() {
                    self.a = Some(constant_a(self.cfg.prime_limit, self.cfg.precision_bits)?);
                }
                Ok(self.a.clone().unwrap())
            }
            _ => {
                if self.b.is_none() {
                    self.b = Some(constant_b(self.cfg.prime_limit, self.cfg.precision_bits)?);
                }
                Ok(self.b.clone().unwrap())
            }
        }
    }

    fn a(&mut self) -> anyhow::Result<EulerProductConstant> {
        self.constant(FunctionId::Phi)
    }

    fn b(&mut self) -> anyhow::Result<EulerProductConstant> {
        self.constant(FunctionId::DivisorCount)
    }

    fn phi_series(&mut self, kind: MomentKind) -> anyhow::Result<MomentSeries> {
        let cached = match kind {
            MomentKind::First => &self.s1,
            MomentKind::Second => &self.s2,
            MomentKind::WeightedFirst => &self.swf,
        };
        if let Some(s) = cached {
            return Ok(s.clone());
        }
        let limit = self.cfg.limit;
        let sched = self.cfg.schedule(limit)?;
        let series = if limit <= DEFAULT_MATERIALIZATION_CAP {
            moment_sum_from_table(self.table()?, FunctionId::Phi, kind, &sched)?
        } else {
            moment_sum_streaming(FunctionId::Phi, kind, limit, self.cfg.segment_size, &sched)?
        };
        match kind {
            MomentKind::First => self.s1 = Some(series.clone()),
            MomentKind::Second => self.s2 = Some(series.clone()),
            MomentKind::WeightedFirst => self.swf = Some(series.clone()),
        }
        Ok(series)
    }

    fn estimates(&mut self) -> anyhow::Result<MomentEstimates> {
        let s1 = self.phi_series(MomentKind::First)?;
        let s2 = self.phi_series(MomentKind::Second)?;
        Ok(estimate_moment_constants(&s1, &s2)?)
    }

    fn slope_a(&mut self) -> anyhow::Result<Slope> {
        Ok(Slope::from_enclosure_midpoint(&self.a()?.enclosure)?)
    }
}

fn constant_json(c: &EulerProductConstant) -> serde_json::Value {
    json!({
        "name": c.name.as_str(),
        "truncation_prime": c.truncation_prime,
        "partial": c.partial.to_decimal(25),
        "lo": c.enclosure.lo().to_decimal(25),
        "hi": c.enclosure.hi().to_decimal(25),
        "decimal_digits_certified": c.decimal_digits_certified(),
    })
}

pub fn sieve_check(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("sieve-check");
    let scan_limit = ctx.cfg.limit.min(IDENTITY_CAP);
    report.param("scan_limit", json!(scan_limit));

    let table = build_table_with_cap(scan_limit, FunctionSet::ALL, DEFAULT_MATERIALIZATION_CAP)?;
    let mut mismatches = 0u64;
    for n in 1..=scan_limit {
        for f in FunctionId::ALL {
            if table.value(f, n) != brute_oracle(n, f) {
                mismatches += 1;
            }
        }
    }
    report.check(
        "sieve_matches_brute_oracle",
        mismatches == 0,
        format!("{mismatches} mismatches over n <= {scan_limit}, all four functions"),
    );

    let stream_limit = ctx.cfg.limit.min(100_000);
    let big = build_table_with_cap(stream_limit, FunctionSet::ALL, DEFAULT_MATERIALIZATION_CAP)?;
    let mut stream_mismatch = 0u64;
    stream_segments(
        stream_limit,
        ctx.cfg.segment_size.min(1 << 14),
        FunctionSet::ALL,
        |seg| {
            for n in seg.lo()..=seg.hi() {
                for f in FunctionId::ALL {
                    if seg.value(f, n) != big.value(f, n) {
                        stream_mismatch += 1;
                    }
                }
            }
        },
    )?;
    report.check(
        "streaming_matches_materialized",
        stream_mismatch == 0,
        format!("{stream_mismatch} mismatches over n <= {stream_limit}"),
    );

    // hyperbola-method cross-check of the d(n) first moment
    let hx = ctx.cfg.limit.min(1_000_000);
    let hyp = hyperbola_divisor_sum(hx)?;
    let sched = Schedule::single(hx);
    let sieve_sum = if hx <= DEFAULT_MATERIALIZATION_CAP {
        let t = build_table_with_cap(hx, FunctionSet::single(FunctionId::DivisorCount),
                                     DEFAULT_MATERIALIZATION_CAP)?;
        moment_sum_from_table(&t, FunctionId::DivisorCount, MomentKind::First, &sched)?
    } else {
        moment_sum_streaming(FunctionId::DivisorCount, MomentKind::First, hx,
                             ctx.cfg.segment_size, &sched)?
    }
    .final_sum();
    report.check(
        "hyperbola_matches_sieve_divisor_sum",
        hyp == sieve_sum,
        format!("x={hx}: hyperbola {hyp}, sieve {sieve_sum}"),
    );

    Ok(SuiteOutput {
        name: "sieve-check".into(),
        report,
        csv_files: vec![],
    })
}

/// Envelope-stability split point between the calibration and test ranges.
const STABILITY_SPLIT: u64 = 100_000;

fn remainder_suite(
    ctx: &mut SuiteContext,
    name: &str,
    kind: MomentKind,
    envelope: Envelope,
) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new(name);
    report.function = Some("phi".into());
    let limit = ctx.cfg.limit;
    report.param("limit", json!(limit));
    report.param("prime_limit", json!(ctx.cfg.prime_limit));
    report.param("envelope", json!(envelope.name()));

    let series = ctx.phi_series(kind)?;
    let prediction = match kind {
        MomentKind::First => Prediction::HalfAxSquared(ctx.a()?.enclosure.clone()),
        MomentKind::Second => Prediction::ThirdBxCubed(ctx.b()?.enclosure.clone()),
        MomentKind::WeightedFirst => unreachable!("remainder suites cover first/second moments"),
    };
    let profile = remainder_profile(&series, &prediction, envelope)?;

    for pt in &profile.points {
        report.checkpoints.push(json!({
            "x": pt.x,
            "sum": series
                .checkpoints
                .iter()
                .find(|c| c.x == pt.x)
                .map(|c| c.sum.to_string()),
            "normalized_lo": fmt_f64(pt.normalized_lo),
            "normalized_hi": fmt_f64(pt.normalized_hi),
        }));
    }

    let first_cp = profile.points.first().map_or(1, |p| p.x);
    let split = STABILITY_SPLIT.min(limit);
    let sup_low = profile.sup_normalized(first_cp, split);
    let sup_high = profile.sup_normalized(split, limit);
    let sup_all = profile.sup_normalized(first_cp, limit);
    report.param("sup_normalized", json!(fmt_f64(sup_all)));

    report.check(
        "normalized_remainder_finite",
        sup_all.is_finite(),
        format!("sup |remainder|/envelope = {}", fmt_f64(sup_all)),
    );
    if limit > split {
        report.check(
            "envelope_stable_factor_2",
            sup_high <= 2.0 * sup_low && sup_low > 0.0,
            format!(
                "sup over [{split},{limit}] = {} vs 2x sup over [{first_cp},{split}] = {}",
                fmt_f64(sup_high),
                fmt_f64(2.0 * sup_low)
            ),
        );
    }

    // streaming reproduces the materialized sums checkpoint by checkpoint
    if limit <= DEFAULT_MATERIALIZATION_CAP {
        let sched = ctx.cfg.schedule(limit)?;
        let streamed =
            moment_sum_streaming(FunctionId::Phi, kind, limit, ctx.cfg.segment_size, &sched)?;
        report.check(
            "streaming_matches_materialized_sums",
            streamed.checkpoints == series.checkpoints,
            format!("{} checkpoints compared", streamed.checkpoints.len()),
        );
    }

    let csv = series_csv(&series, &profile);
    Ok(SuiteOutput {
        name: name.into(),
        report,
        csv_files: vec![(format!("{name}.csv"), csv)],
    })
}

pub fn mertens(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    remainder_suite(ctx, "mertens", MomentKind::First, Envelope::XLogX)
}

pub fn segal(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    remainder_suite(ctx, "segal", MomentKind::Second, Envelope::XSquaredLogSquaredX)
}

pub fn identities(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    use normord_core::identity::{
        g_bound_counterexample, mobius_ratio_counterexample, squared_identity_counterexample,
    };
    let mut report = SuiteReport::new("identities");
    let limit = ctx.cfg.limit.min(IDENTITY_CAP);
    report.param("checked_through", json!(limit));
    report
        .notes
        .push("exact rational arithmetic throughout; no floating point".into());

    let checks: [(&str, Option<u64>); 3] = [
        ("mobius_ratio_equals_phi_over_n", mobius_ratio_counterexample(limit)),
        ("squared_identity_holds", squared_identity_counterexample(limit)),
        ("g_bound_chain_holds", g_bound_counterexample(limit)),
    ];
    for (name, counterexample) in checks {
        report.check(
            name,
            counterexample.is_none(),
            match counterexample {
                None => format!("{limit} checks passed, no counterexample"),
                Some(n) => format!("first counterexample at n={n}"),
            },
        );
    }
    Ok(SuiteOutput {
        name: "identities".into(),
        report,
        csv_files: vec![],
    })
}

pub fn constants(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("constants");
    let p = ctx.cfg.prime_limit;
    report.param("prime_limit", json!(p));
    report.param("precision_bits", json!(ctx.cfg.precision_bits));

    let a = ctx.a()?;
    let b = ctx.b()?;
    let b_coarse = constant_b((p / 10).max(2), ctx.cfg.precision_bits)?;
    report.checkpoints.push(constant_json(&a));
    report.checkpoints.push(constant_json(&b));
    report.checkpoints.push(constant_json(&b_coarse));

    let a_width = a.enclosure.width().to_f64();
    report.check(
        "a_enclosure_contains_basel_value",
        a.enclosure.contains_f64(BASEL_A),
        format!("6/pi^2 = {BASEL_A} vs [{}, {}]",
                a.enclosure.lo().to_decimal(10), a.enclosure.hi().to_decimal(10)),
    );
    report.check(
        "a_enclosure_width_below_1e-6",
        a_width < 1e-6,
        format!("width = {}", fmt_f64(a_width)),
    );
    report.check(
        "b_enclosures_at_two_truncations_overlap",
        b.enclosure.intersects(&b_coarse.enclosure),
        format!("P = {} and P = {}", b_coarse.truncation_prime, b.truncation_prime),
    );

    let margin = criterion_margin(&a, &b)?;
    report.param("margin_lo", json!(margin.lo().to_decimal(15)));
    report.param("margin_hi", json!(margin.hi().to_decimal(15)));
    let positive = margin.certified_sign() == Some(std::cmp::Ordering::Greater);
    report.check(
        "criterion_margin_certified_positive",
        positive && margin.lo().to_f64() >= 0.04,
        format!(
            "B - A^2 in [{}, {}]",
            margin.lo().to_decimal(10),
            margin.hi().to_decimal(10)
        ),
    );
    report.verdict = Some(if positive { "B_GT_A_SQUARED_CERTIFIED" } else { "UNRESOLVED" }.into());

    Ok(SuiteOutput {
        name: "constants".into(),
        report,
        csv_files: vec![],
    })
}

pub fn verdict(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("verdict");
    report.function = Some("phi".into());
    report.param("class_bound_c", json!(2));
    report.param("scan_limit", json!(ctx.cfg.limit));
    report.notes.push(LINEAR_CANDIDATE_NOTE.into());

    let a = ctx.a()?;
    let b = ctx.b()?;
    let estimates = ctx.estimates()?;
    let class_m = class_m_verdict(
        FunctionId::Phi,
        2,
        &a,
        &b,
        &estimates,
        ctx.cfg.limit,
        ctx.cfg.segment_size,
    )?;

    for (ah, bh) in class_m.estimates.a_hat.iter().zip(&class_m.estimates.b_hat) {
        report.checkpoints.push(json!({
            "x": ah.x,
            "a_hat": fmt_f64(ah.value),
            "b_hat": fmt_f64(bh.value),
        }));
    }
    report.param("margin_lo", json!(class_m.margin.lo().to_decimal(15)));
    report.param("margin_hi", json!(class_m.margin.hi().to_decimal(15)));
    report.verdict = Some(class_m.verdict.as_str().into());

    report.check(
        "class_m_bound_scan_passed",
        class_m.bound_violation.is_none(),
        match class_m.bound_violation {
            None => format!("phi(n) < 2n for all n <= {}", class_m.scan_limit),
            Some(n) => format!("violated at n={n}"),
        },
    );
    report.check(
        "no_normal_order_certified",
        class_m.verdict == Verdict::NoNormalOrderCertified,
        format!("verdict = {}", class_m.verdict.as_str()),
    );
    if ctx.cfg.limit >= 10_000 {
        let final_a_hat = class_m.estimates.a_hat.last().unwrap().value;
        let mid = a.enclosure.mid_f64();
        report.check(
            "a_hat_tracks_certified_a",
            (final_a_hat - mid).abs() < 1e-4,
            format!("A_hat = {} vs certified midpoint {}", fmt_f64(final_a_hat), fmt_f64(mid)),
        );
    }

    Ok(SuiteOutput {
        name: "verdict".into(),
        report,
        csv_files: vec![],
    })
}

pub fn variance(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("variance");
    report.function = Some("phi".into());
    report.notes.push(LINEAR_CANDIDATE_NOTE.into());
    let slope = ctx.slope_a()?;
    report.param("slope", json!(fmt_f64(slope.to_f64())));
    report.param("slope_num_q64", json!(slope.numerator_q64().to_string()));

    let s2 = ctx.phi_series(MomentKind::Second)?;
    let swf = ctx.phi_series(MomentKind::WeightedFirst)?;
    let var = variance_from_series(&s2, &swf, slope)?;

    let mut csv = String::from("x,normalized_variance\n");
    for pt in &var.checkpoints {
        report.checkpoints.push(json!({
            "x": pt.x,
            "normalized_variance": fmt_f64(pt.normalized),
        }));
        csv.push_str(&format!("{},{}\n", pt.x, fmt_f64(pt.normalized)));
    }

    let a = ctx.a()?;
    let b = ctx.b()?;
    let margin = criterion_margin(&a, &b)?;
    let (mlo, mhi) = (margin.lo().to_f64(), margin.hi().to_f64());
    let final_pt = var.checkpoints.last().ok_or_else(|| anyhow!("no checkpoints"))?;
    report.check(
        "normalized_variance_near_margin",
        final_pt.normalized >= 0.9 * mlo && final_pt.normalized <= 1.1 * mhi,
        format!(
            "(3/x^3)*sum at x={} is {} vs B-A^2 in [{}, {}] +-10%",
            final_pt.x,
            fmt_f64(final_pt.normalized),
            fmt_f64(mlo),
            fmt_f64(mhi)
        ),
    );

    // independent per-n accumulation over a fresh table
    let direct_x = var
        .checkpoints
        .iter()
        .map(|p| p.x)
        .filter(|&x| x <= 100_000)
        .max();
    if let Some(x) = direct_x {
        let table = build_table_with_cap(
            x,
            FunctionSet::single(FunctionId::Phi),
            DEFAULT_MATERIALIZATION_CAP,
        )?;
        let num = BigInt::from(slope.numerator_q64());
        let mut direct = BigInt::from(0u32);
        for n in 1..=x {
            let diff: BigInt =
                (BigInt::from(table.value(FunctionId::Phi, n)) << 64) - &num * BigInt::from(n);
            direct += &diff * &diff;
        }
        let combined = &var
            .checkpoints
            .iter()
            .find(|p| p.x == x)
            .unwrap()
            .numerator_q128;
        report.check(
            "moment_expansion_equals_direct_sum",
            *combined == direct,
            format!("exact equality of scaled numerators at x={x}"),
        );
    }

    Ok(SuiteOutput {
        name: "variance".into(),
        report,
        csv_files: vec![("variance.csv".into(), csv)],
    })
}

fn eps_eq(a: (u64, u64), b: (u64, u64)) -> bool {
    // cross-multiplied equality of fractions
    (a.0 as u128) * (b.1 as u128) == (b.0 as u128) * (a.1 as u128)
}

pub fn density(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("density");
    report.function = Some("phi".into());
    report.notes.push(LINEAR_CANDIDATE_NOTE.into());
    let slope = ctx.slope_a()?;
    report.param("slope", json!(fmt_f64(slope.to_f64())));

    let mut xs: Vec<u64> = [10_000u64, 100_000, 1_000_000]
        .into_iter()
        .filter(|&x| x <= ctx.cfg.limit)
        .collect();
    if xs.is_empty() {
        xs.push(ctx.cfg.limit);
    }
    report.param("epsilons", json!(ctx.cfg.epsilons.iter()
        .map(|&(n, d)| format!("{n}/{d}")).collect::<Vec<_>>()));

    let mut csv = String::from("eps_num,eps_den,x,exceptional_count,density\n");
    let mut reference_densities = Vec::new();
    for &eps in &ctx.cfg.epsilons {
        for &x in &xs {
            let r = exceptional_density(FunctionId::Phi, eps, slope, x, ctx.cfg.segment_size)?;
            report.checkpoints.push(json!({
                "eps": format!("{}/{}", eps.0, eps.1),
                "x": x,
                "exceptional_count": r.exceptional_count,
                "density": fmt_f64(r.density),
            }));
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                eps.0, eps.1, x, r.exceptional_count, fmt_f64(r.density)
            ));
            if eps_eq(eps, (5, 100)) {
                reference_densities.push(r.density);
            }
        }
    }

    if !reference_densities.is_empty() {
        let min = reference_densities.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = reference_densities.iter().cloned().fold(0.0, f64::max);
        report.check(
            "exceptional_density_positive_at_eps_0.05",
            min >= 0.1,
            format!("min density {}", fmt_f64(min)),
        );
        report.check(
            "densities_stable_across_scales",
            max - min <= 0.02,
            format!("spread {} over x in {:?}", fmt_f64(max - min), xs),
        );
    }

    Ok(SuiteOutput {
        name: "density".into(),
        report,
        csv_files: vec![("density.csv".into(), csv)],
    })
}

pub fn turan(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("turan");
    report.function = Some("omega".into());
    let limit = ctx.cfg.limit;
    report.param("limit", json!(limit));

    let sched = if limit >= normord_core::moments::DEFAULT_FIRST_CHECKPOINT {
        ctx.cfg.schedule(limit)?
    } else {
        Schedule::single(limit)
    };
    let tr = turan_statistic(limit, &sched)?;

    let mut csv = String::from("x,statistic\n");
    for pt in &tr.checkpoints {
        report.checkpoints.push(json!({
            "x": pt.x,
            "statistic": fmt_f64(pt.statistic),
        }));
        csv.push_str(&format!("{},{}\n", pt.x, fmt_f64(pt.statistic)));
    }

    report.check(
        "statistic_finite_and_nonnegative",
        tr.checkpoints.iter().all(|p| p.statistic.is_finite() && p.statistic >= 0.0),
        format!("{} checkpoints", tr.checkpoints.len()),
    );
    let stat_at = |x: u64| tr.checkpoints.iter().find(|p| p.x == x).map(|p| p.statistic);
    if let (Some(s6), Some(s7)) = (stat_at(1_000_000), stat_at(10_000_000)) {
        report.check(
            "statistic_of_order_one",
            (0.3..=3.0).contains(&s6) && (0.3..=3.0).contains(&s7),
            format!("x=1e6: {}, x=1e7: {}", fmt_f64(s6), fmt_f64(s7)),
        );
        report.check(
            "statistic_stable_between_scales",
            (s7 - s6).abs() < 0.25 * s6.max(s7),
            format!("relative change {}", fmt_f64((s7 - s6).abs() / s6.max(s7))),
        );
    }

    Ok(SuiteOutput {
        name: "turan".into(),
        report,
        csv_files: vec![("turan.csv".into(), csv)],
    })
}

pub fn divisor_fit(ctx: &mut SuiteContext) -> anyhow::Result<SuiteOutput> {
    let mut report = SuiteReport::new("divisor-fit");
    report.function = Some("divisor_count".into());
    let limit = ctx.cfg.limit;
    report.param("limit", json!(limit));
    let sched = ctx.cfg.schedule(limit)?;

    let s2 = if limit <= DEFAULT_MATERIALIZATION_CAP {
        moment_sum_from_table(ctx.table()?, FunctionId::DivisorCount, MomentKind::Second, &sched)?
    } else {
        moment_sum_streaming(
            FunctionId::DivisorCount,
            MomentKind::Second,
            limit,
            ctx.cfg.segment_size,
            &sched,
        )?
    };
    for cp in &s2.checkpoints {
        report.checkpoints.push(json!({
            "x": cp.x,
            "sum": cp.sum.to_string(),
        }));
    }

    match d_moment_fit(&s2) {
        Ok(fit) => {
            report.param(
                "coefficients",
                json!(fit.coefficients.iter().map(|&c| fmt_f64(c)).collect::<Vec<_>>()),
            );
            report.param("residual_norm", json!(fmt_f64(fit.residual_norm)));
            let rel = (fit.leading - fit.target).abs() / fit.target;
            report.check(
                "leading_coefficient_near_1_over_pi_squared",
                rel <= 0.15,
                format!(
                    "leading {} vs 1/pi^2 {} (relative error {})",
                    fmt_f64(fit.leading),
                    fmt_f64(fit.target),
                    fmt_f64(rel)
                ),
            );
        }
        Err(e) => {
            report.check("fit_computed", false, format!("{e}"));
        }
    }

    Ok(SuiteOutput {
        name: "divisor-fit".into(),
        report,
        csv_files: vec![],
    })
}

/// Runs the requested suites in canonical order, deduplicated, with `all`
/// expanding to every suite.
pub fn run(cfg: &RunConfig, suites: &[SuiteName]) -> anyhow::Result<Vec<SuiteOutput>> {
    cfg.validate()?;
    let expanded: Vec<SuiteName> = if suites.iter().any(|&s| s == SuiteName::All) {
        SuiteName::RUNNABLE.to_vec()
    } else {
        let mut seen = Vec::new();
        for s in SuiteName::RUNNABLE {
            if suites.contains(&s) && !seen.contains(&s) {
                seen.push(s);
            }
        }
        seen
    };
    if expanded.is_empty() {
        anyhow::bail!("no suites selected");
    }
    let mut ctx = SuiteContext::new(cfg.clone());
    let mut outputs = Vec::new();
    for s in expanded {
        let out = match s {
            SuiteName::SieveCheck => sieve_check(&mut ctx)?,
            SuiteName::Mertens => mertens(&mut ctx)?,
            SuiteName::Segal => segal(&mut ctx)?,
            SuiteName::Identities => identities(&mut ctx)?,
            SuiteName::Constants => constants(&mut ctx)?,
            SuiteName::Verdict => verdict(&mut ctx)?,
            SuiteName::Variance => variance(&mut ctx)?,
            SuiteName::Density => density(&mut ctx)?,
            SuiteName::Turan => turan(&mut ctx)?,
            SuiteName::DivisorFit => divisor_fit(&mut ctx)?,
            SuiteName::All => unreachable!(),
        };
        outputs.push(out);
    }
    Ok(outputs)
}
