//! The acceptance gate: one pass/fail line per criterion, all must hold.
//! Runs the full default configuration (limit 10^7, prime limit 10^7), so
//! this test wants an optimized build (the workspace sets opt-level = 3
//! for the test profile).

use std::time::Instant;

use normord_cli::config::{RunConfig, SuiteName};
use normord_cli::report::{write_outputs, SuiteOutput};
use normord_cli::suites;
use normord_core::moments::{
    moment_sum_streaming, Checkpoint, MomentKind, MomentSeries, Schedule,
};
use normord_core::sieve::FunctionId;

struct Gate {
    results: Vec<(String, bool)>,
}

impl Gate {
    fn new() -> Self {
        Gate { results: Vec::new() }
    }

    fn record(&mut self, criterion: &str, passed: bool) {
        println!(
            "criterion {:02} {:<28} {}",
            self.results.len() + 1,
            criterion,
            if passed { "pass" } else { "FAIL" }
        );
        self.results.push((criterion.to_string(), passed));
    }

    fn finish(self) {
        let failed: Vec<&str> = self
            .results
            .iter()
            .filter(|(_, p)| !p)
            .map(|(n, _)| n.as_str())
            .collect();
        assert!(failed.is_empty(), "failed criteria: {failed:?}");
    }
}

fn suite<'a>(outputs: &'a [SuiteOutput], name: &str) -> &'a SuiteOutput {
    outputs
        .iter()
        .find(|o| o.name == name)
        .unwrap_or_else(|| panic!("missing suite {name}"))
}

fn assertion(outputs: &[SuiteOutput], suite_name: &str, assertion_name: &str) -> bool {
    suite(outputs, suite_name)
        .report
        .assertions
        .iter()
        .find(|a| a.name == assertion_name)
        .unwrap_or_else(|| panic!("missing assertion {suite_name}/{assertion_name}"))
        .passed
}

fn read_tree(dir: &std::path::Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn synthetic_fit_recovers() -> bool {
    // S2(x) = x * (t log^3 x + 0.5 log^2 x + 0.1 log x + 7), t = 1/pi^2
    let t = 0.10132118364233778f64;
    let checkpoints: Vec<Checkpoint> = (3..=14)
        .map(|k| {
            let x = 10u64.pow(k);
            let l = (x as f64).ln();
            let v = x as f64 * (t * l.powi(3) + 0.5 * l.powi(2) + 0.1 * l + 7.0);
            Checkpoint { x, sum: v.round() as i128 }
        })
        .collect();
    let series = MomentSeries {
        function: FunctionId::DivisorCount,
        kind: MomentKind::Second,
        checkpoints,
    };
    match normord_core::analyzer::d_moment_fit(&series) {
        Ok(fit) => (fit.leading - t).abs() < 1e-6,
        Err(_) => false,
    }
}

#[test]
fn acceptance_gate() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let cfg = RunConfig {
        out_dir: dir_a.path().to_path_buf(),
        ..RunConfig::default()
    };

    let started = Instant::now();
    let run1 = suites::run(&cfg, &[SuiteName::All]).unwrap();
    let full_suite_elapsed = started.elapsed();
    write_outputs(dir_a.path(), &run1).unwrap();

    let run2 = suites::run(&cfg, &[SuiteName::All]).unwrap();
    write_outputs(dir_b.path(), &run2).unwrap();

    let mut gate = Gate::new();

    gate.record(
        "sieve-vs-brute-oracle",
        assertion(&run1, "sieve-check", "sieve_matches_brute_oracle"),
    );
    gate.record(
        "exact-identity-suite",
        suite(&run1, "identities").report.passed(),
    );
    gate.record(
        "mertens-envelope-stable",
        assertion(&run1, "mertens", "normalized_remainder_finite")
            && assertion(&run1, "mertens", "envelope_stable_factor_2"),
    );
    gate.record(
        "segal-envelope-stable",
        assertion(&run1, "segal", "normalized_remainder_finite")
            && assertion(&run1, "segal", "envelope_stable_factor_2"),
    );
    gate.record(
        "certified-constants",
        suite(&run1, "constants").report.passed(),
    );
    gate.record(
        "class-m-verdict",
        assertion(&run1, "verdict", "no_normal_order_certified")
            && assertion(&run1, "verdict", "class_m_bound_scan_passed"),
    );
    gate.record(
        "variance-convergence",
        suite(&run1, "variance").report.passed(),
    );
    gate.record(
        "exceptional-density",
        suite(&run1, "density").report.passed(),
    );
    gate.record("turan-contrast", suite(&run1, "turan").report.passed());
    gate.record(
        "divisor-moment-fit",
        suite(&run1, "divisor-fit").report.passed() && synthetic_fit_recovers(),
    );

    let identical = read_tree(dir_a.path()) == read_tree(dir_b.path());
    gate.record(
        "determinism",
        identical
            && assertion(&run1, "sieve-check", "streaming_matches_materialized")
            && assertion(&run1, "mertens", "streaming_matches_materialized_sums"),
    );

    // performance floor: default suite < 5 min, phi moments to 10^8 in < 2 GB
    let limit = 100_000_000u64;
    let sched = Schedule::single(limit);
    let s1 = moment_sum_streaming(FunctionId::Phi, MomentKind::First, limit, 1 << 20, &sched)
        .unwrap()
        .final_sum();
    let s2 = moment_sum_streaming(FunctionId::Phi, MomentKind::Second, limit, 1 << 20, &sched)
        .unwrap()
        .final_sum();
    let peak_kb = peak_rss_kb();
    println!(
        "  full suite {:.1}s; S1(1e8)={s1}, S2(1e8)={s2}, peak RSS {} kB",
        full_suite_elapsed.as_secs_f64(),
        peak_kb
    );
    gate.record(
        "performance-floor",
        full_suite_elapsed.as_secs() < 300 && s1 > 0 && s2 > s1 && peak_kb < 2_000_000,
    );

    gate.finish();
}

fn peak_rss_kb() -> u64 {
    let status = std::fs::read_to_string("/proc/self/status").unwrap_or_default();
    status
        .lines()
        .find(|l| l.starts_with("VmHWM:"))
        .and_then(|l| l.split_whitespace().nth(1))
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}
