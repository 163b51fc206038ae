//! Deterministic JSON and CSV report emission. Exact sums are rendered as
//! decimal strings (they routinely exceed 2⁵³); high-precision reals carry
//! 15 significant digits.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use serde_json::{json, Value};

use normord_core::moments::{MomentSeries, RemainderProfile};

pub const SCHEMA: &str = "normord-report/1";

/// Significant digits for high-precision decimal rendering.
pub const SIG_DIGITS: usize = 15;

pub fn fmt_f64(v: f64) -> String {
    format!("{:.*e}", SIG_DIGITS - 1, v)
}

#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub analysis_type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<String>,
    pub parameters: BTreeMap<String, Value>,
    pub checkpoints: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub notes: Vec<String>,
    pub assertions: Vec<Assertion>,
}

impl SuiteReport {
    pub fn new(analysis_type: &str) -> Self {
        SuiteReport {
            schema: SCHEMA,
            analysis_type: analysis_type.to_string(),
            function: None,
            parameters: BTreeMap::new(),
            checkpoints: Vec::new(),
            verdict: None,
            notes: Vec::new(),
            assertions: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: Value) -> &mut Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: String) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

/// A suite's report plus any CSV side files, keyed by file name.
#[derive(Debug, Clone)]
pub struct SuiteOutput {
    pub name: String,
    pub report: SuiteReport,
    pub csv_files: Vec<(String, String)>,
}

/// Per-series CSV: x, sum, prediction, remainder,
/// normalized_remainder; one row per checkpoint, ascending in x.
pub fn series_csv(series: &MomentSeries, profile: &RemainderProfile) -> String {
    let mut out = String::from("x,sum,prediction,remainder,normalized_remainder\n");
    for (cp, pt) in series.checkpoints.iter().zip(&profile.points) {
        debug_assert_eq!(cp.x, pt.x);
        let rem_mid = pt
            .remainder
            .lo()
            .add(pt.remainder.hi())
            .mul_ratio(1, 2, normord_core::fixed::Rounding::Down);
        let sum_fx = normord_core::fixed::Fx::from_i128(cp.sum, rem_mid.bits());
        let pred = sum_fx.sub(&rem_mid);
        let norm_mid = 0.5 * (pt.normalized_lo + pt.normalized_hi);
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            cp.x,
            cp.sum,
            pred.to_decimal(SIG_DIGITS),
            rem_mid.to_decimal(SIG_DIGITS),
            fmt_f64(norm_mid),
        ));
    }
    out
}

/// Writes every suite's JSON and CSV files plus an index, returning the
/// number of failed assertions. File contents are byte-stable for a fixed
/// config and build.
pub fn write_outputs(out_dir: &Path, outputs: &[SuiteOutput]) -> anyhow::Result<usize> {
    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))?;
    let mut failed = 0usize;
    let mut index_suites = Vec::new();
    for out in outputs {
        let mut files = Vec::new();
        let json_name = format!("{}.json", out.name);
        let path = out_dir.join(&json_name);
        let body = serde_json::to_string_pretty(&out.report)?;
        fs::write(&path, body.as_bytes())
            .with_context(|| format!("writing {}", path.display()))?;
        files.push(json_name);
        for (name, content) in &out.csv_files {
            let path = out_dir.join(name);
            fs::write(&path, content.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
            files.push(name.clone());
        }
        failed += out.report.assertions.iter().filter(|a| !a.passed).count();
        index_suites.push(json!({
            "name": out.name,
            "passed": out.report.passed(),
            "files": files,
        }));
    }
    let index = json!({
        "schema": SCHEMA,
        "passed": failed == 0,
        "suites": Value::Array(index_suites),
    });
    let path = out_dir.join("index.json");
    fs::write(&path, serde_json::to_string_pretty(&index)?.as_bytes())
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_output_set_still_yields_valid_index() {
        let dir = tempfile::tempdir().unwrap();
        let failed = write_outputs(dir.path(), &[]).unwrap();
        assert_eq!(failed, 0);
        let index: Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("index.json")).unwrap())
                .unwrap();
        assert_eq!(index["passed"], Value::Bool(true));
        assert!(index["suites"].as_array().unwrap().is_empty());
    }

    #[test]
    fn csv_has_header_and_rows() {
        use normord_core::moments::{
            moment_sum, remainder_profile, Envelope, MomentKind, Prediction, Schedule,
        };
        use normord_core::sieve::FunctionId;
        let s = moment_sum(
            FunctionId::Phi,
            MomentKind::First,
            100,
            &Schedule::from_points(vec![10, 100]).unwrap(),
        )
        .unwrap();
        let prof = remainder_profile(&s, &Prediction::Zero, Envelope::XLogX).unwrap();
        let csv = series_csv(&s, &prof);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "x,sum,prediction,remainder,normalized_remainder");
        assert!(lines[1].starts_with("10,32,"));
    }
}
