use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context};

/// One run's worth of knobs; every suite reads from this.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub limit: u64,
    pub segment_size: u64,
    pub checkpoint_ratio: f64,
    pub prime_limit: u64,
    pub precision_bits: u32,
    /// ε values as exact fractions.
    pub epsilons: Vec<(u64, u64)>,
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            limit: 10_000_000,
            segment_size: 1 << 20,
            checkpoint_ratio: normord_core::moments::DEFAULT_CHECKPOINT_RATIO,
            prime_limit: 10_000_000,
            precision_bits: 128,
            epsilons: vec![(1, 100), (5, 100), (1, 10)],
            out_dir: PathBuf::from("normord-out"),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.limit == 0 || self.segment_size == 0 || self.prime_limit < 2 {
            bail!("limit, segment size, and prime limit must be positive (prime limit ≥ 2)");
        }
        if !(self.checkpoint_ratio > 1.0) {
            bail!("checkpoint ratio must exceed 1");
        }
        if self.precision_bits < 64 {
            bail!("precision below 64 bits cannot be certified");
        }
        if self.epsilons.iter().any(|&(n, d)| n == 0 || d == 0) {
            bail!("epsilon values must be positive fractions");
        }
        Ok(())
    }

    pub fn schedule(&self, limit: u64) -> anyhow::Result<normord_core::moments::Schedule> {
        normord_core::moments::Schedule::geometric(
            limit,
            normord_core::moments::DEFAULT_FIRST_CHECKPOINT,
            self.checkpoint_ratio,
        )
        .map_err(|e| anyhow::anyhow!("{e}"))
    }
}

/// Parses "0.05", "5/100", or "2" into an exact fraction.
pub fn parse_epsilon(s: &str) -> anyhow::Result<(u64, u64)> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().context("epsilon numerator")?;
        let den: u64 = den.trim().parse().context("epsilon denominator")?;
        return Ok((num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int: u64 = if int.is_empty() { 0 } else { int.parse().context("epsilon")? };
        if frac.len() > 18 || frac.chars().any(|c| !c.is_ascii_digit()) {
            bail!("epsilon fraction part too long or not numeric: {s}");
        }
        let scale = 10u64.pow(frac.len() as u32);
        let frac_v: u64 = if frac.is_empty() { 0 } else { frac.parse()? };
        let num = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac_v))
            .context("epsilon out of range")?;
        return Ok((num, scale));
    }
    let int: u64 = s.parse().with_context(|| format!("bad epsilon: {s}"))?;
    Ok((int, 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    SieveCheck,
    Mertens,
    Segal,
    Identities,
    Constants,
    Verdict,
    Variance,
    Density,
    Turan,
    DivisorFit,
    All,
}

impl SuiteName {
    pub const RUNNABLE: [SuiteName; 10] = [
        SuiteName::SieveCheck,
        SuiteName::Mertens,
        SuiteName::Segal,
        SuiteName::Identities,
        SuiteName::Constants,
        SuiteName::Verdict,
        SuiteName::Variance,
        SuiteName::Density,
        SuiteName::Turan,
        SuiteName::DivisorFit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::SieveCheck => "sieve-check",
            SuiteName::Mertens => "mertens",
            SuiteName::Segal => "segal",
            SuiteName::Identities => "identities",
            SuiteName::Constants => "constants",
            SuiteName::Verdict => "verdict",
            SuiteName::Variance => "variance",
            SuiteName::Density => "density",
            SuiteName::Turan => "turan",
            SuiteName::DivisorFit => "divisor-fit",
            SuiteName::All => "all",
        }
    }
}

impl FromStr for SuiteName {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Ok(match s {
            "sieve-check" => SuiteName::SieveCheck,
            "mertens" => SuiteName::Mertens,
            "segal" => SuiteName::Segal,
            "identities" => SuiteName::Identities,
            "constants" => SuiteName::Constants,
            "verdict" => SuiteName::Verdict,
            "variance" => SuiteName::Variance,
            "density" => SuiteName::Density,
            "turan" => SuiteName::Turan,
            "divisor-fit" => SuiteName::DivisorFit,
            "all" => SuiteName::All,
            other => bail!("unknown suite {other:?}"),
        })
    }
}
