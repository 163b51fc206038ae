use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use normord_cli::config::{parse_epsilon, RunConfig, SuiteName};
use normord_cli::{formats, report, suites};
use normord_core::sieve::{build_table, FunctionId, FunctionSet};

#[derive(Parser)]
#[command(name = "normord", version, about = "Sieve-backed verification of mean values, \
variance, and normal-order behavior of arithmetic functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write JSON/CSV reports.
    Run {
        /// Largest n to sieve.
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
        /// Segment length for streaming sieves.
        #[arg(long, default_value_t = 1 << 20)]
        segment_size: u64,
        /// Geometric spacing between checkpoints.
        #[arg(long, default_value_t = normord_core::moments::DEFAULT_CHECKPOINT_RATIO)]
        checkpoint_ratio: f64,
        /// Truncation prime for Euler-product enclosures.
        #[arg(long, default_value_t = 10_000_000)]
        prime_limit: u64,
        /// Working precision for certified interval arithmetic.
        #[arg(long, default_value_t = 128)]
        precision_bits: u32,
        /// Exceptional-set tolerance; "0.05", "5/100", or an integer. Repeatable.
        #[arg(long = "epsilon", value_parser = parse_epsilon)]
        epsilons: Vec<(u64, u64)>,
        /// Output directory for reports.
        #[arg(long = "out", env = "NORMORD_OUT", default_value = "normord-out")]
        out_dir: PathBuf,
        /// Suite to run (repeatable); defaults to all.
        #[arg(long = "suite")]
        suite: Vec<SuiteName>,
    },
    /// Sieve all four functions up to LIMIT and write a binary table dump.
    DumpTable {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reload a table dump and re-verify it against a fresh sieve.
    CheckTable {
        #[arg(long)]
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            limit,
            segment_size,
            checkpoint_ratio,
            prime_limit,
            precision_bits,
            epsilons,
            out_dir,
            suite,
        } => {
            let defaults = RunConfig::default();
            let cfg = RunConfig {
                limit,
                segment_size,
                checkpoint_ratio,
                prime_limit,
                precision_bits,
                epsilons: if epsilons.is_empty() { defaults.epsilons } else { epsilons },
                out_dir,
            };
            let selected = if suite.is_empty() { vec![SuiteName::All] } else { suite };
            let outputs = suites::run(&cfg, &selected)?;
            let failed = report::write_outputs(&cfg.out_dir, &outputs)?;
            for out in &outputs {
                let status = if out.report.passed() { "pass" } else { "FAIL" };
                println!("{:<12} {}", out.name, status);
            }
            println!(
                "reports written to {} ({} assertion(s) failed)",
                cfg.out_dir.display(),
                failed
            );
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::DumpTable { limit, out } => {
            let table = build_table(limit, FunctionSet::ALL)?;
            let file = File::create(&out)
                .with_context(|| format!("creating {}", out.display()))?;
            formats::write_table(&table, BufWriter::new(file))?;
            println!("wrote table for n <= {limit} to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckTable { path } => {
            let file =
                File::open(&path).with_context(|| format!("opening {}", path.display()))?;
            let table = formats::read_table(BufReader::new(file))?;
            let fresh = build_table(table.limit(), table.functions())?;
            let mut mismatches = 0u64;
            for n in 1..=table.limit() {
                for f in FunctionId::ALL {
                    if table.functions().contains(f) && table.value(f, n) != fresh.value(f, n) {
                        mismatches += 1;
                    }
                }
            }
            if mismatches == 0 {
                println!("table verified: limit {}, no mismatches", table.limit());
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("table corrupt: {mismatches} mismatches");
                Ok(ExitCode::FAILURE)
            }
        }
    }
}
