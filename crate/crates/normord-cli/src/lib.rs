//! Verification suites, report emission, and the binary table format
//! behind the `normord` command-line tool.

pub mod config;
pub mod formats;
pub mod report;
pub mod suites;
