//! Exact computation with multiplicative arithmetic functions: linear and
//! segmented sieves for φ, μ, d, ω; checkpointed moment sums; Euler-product
//! constants with certified enclosures; and the moment-based analysis that
//! separates functions with a normal order from those without one.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analyzer;
pub mod euler;
pub mod fixed;
pub mod identity;
pub mod moments;
pub mod sieve;

mod error;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
