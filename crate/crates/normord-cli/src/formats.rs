//! Binary dump of a sieve table.
//!
//! Layout (all integers little-endian):
//!   bytes 0..5   magic "NORD1"
//!   bytes 5..13  limit: u64
//!   byte  13     function bitmap (1 = φ, 2 = μ, 4 = d, 8 = ω)
//!   then one value array per set bit, in bitmap order, entries n = 1..=limit:
//!     φ as u32, μ as i8, d as u16, ω as u8.
//!
//! Round-trips are bit-exact; smallest prime factors are re-sieved on load.

use std::io::{Read, Write};

use anyhow::{bail, Context};
use normord_core::sieve::{assemble_table, FunctionId, FunctionSet, SieveTable};

pub const MAGIC: &[u8; 5] = b"NORD1";

pub fn write_table<W: Write>(table: &SieveTable, mut w: W) -> anyhow::Result<()> {
    let limit = table.limit() as usize;
    w.write_all(MAGIC)?;
    w.write_all(&table.limit().to_le_bytes())?;
    w.write_all(&[table.functions().bits()])?;
    if let Some(phi) = table.phi_values() {
        for &v in &phi[1..=limit] {
            w.write_all(&v.to_le_bytes())?;
        }
    }
    if let Some(mu) = table.mu_values() {
        for &v in &mu[1..=limit] {
            w.write_all(&v.to_le_bytes())?;
        }
    }
    if let Some(d) = table.divisor_count_values() {
        for &v in &d[1..=limit] {
            w.write_all(&v.to_le_bytes())?;
        }
    }
    if let Some(om) = table.omega_values() {
        for &v in &om[1..=limit] {
            w.write_all(&v.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read_table<R: Read>(mut r: R) -> anyhow::Result<SieveTable> {
    let mut magic = [0u8; 5];
    r.read_exact(&mut magic).context("reading magic")?;
    if &magic != MAGIC {
        bail!("not a NORD1 table dump");
    }
    let mut limit_bytes = [0u8; 8];
    r.read_exact(&mut limit_bytes)?;
    let limit = u64::from_le_bytes(limit_bytes);
    let mut bitmap = [0u8; 1];
    r.read_exact(&mut bitmap)?;
    let set = FunctionSet::from_bits(bitmap[0]).map_err(|e| anyhow::anyhow!("{e}"))?;
    let n = limit as usize;

    let mut raw = Vec::new();
    let phi = if set.contains(FunctionId::Phi) {
        raw.resize(n * 4, 0);
        r.read_exact(&mut raw).context("phi array")?;
        let mut v = vec![0u32; n + 1];
        for i in 0..n {
            v[i + 1] = u32::from_le_bytes(raw[i * 4..i * 4 + 4].try_into().unwrap());
        }
        Some(v)
    } else {
        None
    };
    let mu = if set.contains(FunctionId::Mu) {
        raw.resize(n, 0);
        r.read_exact(&mut raw).context("mu array")?;
        let mut v = vec![0i8; n + 1];
        for i in 0..n {
            v[i + 1] = raw[i] as i8;
        }
        Some(v)
    } else {
        None
    };
    let d = if set.contains(FunctionId::DivisorCount) {
        raw.resize(n * 2, 0);
        r.read_exact(&mut raw).context("divisor-count array")?;
        let mut v = vec![0u16; n + 1];
        for i in 0..n {
            v[i + 1] = u16::from_le_bytes(raw[i * 2..i * 2 + 2].try_into().unwrap());
        }
        Some(v)
    } else {
        None
    };
    let omega = if set.contains(FunctionId::Omega) {
        raw.resize(n, 0);
        r.read_exact(&mut raw).context("omega array")?;
        let mut v = vec![0u8; n + 1];
        v[1..].copy_from_slice(&raw);
        Some(v)
    } else {
        None
    };

    let mut trailing = [0u8; 1];
    if r.read(&mut trailing)? != 0 {
        bail!("trailing bytes after table dump");
    }
    assemble_table(limit, phi, mu, d, omega).map_err(|e| anyhow::anyhow!("{e}"))
}
