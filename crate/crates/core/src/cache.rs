//! Binary scan cache.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic    8 bytes  "SGSCAN01"
//! p, q     u64, u64
//! a_min    u64
//! has_max  u8       1 when a_max present
//! a_max    u64      0 when absent
//! alpha    u64
//! beta     i64
//! coprime  u8
//! bound    u64
//! nwords   u64
//! words    nwords × u64   member bitmap over [0, bound]
//! ```
//!
//! The header pins the generators, the full profile, and the bound, so a
//! cache written for one instance can never be replayed for another; any
//! mismatch (or an unreadable file) is treated as a miss and the caller
//! recomputes.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::Path;

use crate::error::Result;
use crate::membership::{ConstraintProfile, GeneratorPair};
use crate::sieve::{Bitmap, ScanReport};

const MAGIC: &[u8; 8] = b"SGSCAN01";

/// Writes the report's bitmap with a self-describing header.
pub fn write(path: &Path, report: &ScanReport) -> Result<()> {
    let mut file = io::BufWriter::new(File::create(path)?);
    file.write_all(MAGIC)?;
    file.write_all(&report.gens().p().to_le_bytes())?;
    file.write_all(&report.gens().q().to_le_bytes())?;
    let profile = report.profile();
    file.write_all(&profile.a_min.to_le_bytes())?;
    file.write_all(&[profile.a_max.is_some() as u8])?;
    file.write_all(&profile.a_max.unwrap_or(0).to_le_bytes())?;
    file.write_all(&profile.alpha.to_le_bytes())?;
    file.write_all(&profile.beta.to_le_bytes())?;
    file.write_all(&[profile.require_coprime as u8])?;
    file.write_all(&report.bound().to_le_bytes())?;
    let words = report.bitmap().words();
    file.write_all(&(words.len() as u64).to_le_bytes())?;
    for w in words {
        file.write_all(&w.to_le_bytes())?;
    }
    file.flush()?;
    Ok(())
}

/// Attempts to load a cached report for exactly this instance. Returns
/// `Ok(None)` on a missing file, header mismatch, or corrupt body.
pub fn try_read(
    path: &Path,
    gens: GeneratorPair,
    profile: &ConstraintProfile,
    bound: u64,
) -> Result<Option<ScanReport>> {
    let mut file = match File::open(path) {
        Ok(f) => io::BufReader::new(f),
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    match read_body(&mut file, gens, profile, bound) {
        Ok(report) => Ok(report),
        // A short or garbled file is a stale cache, not a caller error.
        Err(_) => Ok(None),
    }
}

fn read_body(
    file: &mut impl Read,
    gens: GeneratorPair,
    profile: &ConstraintProfile,
    bound: u64,
) -> io::Result<Option<ScanReport>> {
    let mut magic = [0u8; 8];
    file.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Ok(None);
    }
    let header_matches = read_u64(file)? == gens.p()
        && read_u64(file)? == gens.q()
        && read_u64(file)? == profile.a_min
        && {
            let has_max = read_u8(file)? == 1;
            let a_max = read_u64(file)?;
            (has_max, a_max) == (profile.a_max.is_some(), profile.a_max.unwrap_or(0))
        }
        && read_u64(file)? == profile.alpha
        && read_i64(file)? == profile.beta
        && (read_u8(file)? == 1) == profile.require_coprime
        && read_u64(file)? == bound;
    if !header_matches {
        return Ok(None);
    }
    let nwords = read_u64(file)? as usize;
    if nwords != (bound as usize + 1).div_ceil(64) {
        return Ok(None);
    }
    let mut words = Vec::with_capacity(nwords);
    for _ in 0..nwords {
        words.push(read_u64(file)?);
    }
    let Ok(bitmap) = Bitmap::from_words(bound + 1, words) else {
        return Ok(None);
    };
    Ok(Some(ScanReport::from_bitmap(gens, *profile, bound, bitmap)))
}

fn read_u64(r: &mut impl Read) -> io::Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_i64(r: &mut impl Read) -> io::Result<i64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(i64::from_le_bytes(buf))
}

fn read_u8(r: &mut impl Read) -> io::Result<u8> {
    let mut buf = [0u8; 1];
    r.read_exact(&mut buf)?;
    Ok(buf[0])
}
