//! Bounded membership scanning, gap enumeration, and residue-class analysis.
//!
//! A scan is exhaustive over `[0, bound]` and proves nothing beyond it;
//! [`ScanReport::certified_beyond`] is always `false` and front ends are
//! expected to say so. Scanning partitions the range into chunks that workers
//! process independently; since every per-value verdict is a pure function,
//! the merged report is bit-identical for any chunk length and worker count.

use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use crate::membership::{find_witness, ConstraintProfile, GeneratorPair};

/// Fixed-size bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitmap {
    len: u64,
    words: Vec<u64>,
}

impl Bitmap {
    pub fn new(len: u64) -> Self {
        let nwords = (len as usize).div_ceil(64);
        Bitmap {
            len,
            words: vec![0; nwords],
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: u64) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }

    pub fn get(&self, i: u64) -> bool {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: u64, words: Vec<u64>) -> Result<Self> {
        if words.len() != (len as usize).div_ceil(64) {
            return Err(Error::Range(format!(
                "bitmap body has {} words, expected {}",
                words.len(),
                (len as usize).div_ceil(64)
            )));
        }
        Ok(Bitmap { len, words })
    }
}

/// Congruence class of a positive integer with respect to coprime `(p, q)`:
/// either a multiple of `q`, or the unique `m` in `1..q` with `n ≡ p·m (mod q)`.
///
/// The label is purely congruential: `n` may be smaller than `p·m`, the least
/// element actually reachable with coefficient `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    Class(u64),
    MultipleOfQ,
}

impl ClassLabel {
    /// Render with the concrete modulus, e.g. `C_9` or `Mult11`.
    pub fn name(&self, q: u64) -> String {
        match self {
            ClassLabel::Class(m) => format!("C_{m}"),
            ClassLabel::MultipleOfQ => format!("Mult{q}"),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Class(m) => write!(f, "C_{m}"),
            ClassLabel::MultipleOfQ => write!(f, "MultQ"),
        }
    }
}

/// Class of `n >= 1`. Requires coprime generators (asserted), under which the
/// class is unique: `m = n·p⁻¹ mod q`.
pub fn class_of(n: u64, gens: GeneratorPair) -> ClassLabel {
    assert!(n >= 1, "class_of requires n >= 1");
    assert!(gens.is_coprime(), "class_of requires coprime generators");
    let (p, q) = (gens.p(), gens.q());
    if n.is_multiple_of(q) {
        return ClassLabel::MultipleOfQ;
    }
    let inv = mod_inverse(p % q, q).expect("coprime generators have an inverse");
    let m = ((n % q) as u128 * inv as u128 % q as u128) as u64;
    debug_assert!(m >= 1 && m < q);
    ClassLabel::Class(m)
}

/// Knobs for [`scan_with`]. `jobs: None` uses the global thread pool;
/// `chunk_len` is the number of consecutive values a worker claims at once.
/// Results never depend on either value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub jobs: Option<usize>,
    pub chunk_len: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: None,
            chunk_len: 4096,
        }
    }
}

/// Result of an exhaustive membership scan over `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    gens: GeneratorPair,
    profile: ConstraintProfile,
    bound: u64,
    member_bitmap: Bitmap,
    gaps: Vec<u64>,
    max_gap: Option<u64>,
    class_maxima: BTreeMap<ClassLabel, u64>,
    certified_beyond: bool,
}

impl ScanReport {
    pub(crate) fn from_bitmap(
        gens: GeneratorPair,
        profile: ConstraintProfile,
        bound: u64,
        member_bitmap: Bitmap,
    ) -> Self {
        let gaps: Vec<u64> = (1..=bound).filter(|&n| !member_bitmap.get(n)).collect();
        let max_gap = gaps.last().copied();
        let mut class_maxima = BTreeMap::new();
        for &g in &gaps {
            let label = class_of(g, gens);
            class_maxima
                .entry(label)
                .and_modify(|m: &mut u64| *m = (*m).max(g))
                .or_insert(g);
        }
        ScanReport {
            gens,
            profile,
            bound,
            member_bitmap,
            gaps,
            max_gap,
            class_maxima,
            certified_beyond: false,
        }
    }

    pub fn gens(&self) -> GeneratorPair {
        self.gens
    }

    pub fn profile(&self) -> &ConstraintProfile {
        &self.profile
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn bitmap(&self) -> &Bitmap {
        &self.member_bitmap
    }

    /// Membership of `n` per the scan; `None` when `n` is outside `[0, bound]`.
    pub fn is_member(&self, n: u64) -> Option<bool> {
        (n <= self.bound).then(|| self.member_bitmap.get(n))
    }

    /// Non-members in `[1, bound]`, ascending.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Largest gap, or `None` when every value in `[1, bound]` is a member.
    pub fn max_gap(&self) -> Option<u64> {
        self.max_gap
    }

    /// Largest gap per congruence class; classes without gaps are absent.
    pub fn class_maxima(&self) -> &BTreeMap<ClassLabel, u64> {
        &self.class_maxima
    }

    /// A scan is evidence only within its bound.
    pub fn certified_beyond(&self) -> bool {
        self.certified_beyond
    }

    /// Gaps restricted to `[lo, hi]`; the range must satisfy
    /// `1 <= lo <= hi <= bound`.
    pub fn gaps_in(&self, lo: u64, hi: u64) -> Result<Vec<u64>> {
        if lo < 1 || lo > hi || hi > self.bound {
            return Err(Error::Range(format!(
                "[{lo},{hi}] is not within the scanned range [1,{}]",
                self.bound
            )));
        }
        let start = self.gaps.partition_point(|&g| g < lo);
        let end = self.gaps.partition_point(|&g| g <= hi);
        Ok(self.gaps[start..end].to_vec())
    }

    pub fn member_count(&self) -> u64 {
        self.member_bitmap.count_ones()
    }
}

/// Exhaustive membership scan of `[0, bound]` with default options.
pub fn scan(gens: GeneratorPair, profile: &ConstraintProfile, bound: u64) -> Result<ScanReport> {
    scan_with(gens, profile, bound, &ScanOptions::default())
}

/// Exhaustive membership scan of `[0, bound]`.
///
/// Gap analysis requires coprime generators: otherwise all values outside one
/// residue class are non-members and the complement is unbounded, so the scan
/// is rejected with [`Error::NonCoprimeGenerators`].
pub fn scan_with(
    gens: GeneratorPair,
    profile: &ConstraintProfile,
    bound: u64,
    options: &ScanOptions,
) -> Result<ScanReport> {
    if bound == 0 {
        return Err(Error::Range("scan bound must be positive".into()));
    }
    if !gens.is_coprime() {
        let g = crate::arith::gcd_conv(gens.p(), gens.q());
        return Err(Error::NonCoprimeGenerators {
            p: gens.p(),
            q: gens.q(),
            g,
        });
    }
    profile.validate()?;
    if options.chunk_len == 0 {
        return Err(Error::Range("chunk length must be positive".into()));
    }
    if options.jobs == Some(0) {
        return Err(Error::Range("worker count must be positive".into()));
    }

    let chunk = options.chunk_len;
    let ranges: Vec<(u64, u64)> = (0..=bound)
        .step_by(chunk.min(u64::MAX - 1) as usize)
        .map(|lo| (lo, (lo + chunk - 1).min(bound)))
        .collect();
    let profile = *profile;
    let compute = || -> Vec<Vec<bool>> {
        ranges
            .par_iter()
            .map(|&(lo, hi)| {
                (lo..=hi)
                    .map(|n| find_witness(n, gens, &profile).is_some())
                    .collect()
            })
            .collect()
    };
    let chunk_bits = match options.jobs {
        None => compute(),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?
            .install(compute),
    };

    let mut bitmap = Bitmap::new(bound + 1);
    for (&(lo, _), bits) in ranges.iter().zip(&chunk_bits) {
        for (offset, &member) in bits.iter().enumerate() {
            if member {
                bitmap.set(lo + offset as u64);
            }
        }
    }
    Ok(ScanReport::from_bitmap(gens, profile, bound, bitmap))
}

/// Exponents `j <= exp_limit` for which `base^j` is a non-member.
///
/// Purely empirical: a listed exponent says nothing about larger powers. The
/// first power that leaves the 64-bit range aborts with an overflow error
/// naming the exponent. Without an `a_max` in the profile the membership
/// check walks the full decomposition list of `base^j`, so keep exponents at
/// desk scale; with an `a_max` the cost per exponent is constant.
pub fn probe_powers(
    gens: GeneratorPair,
    profile: &ConstraintProfile,
    base: u64,
    exp_limit: u32,
) -> Result<Vec<u32>> {
    if base < 2 {
        return Err(Error::Precondition(format!("probe base must be >= 2, got {base}")));
    }
    if exp_limit == 0 {
        return Err(Error::Precondition("probe exponent limit must be >= 1".into()));
    }
    profile.validate()?;
    let mut non_members = Vec::new();
    for j in 1..=exp_limit {
        let value = base.checked_pow(j).ok_or_else(|| {
            Error::Overflow(format!("{base}^{j} exceeds the 64-bit range"))
        })?;
        if find_witness(value, gens, profile).is_none() {
            non_members.push(j);
        }
    }
    Ok(non_members)
}
