//! C ABI for the semigap library.
//!
//! Conventions:
//!
//! * every fallible function returns a [`SemigapStatus`] and writes results
//!   through out-pointers, which are only written on `SEMIGAP_STATUS_OK`;
//! * profiles and scan reports are opaque handles created and released by
//!   `semigap_*_new` / `semigap_*_free` pairs; handles are immutable after
//!   creation and safe to share across threads;
//! * list retrieval uses the two-call pattern: pass a null buffer to obtain
//!   the required length, then call again with storage.
//!
//! The matching header `include/semigap.h` is generated at build time.

use std::os::raw::c_char;

use semigap::{
    certify, frobenius_classic, scan_with, ConstraintProfile, Error, GeneratorPair, ScanOptions,
    ScanReport, Verdict,
};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigapStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments violate a documented precondition.
    InvalidArgument = 2,
    /// The computation would leave the 64-bit range.
    Overflow = 3,
    /// Gap analysis was requested for non-coprime generators.
    NonCoprimeGenerators = 4,
    /// A query lay outside the scanned or supported range.
    RangeError = 5,
    /// Internal failure (thread pool, serialization).
    InternalError = 6,
}

/// Verdict of the certificate dispatcher.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigapVerdict {
    NonMember = 0,
    Member = 1,
    Unknown = 2,
}

/// Opaque constraint profile handle.
pub struct SemigapProfile {
    inner: ConstraintProfile,
}

/// Opaque scan report handle.
pub struct SemigapScan {
    inner: ScanReport,
}

fn status_of(err: &Error) -> SemigapStatus {
    match err {
        Error::Overflow(_) | Error::Capacity(_) => SemigapStatus::Overflow,
        Error::NonCoprimeGenerators { .. } => SemigapStatus::NonCoprimeGenerators,
        Error::Range(_) => SemigapStatus::RangeError,
        Error::InvalidGenerators(_) | Error::InvalidProfile(_) | Error::Precondition(_) => {
            SemigapStatus::InvalidArgument
        }
        _ => SemigapStatus::InternalError,
    }
}

/// Version of the underlying library as a static NUL-terminated string;
/// never freed by the caller.
#[no_mangle]
pub extern "C" fn semigap_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// New handle for the default profile (gcd(a,b) = 1 and b >= 2a + 1).
/// Release with `semigap_profile_free`.
#[no_mangle]
pub extern "C" fn semigap_profile_default() -> *mut SemigapProfile {
    Box::into_raw(Box::new(SemigapProfile {
        inner: ConstraintProfile::default(),
    }))
}

/// New handle for a custom profile. `a_max` is ignored unless `has_a_max` is
/// true. Fails with `INVALID_ARGUMENT` when `a_max < a_min`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semigap_profile_new(
    a_min: u64,
    has_a_max: bool,
    a_max: u64,
    alpha: u64,
    beta: i64,
    require_coprime: bool,
    out: *mut *mut SemigapProfile,
) -> SemigapStatus {
    if out.is_null() {
        return SemigapStatus::NullArgument;
    }
    let profile = ConstraintProfile {
        a_min,
        a_max: has_a_max.then_some(a_max),
        alpha,
        beta,
        require_coprime,
    };
    if let Err(e) = profile.validate() {
        return status_of(&e);
    }
    *out = Box::into_raw(Box::new(SemigapProfile { inner: profile }));
    SemigapStatus::Ok
}

/// Releases a profile handle. Null is a no-op.
///
/// # Safety
/// `profile` must have been returned by `semigap_profile_default` or
/// `semigap_profile_new` and not freed before.
#[no_mangle]
pub unsafe extern "C" fn semigap_profile_free(profile: *mut SemigapProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Decides membership of `n` over generators `(p, q)` under `profile`.
/// On a member verdict the admissible decomposition with the smallest first
/// coefficient is written to `out_a` / `out_b` (when non-null).
///
/// # Safety
/// `profile` must be a live profile handle; `out_member` must be valid;
/// `out_a` and `out_b` may be null.
#[no_mangle]
pub unsafe extern "C" fn semigap_is_member(
    p: u64,
    q: u64,
    profile: *const SemigapProfile,
    n: u64,
    out_member: *mut bool,
    out_a: *mut u64,
    out_b: *mut u64,
) -> SemigapStatus {
    if profile.is_null() || out_member.is_null() {
        return SemigapStatus::NullArgument;
    }
    let gens = match GeneratorPair::new(p, q) {
        Ok(g) => g,
        Err(e) => return status_of(&e),
    };
    match semigap::find_witness(n, gens, &(*profile).inner) {
        Some(w) => {
            *out_member = true;
            if !out_a.is_null() {
                *out_a = w.a;
            }
            if !out_b.is_null() {
                *out_b = w.b;
            }
        }
        None => *out_member = false,
    }
    SemigapStatus::Ok
}

/// Scans `[0, bound]` and returns a report handle through `out`.
/// `jobs = 0` uses all cores. Release with `semigap_scan_free`.
///
/// # Safety
/// `profile` must be a live profile handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semigap_scan_new(
    p: u64,
    q: u64,
    profile: *const SemigapProfile,
    bound: u64,
    jobs: usize,
    out: *mut *mut SemigapScan,
) -> SemigapStatus {
    if profile.is_null() || out.is_null() {
        return SemigapStatus::NullArgument;
    }
    let gens = match GeneratorPair::new(p, q) {
        Ok(g) => g,
        Err(e) => return status_of(&e),
    };
    let options = ScanOptions {
        jobs: (jobs > 0).then_some(jobs),
        ..ScanOptions::default()
    };
    match scan_with(gens, &(*profile).inner, bound, &options) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(SemigapScan { inner: report }));
            SemigapStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a scan handle. Null is a no-op.
///
/// # Safety
/// `scan` must have been returned by `semigap_scan_new` and not freed before.
#[no_mangle]
pub unsafe extern "C" fn semigap_scan_free(scan: *mut SemigapScan) {
    if !scan.is_null() {
        drop(Box::from_raw(scan));
    }
}

/// Membership of `n` according to the scan; `RANGE_ERROR` when `n` exceeds
/// the scanned bound.
///
/// # Safety
/// `scan` must be a live scan handle and `out_member` valid.
#[no_mangle]
pub unsafe extern "C" fn semigap_scan_contains(
    scan: *const SemigapScan,
    n: u64,
    out_member: *mut bool,
) -> SemigapStatus {
    if scan.is_null() || out_member.is_null() {
        return SemigapStatus::NullArgument;
    }
    match (*scan).inner.is_member(n) {
        Some(member) => {
            *out_member = member;
            SemigapStatus::Ok
        }
        None => SemigapStatus::RangeError,
    }
}

/// Largest non-member found by the scan. `out_has_gap` is false when every
/// value in `[1, bound]` is a member (then `out_gap` is untouched).
///
/// # Safety
/// `scan`, `out_has_gap`, and `out_gap` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn semigap_scan_max_gap(
    scan: *const SemigapScan,
    out_has_gap: *mut bool,
    out_gap: *mut u64,
) -> SemigapStatus {
    if scan.is_null() || out_has_gap.is_null() || out_gap.is_null() {
        return SemigapStatus::NullArgument;
    }
    match (*scan).inner.max_gap() {
        Some(gap) => {
            *out_has_gap = true;
            *out_gap = gap;
        }
        None => *out_has_gap = false,
    }
    SemigapStatus::Ok
}

/// Number of non-members in `[1, bound]`.
///
/// # Safety
/// `scan` and `out_count` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn semigap_scan_gap_count(
    scan: *const SemigapScan,
    out_count: *mut u64,
) -> SemigapStatus {
    if scan.is_null() || out_count.is_null() {
        return SemigapStatus::NullArgument;
    }
    *out_count = (*scan).inner.gaps().len() as u64;
    SemigapStatus::Ok
}

/// Gaps inside `[lo, hi]`, two-call pattern: with a null `buf` only
/// `out_len` is written; otherwise up to `cap` values are copied and
/// `out_len` receives the number available. `RANGE_ERROR` unless
/// `1 <= lo <= hi <= bound`.
///
/// # Safety
/// `scan` and `out_len` must be valid; `buf`, when non-null, must point to
/// at least `cap` writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn semigap_scan_gaps_in(
    scan: *const SemigapScan,
    lo: u64,
    hi: u64,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SemigapStatus {
    if scan.is_null() || out_len.is_null() {
        return SemigapStatus::NullArgument;
    }
    let gaps = match (*scan).inner.gaps_in(lo, hi) {
        Ok(g) => g,
        Err(e) => return status_of(&e),
    };
    *out_len = gaps.len();
    if !buf.is_null() {
        for (i, gap) in gaps.iter().take(cap).enumerate() {
            *buf.add(i) = *gap;
        }
    }
    SemigapStatus::Ok
}

/// Classical two-generator Frobenius number `p*q - p - q` for coprime
/// `p, q >= 2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semigap_frobenius_classic(
    p: u64,
    q: u64,
    out: *mut u64,
) -> SemigapStatus {
    if out.is_null() {
        return SemigapStatus::NullArgument;
    }
    match frobenius_classic(p, q) {
        Ok(v) => {
            *out = v;
            SemigapStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Runs the certified fast-path rules for the default instance. On a member
/// verdict the verified witness is written to `out_a` / `out_b` (when
/// non-null). `SEMIGAP_VERDICT_UNKNOWN` means no rule applied; it is not an
/// error.
///
/// # Safety
/// `out_verdict` must be valid; `out_a` and `out_b` may be null.
#[no_mangle]
pub unsafe extern "C" fn semigap_certify(
    n: u64,
    out_verdict: *mut SemigapVerdict,
    out_a: *mut u64,
    out_b: *mut u64,
) -> SemigapStatus {
    if out_verdict.is_null() {
        return SemigapStatus::NullArgument;
    }
    match certify(n) {
        Verdict::Member(cert) => {
            *out_verdict = SemigapVerdict::Member;
            if !out_a.is_null() {
                *out_a = cert.witness.a;
            }
            if !out_b.is_null() {
                *out_b = cert.witness.b;
            }
        }
        Verdict::NonMember { .. } => *out_verdict = SemigapVerdict::NonMember,
        Verdict::Unknown => *out_verdict = SemigapVerdict::Unknown,
    }
    SemigapStatus::Ok
}
