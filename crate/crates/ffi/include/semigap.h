/* C interface for the semigap library. Generated by cbindgen; do not edit. */

#ifndef SEMIGAP_H
#define SEMIGAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum SemigapStatus {
  SEMIGAP_STATUS_OK = 0,
  // A required pointer argument was null.
  SEMIGAP_STATUS_NULL_ARGUMENT = 1,
  // Arguments violate a documented precondition.
  SEMIGAP_STATUS_INVALID_ARGUMENT = 2,
  // The computation would leave the 64-bit range.
  SEMIGAP_STATUS_OVERFLOW = 3,
  // Gap analysis was requested for non-coprime generators.
  SEMIGAP_STATUS_NON_COPRIME_GENERATORS = 4,
  // A query lay outside the scanned or supported range.
  SEMIGAP_STATUS_RANGE_ERROR = 5,
  // Internal failure (thread pool, serialization).
  SEMIGAP_STATUS_INTERNAL_ERROR = 6,
} SemigapStatus;

// Verdict of the certificate dispatcher.
typedef enum SemigapVerdict {
  SEMIGAP_VERDICT_NON_MEMBER = 0,
  SEMIGAP_VERDICT_MEMBER = 1,
  SEMIGAP_VERDICT_UNKNOWN = 2,
} SemigapVerdict;

// Opaque constraint profile handle.
typedef struct SemigapProfile SemigapProfile;

// Opaque scan report handle.
typedef struct SemigapScan SemigapScan;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of the underlying library as a static NUL-terminated string;
// never freed by the caller.
const char *semigap_version(void);

// New handle for the default profile (gcd(a,b) = 1 and b >= 2a + 1).
// Release with `semigap_profile_free`.
struct SemigapProfile *semigap_profile_default(void);

// New handle for a custom profile. `a_max` is ignored unless `has_a_max` is
// true. Fails with `INVALID_ARGUMENT` when `a_max < a_min`.
//
// # Safety
// `out` must be a valid pointer.
enum SemigapStatus semigap_profile_new(uint64_t a_min,
                                       bool has_a_max,
                                       uint64_t a_max,
                                       uint64_t alpha,
                                       int64_t beta,
                                       bool require_coprime,
                                       struct SemigapProfile **out);

// Releases a profile handle. Null is a no-op.
//
// # Safety
// `profile` must have been returned by `semigap_profile_default` or
// `semigap_profile_new` and not freed before.
void semigap_profile_free(struct SemigapProfile *profile);

// Decides membership of `n` over generators `(p, q)` under `profile`.
// On a member verdict the admissible decomposition with the smallest first
// coefficient is written to `out_a` / `out_b` (when non-null).
//
// # Safety
// `profile` must be a live profile handle; `out_member` must be valid;
// `out_a` and `out_b` may be null.
enum SemigapStatus semigap_is_member(uint64_t p,
                                     uint64_t q,
                                     const struct SemigapProfile *profile,
                                     uint64_t n,
                                     bool *out_member,
                                     uint64_t *out_a,
                                     uint64_t *out_b);

// Scans `[0, bound]` and returns a report handle through `out`.
// `jobs = 0` uses all cores. Release with `semigap_scan_free`.
//
// # Safety
// `profile` must be a live profile handle and `out` a valid pointer.
enum SemigapStatus semigap_scan_new(uint64_t p,
                                    uint64_t q,
                                    const struct SemigapProfile *profile,
                                    uint64_t bound,
                                    size_t jobs,
                                    struct SemigapScan **out);

// Releases a scan handle. Null is a no-op.
//
// # Safety
// `scan` must have been returned by `semigap_scan_new` and not freed before.
void semigap_scan_free(struct SemigapScan *scan);

// Membership of `n` according to the scan; `RANGE_ERROR` when `n` exceeds
// the scanned bound.
//
// # Safety
// `scan` must be a live scan handle and `out_member` valid.
enum SemigapStatus semigap_scan_contains(const struct SemigapScan *scan,
                                         uint64_t n,
                                         bool *out_member);

// Largest non-member found by the scan. `out_has_gap` is false when every
// value in `[1, bound]` is a member (then `out_gap` is untouched).
//
// # Safety
// `scan`, `out_has_gap`, and `out_gap` must be valid pointers.
enum SemigapStatus semigap_scan_max_gap(const struct SemigapScan *scan,
                                        bool *out_has_gap,
                                        uint64_t *out_gap);

// Number of non-members in `[1, bound]`.
//
// # Safety
// `scan` and `out_count` must be valid pointers.
enum SemigapStatus semigap_scan_gap_count(const struct SemigapScan *scan, uint64_t *out_count);

// Gaps inside `[lo, hi]`, two-call pattern: with a null `buf` only
// `out_len` is written; otherwise up to `cap` values are copied and
// `out_len` receives the number available. `RANGE_ERROR` unless
// `1 <= lo <= hi <= bound`.
//
// # Safety
// `scan` and `out_len` must be valid; `buf`, when non-null, must point to
// at least `cap` writable `uint64_t`.
enum SemigapStatus semigap_scan_gaps_in(const struct SemigapScan *scan,
                                        uint64_t lo,
                                        uint64_t hi,
                                        uint64_t *buf,
                                        size_t cap,
                                        size_t *out_len);

// Classical two-generator Frobenius number `p*q - p - q` for coprime
// `p, q >= 2`.
//
// # Safety
// `out` must be a valid pointer.
enum SemigapStatus semigap_frobenius_classic(uint64_t p, uint64_t q, uint64_t *out);

// Runs the certified fast-path rules for the default instance. On a member
// verdict the verified witness is written to `out_a` / `out_b` (when
// non-null). `SEMIGAP_VERDICT_UNKNOWN` means no rule applied; it is not an
// error.
//
// # Safety
// `out_verdict` must be valid; `out_a` and `out_b` may be null.
enum SemigapStatus semigap_certify(uint64_t n,
                                   enum SemigapVerdict *out_verdict,
                                   uint64_t *out_a,
                                   uint64_t *out_b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEMIGAP_H */
