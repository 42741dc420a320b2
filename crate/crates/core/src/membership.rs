//! Exact decomposition enumeration and the ground-truth membership predicate.
//!
//! A *decomposition* of `n` over generators `(p, q)` is a pair of nonnegative
//! integers `(a, b)` with `p·a + q·b = n`. A [`ConstraintProfile`] restricts
//! which decompositions are admissible; `n` is a member of the restricted set
//! when at least one of its decompositions is admissible. The default profile
//! requires `gcd(a, b) = 1` and `b >= 2a + 1`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::arith::{gcd_conv, mod_inverse};
use crate::error::{Error, Result};

/// Hard cap on materialized decomposition lists. Enumeration beyond this is
/// almost certainly a caller error (the list for `n` has about `n/(p·q)`
/// entries), and failing loudly beats exhausting memory.
const MAX_ENUMERATED: u64 = 1 << 24;

/// The two semigroup generators. The default pair is `(10, 11)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorPair {
    p: u64,
    q: u64,
}

impl Default for GeneratorPair {
    fn default() -> Self {
        GeneratorPair { p: 10, q: 11 }
    }
}

impl GeneratorPair {
    /// Validates `p >= 1`, `q >= 1`, `p != q`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidGenerators(format!(
                "generators must be positive, got ({p}, {q})"
            )));
        }
        if p == q {
            return Err(Error::InvalidGenerators(format!(
                "generators must be distinct, got ({p}, {q})"
            )));
        }
        Ok(GeneratorPair { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// True when `gcd(p, q) = 1`. Bounded-complement analyses require this.
    pub fn is_coprime(&self) -> bool {
        gcd_conv(self.p, self.q) == 1
    }
}

impl fmt::Display for GeneratorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Restrictions on the coefficients of a decomposition.
///
/// A decomposition `(a, b)` is admissible when
///
/// * `a_min <= a`, and `a <= a_max` when `a_max` is present,
/// * `b >= alpha·a + beta`,
/// * `gcd(a, b) = 1` when `require_coprime` is set (with `gcd(0, b) = b`).
///
/// The default profile is `a_min = 0`, no `a_max`, `alpha = 2`, `beta = 1`,
/// coprimality required. Note `a_min = 0` rather than 1: under the zero-gcd
/// convention the only admissible `a = 0` decomposition is `(0, 1)`, i.e. the
/// generator `q` itself, which is exactly the intended set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintProfile {
    pub a_min: u64,
    pub a_max: Option<u64>,
    pub alpha: u64,
    pub beta: i64,
    pub require_coprime: bool,
}

impl Default for ConstraintProfile {
    fn default() -> Self {
        ConstraintProfile {
            a_min: 0,
            a_max: None,
            alpha: 2,
            beta: 1,
            require_coprime: true,
        }
    }
}

impl ConstraintProfile {
    pub fn validate(&self) -> Result<()> {
        if let Some(a_max) = self.a_max {
            if a_max < self.a_min {
                return Err(Error::InvalidProfile(format!(
                    "a_max = {a_max} is below a_min = {}",
                    self.a_min
                )));
            }
        }
        Ok(())
    }

    /// Checks one decomposition, reporting the first violated constraint in
    /// the fixed order: coefficient range, linear bound, coprimality. The
    /// fixed order keeps rejection lists reproducible.
    pub fn check(&self, d: Decomposition) -> std::result::Result<(), ConstraintViolation> {
        if d.a < self.a_min {
            return Err(ConstraintViolation::BelowMinCoefficient {
                a: d.a,
                a_min: self.a_min,
            });
        }
        if let Some(a_max) = self.a_max {
            if d.a > a_max {
                return Err(ConstraintViolation::AboveMaxCoefficient { a: d.a, a_max });
            }
        }
        // i128 keeps alpha·a + beta exact for any u64 inputs.
        let required = self.alpha as i128 * d.a as i128 + self.beta as i128;
        if (d.b as i128) < required {
            return Err(ConstraintViolation::LinearBound { b: d.b, required });
        }
        if self.require_coprime {
            let g = gcd_conv(d.a, d.b);
            if g != 1 {
                return Err(ConstraintViolation::NotCoprime { gcd: g });
            }
        }
        Ok(())
    }

    pub fn satisfies(&self, d: Decomposition) -> bool {
        self.check(d).is_ok()
    }
}

impl fmt::Display for ConstraintProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_min={}", self.a_min)?;
        match self.a_max {
            Some(m) => write!(f, " a_max={m}")?,
            None => write!(f, " a_max=none")?,
        }
        write!(
            f,
            " alpha={} beta={} coprime={}",
            self.alpha,
            self.beta,
            if self.require_coprime { "required" } else { "free" }
        )
    }
}

/// One coefficient pair `(a, b)` with `p·a + q·b = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: u64,
    pub b: u64,
}

impl Decomposition {
    /// `p·a + q·b`, or an overflow error if the sum leaves the 64-bit range.
    pub fn value(&self, gens: GeneratorPair) -> Result<u64> {
        gens.p
            .checked_mul(self.a)
            .and_then(|pa| gens.q.checked_mul(self.b).and_then(|qb| pa.checked_add(qb)))
            .ok_or_else(|| {
                Error::Overflow(format!(
                    "{}*{} + {}*{} exceeds the 64-bit range",
                    gens.p, self.a, gens.q, self.b
                ))
            })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.a, self.b)
    }
}

/// Why a particular decomposition was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintViolation {
    BelowMinCoefficient { a: u64, a_min: u64 },
    AboveMaxCoefficient { a: u64, a_max: u64 },
    LinearBound { b: u64, required: i128 },
    NotCoprime { gcd: u64 },
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintViolation::BelowMinCoefficient { a, a_min } => {
                write!(f, "coefficient range: a={a} < a_min={a_min}")
            }
            ConstraintViolation::AboveMaxCoefficient { a, a_max } => {
                write!(f, "coefficient range: a={a} > a_max={a_max}")
            }
            ConstraintViolation::LinearBound { b, required } => {
                write!(f, "linear bound: b={b} < {required}")
            }
            ConstraintViolation::NotCoprime { gcd } => {
                write!(f, "coprimality: gcd(a,b)={gcd}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    NonMember,
}

/// Verdict for one queried value: a witness when `n` is a member, otherwise
/// the complete list of decompositions with the first violated constraint of
/// each, so a non-membership claim is independently checkable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipResult {
    pub n: u64,
    pub status: Membership,
    /// Admissible decomposition with the smallest `a`; present iff member.
    pub witness: Option<Decomposition>,
    /// Every decomposition of `n` with its rejection reason; present iff
    /// non-member.
    pub rejected: Vec<(Decomposition, ConstraintViolation)>,
}

impl MembershipResult {
    pub fn is_member(&self) -> bool {
        self.status == Membership::Member
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "status": match self.status {
                Membership::Member => "member",
                Membership::NonMember => "non_member",
            },
            "witness": self.witness.map(|w| serde_json::json!({"a": w.a, "b": w.b})),
            "rejected": self
                .rejected
                .iter()
                .map(|(d, v)| serde_json::json!({"a": d.a, "b": d.b, "reason": v.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Smallest coefficient pair of `n` over reduced coprime generators:
/// the `(a0, b0)` with minimal `a0 >= 0`, or `None` when no nonnegative
/// decomposition exists.
fn first_decomposition(n: u64, p: u64, q: u64) -> Option<(u64, u64)> {
    debug_assert_eq!(gcd_conv(p, q), 1);
    let inv = mod_inverse(p % q, q)?;
    // a0 = n * p^{-1} mod q; u128 keeps the product exact for any u64 q.
    let a0 = ((n % q) as u128 * inv as u128 % q as u128) as u64;
    let pa = p as u128 * a0 as u128;
    if pa > n as u128 {
        return None;
    }
    let b0 = ((n as u128 - pa) / q as u128) as u64;
    Some((a0, b0))
}

/// All decompositions of `n` over `gens`, sorted by ascending `a`.
///
/// For coprime generators consecutive entries differ by `(+q, -p)`. `n = 0`
/// yields the single empty sum `(0, 0)`; values below both generators yield
/// nothing. Works for non-coprime pairs too (empty unless `gcd(p, q) | n`).
pub fn enumerate_decompositions(n: u64, gens: GeneratorPair) -> Result<Vec<Decomposition>> {
    let g = gcd_conv(gens.p, gens.q);
    if !n.is_multiple_of(g) {
        return Ok(Vec::new());
    }
    let (rp, rq, rn) = (gens.p / g, gens.q / g, n / g);
    let Some((a0, b0)) = first_decomposition(rn, rp, rq) else {
        return Ok(Vec::new());
    };
    let count = b0 / rp + 1;
    if count > MAX_ENUMERATED {
        return Err(Error::Capacity(format!(
            "{n} has {count} decompositions over {gens}; cap is {MAX_ENUMERATED}"
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    let (mut a, mut b) = (a0, b0);
    loop {
        out.push(Decomposition { a, b });
        if b < rp {
            break;
        }
        a += rq;
        b -= rp;
    }
    Ok(out)
}

/// Admissible decomposition of `n` with the smallest `a`, without
/// materializing the full list.
///
/// Equivalent to filtering [`enumerate_decompositions`] through the profile
/// but with two early exits: the walk starts at the first coefficient
/// `>= a_min`, and it stops as soon as `a` exceeds `a_max` or the linear
/// bound fails (as `a` grows, `b` shrinks while `alpha·a + beta` grows, so a
/// failed bound can never recover). With an `a_max` set the cost is
/// independent of `n`.
pub fn find_witness(n: u64, gens: GeneratorPair, profile: &ConstraintProfile) -> Option<Decomposition> {
    let g = gcd_conv(gens.p, gens.q);
    if !n.is_multiple_of(g) {
        return None;
    }
    let (rp, rq, rn) = (gens.p / g, gens.q / g, n / g);
    let (a0, b0) = first_decomposition(rn, rp, rq)?;
    let (mut a, mut b) = (a0, b0);
    if profile.a_min > a0 {
        // Jump directly to the first coefficient >= a_min.
        let steps = (profile.a_min - a0).div_ceil(rq) as u128;
        let drop = steps * rp as u128;
        if drop > b0 as u128 {
            return None;
        }
        a = a0 + (steps as u64) * rq;
        b = b0 - drop as u64;
    }
    loop {
        if let Some(a_max) = profile.a_max {
            if a > a_max {
                return None;
            }
        }
        if (b as i128) < profile.alpha as i128 * a as i128 + profile.beta as i128 {
            return None;
        }
        if !profile.require_coprime || gcd_conv(a, b) == 1 {
            return Some(Decomposition { a, b });
        }
        if b < rp {
            return None;
        }
        a += rq;
        b -= rp;
    }
}

/// Ground-truth membership of `n` under the profile.
///
/// Member verdicts carry the admissible decomposition with the smallest `a`
/// (which is unique: `b` is determined by `a`). Non-member verdicts carry
/// every decomposition of `n` together with its first violated constraint.
pub fn is_member(n: u64, gens: GeneratorPair, profile: &ConstraintProfile) -> Result<MembershipResult> {
    let decompositions = enumerate_decompositions(n, gens)?;
    let mut rejected = Vec::new();
    for d in decompositions {
        match profile.check(d) {
            Ok(()) => {
                return Ok(MembershipResult {
                    n,
                    status: Membership::Member,
                    witness: Some(d),
                    rejected: Vec::new(),
                });
            }
            Err(violation) => rejected.push((d, violation)),
        }
    }
    Ok(MembershipResult {
        n,
        status: Membership::NonMember,
        witness: None,
        rejected,
    })
}

/// Renders every decomposition of `n` with a per-constraint annotation.
pub fn explain(n: u64, gens: GeneratorPair, profile: &ConstraintProfile) -> Result<String> {
    use std::fmt::Write as _;

    let decompositions = enumerate_decompositions(n, gens)?;
    let mut out = String::new();
    if decompositions.is_empty() {
        writeln!(out, "{n} = {}a + {}b: no decompositions", gens.p, gens.q).unwrap();
        writeln!(out, "verdict: NonMember").unwrap();
        return Ok(out);
    }
    writeln!(
        out,
        "{n} = {}a + {}b: {} decomposition(s), profile {profile}",
        gens.p,
        gens.q,
        decompositions.len()
    )
    .unwrap();
    let mut member = false;
    for d in decompositions {
        let range = if d.a < profile.a_min {
            format!("FAIL (a={} < {})", d.a, profile.a_min)
        } else if profile.a_max.is_some_and(|m| d.a > m) {
            format!("FAIL (a={} > {})", d.a, profile.a_max.unwrap())
        } else {
            "ok".to_string()
        };
        let required = profile.alpha as i128 * d.a as i128 + profile.beta as i128;
        let bound = if (d.b as i128) < required {
            format!("FAIL ({} < {required})", d.b)
        } else {
            "ok".to_string()
        };
        let coprime = if profile.require_coprime {
            let g = gcd_conv(d.a, d.b);
            if g == 1 {
                "ok".to_string()
            } else {
                format!("FAIL (gcd={g})")
            }
        } else {
            "waived".to_string()
        };
        let pass = profile.satisfies(d);
        member |= pass;
        writeln!(
            out,
            "  a={:<6} b={:<6} range {range:<18} bound {bound:<22} coprime {coprime:<12} {}",
            d.a,
            d.b,
            if pass { "PASS" } else { "reject" }
        )
        .unwrap();
    }
    writeln!(out, "verdict: {}", if member { "Member" } else { "NonMember" }).unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u64, b: u64) -> Decomposition {
        Decomposition { a, b }
    }

    fn default_gens() -> GeneratorPair {
        GeneratorPair::default()
    }

    #[test]
    fn generator_pair_validation() {
        assert!(GeneratorPair::new(10, 11).is_ok());
        assert!(matches!(GeneratorPair::new(0, 11), Err(Error::InvalidGenerators(_))));
        assert!(matches!(GeneratorPair::new(7, 7), Err(Error::InvalidGenerators(_))));
        assert!(GeneratorPair::new(10, 11).unwrap().is_coprime());
        assert!(!GeneratorPair::new(4, 6).unwrap().is_coprime());
    }

    #[test]
    fn profile_validation() {
        let mut profile = ConstraintProfile::default();
        profile.a_max = Some(3);
        profile.a_min = 5;
        assert!(matches!(profile.validate(), Err(Error::InvalidProfile(_))));
        profile.a_min = 3;
        assert!(profile.validate().is_ok());
    }

    #[test]
    fn enumerate_known_lists() {
        // 473 = 11*43; five decompositions stepping (+11, -10).
        let list = enumerate_decompositions(473, default_gens()).unwrap();
        let expected = [(0, 43), (11, 33), (22, 23), (33, 13), (44, 3)];
        assert_eq!(list, expected.map(|(a, b)| d(a, b)));

        // 89 is the classical Frobenius number of (10, 11).
        assert!(enumerate_decompositions(89, default_gens()).unwrap().is_empty());

        // Empty sum.
        assert_eq!(enumerate_decompositions(0, default_gens()).unwrap(), vec![d(0, 0)]);
    }

    #[test]
    fn enumerate_non_coprime_generators() {
        let gens = GeneratorPair::new(4, 6).unwrap();
        assert!(enumerate_decompositions(7, gens).unwrap().is_empty());
        let list = enumerate_decompositions(24, gens).unwrap();
        assert_eq!(list, vec![d(0, 4), d(3, 2), d(6, 0)]);
    }

    #[test]
    fn enumerate_sorted_and_exact() {
        for n in 0..2000u64 {
            let list = enumerate_decompositions(n, default_gens()).unwrap();
            for w in list.windows(2) {
                assert!(w[0].a < w[1].a);
                assert_eq!(w[1].a - w[0].a, 11);
                assert_eq!(w[0].b - w[1].b, 10);
            }
            for dec in &list {
                assert_eq!(dec.value(default_gens()).unwrap(), n);
            }
        }
    }

    #[test]
    fn check_follows_fixed_order() {
        let profile = ConstraintProfile::default();
        assert!(profile.check(d(10, 27)).is_ok());
        assert_eq!(
            profile.check(d(17, 9)),
            Err(ConstraintViolation::LinearBound { b: 9, required: 35 })
        );
        assert_eq!(
            profile.check(d(0, 43)),
            Err(ConstraintViolation::NotCoprime { gcd: 43 })
        );
        let bounded = ConstraintProfile {
            a_min: 2,
            a_max: Some(5),
            ..ConstraintProfile::default()
        };
        // Range is reported before the (also violated) linear bound.
        assert_eq!(
            bounded.check(d(1, 1)),
            Err(ConstraintViolation::BelowMinCoefficient { a: 1, a_min: 2 })
        );
        assert_eq!(
            bounded.check(d(6, 1)),
            Err(ConstraintViolation::AboveMaxCoefficient { a: 6, a_max: 5 })
        );
    }

    #[test]
    fn check_negative_beta() {
        let profile = ConstraintProfile {
            alpha: 0,
            beta: -5,
            require_coprime: false,
            ..ConstraintProfile::default()
        };
        assert!(profile.check(d(4, 0)).is_ok());
    }

    #[test]
    fn member_known_values() {
        let gens = default_gens();
        let profile = ConstraintProfile::default();

        let r = is_member(397, gens, &profile).unwrap();
        assert!(r.is_member());
        assert_eq!(r.witness, Some(d(10, 27)));

        let r = is_member(277, gens, &profile).unwrap();
        assert!(!r.is_member());
        assert_eq!(
            r.rejected.iter().map(|(dec, _)| *dec).collect::<Vec<_>>(),
            vec![d(9, 17), d(20, 7)]
        );

        assert!(!is_member(1674, gens, &profile).unwrap().is_member());
        assert!(!is_member(0, gens, &profile).unwrap().is_member());
        // The generator q itself enters through (0, 1).
        let r = is_member(11, gens, &profile).unwrap();
        assert_eq!(r.witness, Some(d(0, 1)));
    }

    #[test]
    fn witness_is_smallest_a() {
        let gens = default_gens();
        let profile = ConstraintProfile::default();
        for n in 0..3000u64 {
            let fast = find_witness(n, gens, &profile);
            let full: Option<Decomposition> = enumerate_decompositions(n, gens)
                .unwrap()
                .into_iter()
                .find(|&dec| profile.satisfies(dec));
            assert_eq!(fast, full, "n={n}");
            assert_eq!(is_member(n, gens, &profile).unwrap().witness, fast, "n={n}");
        }
    }

    #[test]
    fn find_witness_respects_a_bounds() {
        let gens = default_gens();
        let bounded = ConstraintProfile {
            a_min: 1,
            a_max: Some(10),
            ..ConstraintProfile::default()
        };
        for n in 0..5000u64 {
            let fast = find_witness(n, gens, &bounded);
            let full = enumerate_decompositions(n, gens)
                .unwrap()
                .into_iter()
                .find(|&dec| bounded.satisfies(dec));
            assert_eq!(fast, full, "n={n}");
        }
        // 2^14 has exactly one in-range decomposition and it is non-coprime.
        assert_eq!(find_witness(1 << 14, gens, &bounded), None);
    }

    #[test]
    fn explain_annotates_each_decomposition() {
        let gens = default_gens();
        let profile = ConstraintProfile::default();

        let text = explain(426, gens, &profile).unwrap();
        for a in [3, 14, 25, 36] {
            assert!(text.contains(&format!("a={a}")), "missing row a={a}:\n{text}");
        }
        assert!(text.contains("verdict: NonMember"));

        let text = explain(1, gens, &profile).unwrap();
        assert!(text.contains("no decompositions"));

        let text = explain(1675, gens, &profile).unwrap();
        assert!(text.contains("PASS"));
        assert!(text.contains("verdict: Member"));
    }

    #[test]
    fn decomposition_value_overflow_is_reported() {
        let gens = default_gens();
        let huge = d(u64::MAX / 5, 1);
        assert!(matches!(huge.value(gens), Err(Error::Overflow(_))));
    }
}
