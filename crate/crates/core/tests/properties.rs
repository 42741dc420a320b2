//! Property and oracle tests. The oracles here are deliberately naive and
//! local to this file: double loops and trial arithmetic, sharing nothing
//! with the modular-arithmetic paths they check.

use std::sync::OnceLock;

use proptest::prelude::*;

use semigap::sieve::{scan, scan_with, ScanOptions};
use semigap::table::{build_rows, parse_markdown_row, render_markdown};
use semigap::{
    enumerate_decompositions, find_witness, is_member, ConstraintProfile, GeneratorPair,
    ScanReport,
};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reference enumeration: walk every first coefficient, keep exact divisions.
fn oracle_decompositions(n: u64, p: u64, q: u64) -> Vec<(u64, u64)> {
    (0..=n / p)
        .filter_map(|a| {
            let rest = n - p * a;
            rest.is_multiple_of(q).then_some((a, rest / q))
        })
        .collect()
}

/// Reference membership for the default profile shape.
fn oracle_member(n: u64, profile: &ConstraintProfile) -> bool {
    oracle_decompositions(n, 10, 11).into_iter().any(|(a, b)| {
        a >= profile.a_min
            && profile.a_max.is_none_or(|m| a <= m)
            && (b as i128) >= profile.alpha as i128 * a as i128 + profile.beta as i128
            && (!profile.require_coprime || gcd(a, b) == 1)
    })
}

fn report_2000() -> &'static ScanReport {
    static REPORT: OnceLock<ScanReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        scan(GeneratorPair::default(), &ConstraintProfile::default(), 2000).unwrap()
    })
}

#[test]
fn soundness_exhaustive_to_1e5() {
    let gens = GeneratorPair::default();
    for n in 0..=100_000u64 {
        for d in enumerate_decompositions(n, gens).unwrap() {
            assert_eq!(10 * d.a + 11 * d.b, n, "bad decomposition for {n}");
        }
    }
}

#[test]
fn membership_equivalence_exhaustive_to_1e5() {
    let gens = GeneratorPair::default();
    let profile = ConstraintProfile::default();
    for n in 0..=100_000u64 {
        let expected = oracle_member(n, &profile);
        assert_eq!(find_witness(n, gens, &profile).is_some(), expected, "n={n}");
    }
}

#[test]
fn completeness_exhaustive_to_1e4() {
    let gens = GeneratorPair::default();
    for n in 0..=10_000u64 {
        let ours: Vec<(u64, u64)> = enumerate_decompositions(n, gens)
            .unwrap()
            .into_iter()
            .map(|d| (d.a, d.b))
            .collect();
        assert_eq!(ours, oracle_decompositions(n, 10, 11), "n={n}");
    }
}

proptest! {
    #[test]
    fn completeness_random_generators(n in 0u64..5_000, p in 1u64..40, q in 1u64..40) {
        prop_assume!(p != q);
        let gens = GeneratorPair::new(p, q).unwrap();
        let ours: Vec<(u64, u64)> = enumerate_decompositions(n, gens)
            .unwrap()
            .into_iter()
            .map(|d| (d.a, d.b))
            .collect();
        prop_assert_eq!(ours, oracle_decompositions(n, p, q));
    }

    #[test]
    fn count_bound_random(n in 0u64..1_000_000) {
        let len = enumerate_decompositions(n, GeneratorPair::default()).unwrap().len() as u64;
        prop_assert!(len == n / 110 || len == n / 110 + 1, "n={n} len={len}");
    }

    #[test]
    fn membership_matches_oracle_random_profiles(
        n in 0u64..20_000,
        a_min in 0u64..5,
        a_max in proptest::option::of(4u64..60),
        alpha in 0u64..4,
        beta in -6i64..10,
        require_coprime in any::<bool>(),
    ) {
        prop_assume!(a_max.is_none_or(|m| m >= a_min));
        let profile = ConstraintProfile { a_min, a_max, alpha, beta, require_coprime };
        let gens = GeneratorPair::default();
        prop_assert_eq!(
            find_witness(n, gens, &profile).is_some(),
            oracle_member(n, &profile)
        );
        prop_assert_eq!(
            is_member(n, gens, &profile).unwrap().is_member(),
            oracle_member(n, &profile)
        );
    }

    #[test]
    fn witness_minimality_random(n in 0u64..50_000) {
        let gens = GeneratorPair::default();
        let profile = ConstraintProfile::default();
        let via_filter = enumerate_decompositions(n, gens)
            .unwrap()
            .into_iter()
            .find(|&d| profile.satisfies(d));
        prop_assert_eq!(is_member(n, gens, &profile).unwrap().witness, via_filter);
    }

    #[test]
    fn table_round_trip_random_interval(lo in 1u64..1990, len in 0u64..120) {
        let report = report_2000();
        let hi = (lo + len).min(2000);
        let rows = build_rows(report, &[(lo, hi)]).unwrap();
        let rendered = render_markdown(&rows);
        let parsed = parse_markdown_row(rendered.lines().nth(2).unwrap()).unwrap();
        let expected: Vec<u64> = (lo..=hi)
            .filter(|&n| report.is_member(n).unwrap())
            .collect();
        prop_assert_eq!(parsed.members(), expected);
    }
}

proptest! {
    // criterion 10 pins one thousand random relaxation pairs
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn relaxation_monotonicity_random(
        n in 0u64..8_000,
        a_min in 0u64..5,
        a_max in proptest::option::of(5u64..50),
        alpha in 0u64..4,
        beta in -4i64..8,
        require_coprime in any::<bool>(),
        relax_a_min in 0u64..3,
        drop_a_max in any::<bool>(),
        widen_a_max in 0u64..12,
        relax_alpha in 0u64..2,
        relax_beta in 0i64..5,
        drop_coprime in any::<bool>(),
    ) {
        let stricter = ConstraintProfile { a_min, a_max, alpha, beta, require_coprime };
        let weaker = ConstraintProfile {
            a_min: a_min.saturating_sub(relax_a_min),
            a_max: match a_max {
                None => None,
                Some(_) if drop_a_max => None,
                Some(m) => Some(m + widen_a_max),
            },
            alpha: alpha.saturating_sub(relax_alpha),
            beta: beta - relax_beta,
            require_coprime: require_coprime && !drop_coprime,
        };
        let gens = GeneratorPair::default();
        if find_witness(n, gens, &stricter).is_some() {
            prop_assert!(
                find_witness(n, gens, &weaker).is_some(),
                "member under {stricter:?} but not under weaker {weaker:?}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn scan_determinism_random_chunking(chunk_len in 1u64..5000, jobs in 1usize..9) {
        let gens = GeneratorPair::default();
        let profile = ConstraintProfile::default();
        static BASELINE: OnceLock<ScanReport> = OnceLock::new();
        let baseline = BASELINE.get_or_init(|| {
            scan_with(gens, &profile, 1500, &ScanOptions { jobs: Some(1), chunk_len: 1 }).unwrap()
        });
        let report =
            scan_with(gens, &profile, 1500, &ScanOptions { jobs: Some(jobs), chunk_len }).unwrap();
        prop_assert_eq!(&report, baseline);
    }
}
