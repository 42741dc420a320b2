//! Membership, gap scanning, and certified witnesses for two-generator
//! numerical semigroups with restricted coefficients.
//!
//! The object of study is the set of values `p·a + q·b` whose coefficient
//! pair `(a, b)` passes a [`ConstraintProfile`] — by default `gcd(a, b) = 1`
//! and `b >= 2a + 1` over the generators `(10, 11)`. Unlike the ambient
//! semigroup, the restricted set is not closed under addition (43 is a
//! member, 86 is not), yet its complement is finite: the largest non-member
//! of the default instance is 1674.
//!
//! The crate provides:
//!
//! * [`membership`] — exact decomposition enumeration and the ground-truth
//!   membership predicate, with witnesses and exhaustive rejection evidence;
//! * [`sieve`] — bounded parallel scanning, gap enumeration, residue-class
//!   maxima, and the empirical power probe;
//! * [`table`] — interval tables in Markdown, CSV, and JSON;
//! * [`certify`] — constructive fast-path rules for the default instance,
//!   every certificate re-verified before it is returned;
//! * [`verify`] — the data-driven checklist that replays all published
//!   values for the default instance;
//! * [`cache`] — an optional binary cache for scan bitmaps.
//!
//! ```
//! use semigap::{is_member, ConstraintProfile, GeneratorPair};
//!
//! let gens = GeneratorPair::default();
//! let profile = ConstraintProfile::default();
//! let result = is_member(397, gens, &profile).unwrap();
//! assert!(result.is_member());
//! assert_eq!(result.witness.unwrap().a, 10);
//! ```
//!
//! All operations are pure functions of their inputs and safe to call from
//! any number of threads.

pub mod arith;
pub mod cache;
pub mod certify;
mod error;
pub mod membership;
pub mod sieve;
pub mod table;
pub mod verify;

pub use arith::gcd_conv;
pub use certify::{certify, frobenius_classic, Certificate, Rule, Verdict};
pub use error::{Error, Result};
pub use membership::{
    enumerate_decompositions, explain, find_witness, is_member, ConstraintProfile,
    ConstraintViolation, Decomposition, GeneratorPair, Membership, MembershipResult,
};
pub use sieve::{class_of, probe_powers, scan, scan_with, ClassLabel, ScanOptions, ScanReport};
