//! Small exact-integer helpers shared across the crate.

/// Greatest common divisor with the conventions `gcd(0, y) = y`,
/// `gcd(x, 0) = x`, and `gcd(0, 0) = 0`.
///
/// The zero conventions matter: the coefficient pair `(0, b)` is coprime
/// exactly when `b = 1`, which is what makes the generator `q` itself a
/// member under the default profile while excluding all other `a = 0`
/// decompositions.
pub fn gcd_conv(x: u64, y: u64) -> u64 {
    let (mut a, mut b) = (x, y);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Multiplicative inverse of `a` modulo `m` (`m >= 1`), or `None` when
/// `gcd(a, m) != 1`. For `m = 1` every residue is 0 and the inverse is 0.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
    let (mut old_r, mut r) = ((a % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic trial-division primality test. Adequate for the desk-scale
/// inputs this crate works with (the certificate rules only ever test values
/// that fit comfortably in 64 bits).
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Ascending primes in `[lo, hi]` via a plain sieve.
pub(crate) fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|&(i, &b)| b && i as u64 >= lo)
        .map(|(i, _)| i as u64)
        .collect()
}
