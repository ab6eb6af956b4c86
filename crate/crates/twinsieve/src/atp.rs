//! The ATP-pair model: indexed pairs `(6n-1, 6n+1)`, their four-way
//! primality classification, closed-form group counts, and the per-prime
//! strike patterns behind the 2/x exclusion regularity.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sieve;

/// The pair `(6n-1, 6n+1)` at index n. Neither member is divisible by
/// 2 or 3; the members may or may not be prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtpPair {
    pub index: u64,
    pub a: u64,
    pub b: u64,
}

pub fn atp_pair(n: u64) -> Result<AtpPair> {
    if n < 1 {
        return Err(Error::Domain("ATP pair index must be >= 1".into()));
    }
    Ok(AtpPair { index: n, a: 6 * n - 1, b: 6 * n + 1 })
}

/// Which members of an ATP pair are prime. Exactly one case holds for
/// every pair; `CaseI` pairs are exactly the twin prime pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// Both members prime (a twin prime pair).
    CaseI,
    /// First member prime, second composite.
    CaseII,
    /// First member composite, second prime.
    CaseIII,
    /// Both members composite.
    CaseIV,
}

impl CaseKind {
    pub const ALL: [CaseKind; 4] =
        [CaseKind::CaseI, CaseKind::CaseII, CaseKind::CaseIII, CaseKind::CaseIV];
}

/// Classify a pair given any primality oracle for its members.
pub fn classify(pair: AtpPair, is_prime: impl Fn(u64) -> bool) -> CaseKind {
    match (is_prime(pair.a), is_prime(pair.b)) {
        (true, true) => CaseKind::CaseI,
        (true, false) => CaseKind::CaseII,
        (false, true) => CaseKind::CaseIII,
        (false, false) => CaseKind::CaseIV,
    }
}

/// Number of ATP pairs whose members lie below `(6n+5)^2`:
/// `((6n+5)^2 - 1)/6 - 1`, always an exact integer (equals 6n^2+10n+3).
pub fn atpg_count(n: u64) -> u64 {
    let m = 6 * n + 5;
    (m * m - 1) / 6 - 1
}

/// Exact growth ratio `atpg_count(n) / atpg_count(n-1)`, in lowest terms.
/// Equals `(6n^2+10n+3)/(6n^2-2n-1)`.
pub fn atpg_ratio(n: u64) -> Result<ExactRatio> {
    if n < 1 {
        return Err(Error::Domain("atpg_ratio requires n >= 1".into()));
    }
    Ok(BigRational::new(
        BigInt::from(atpg_count(n)),
        BigInt::from(atpg_count(n - 1)),
    ))
}

/// For a prime p >= 5, the two residues of n mod p at which p divides a
/// pair member: `p | 6n-1` iff `n ≡ residue_a`, `p | 6n+1` iff
/// `n ≡ residue_b`. Exactly 2 of any p consecutive indices are struck.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrikePattern {
    pub p: u64,
    pub residue_a: u64,
    pub residue_b: u64,
}

pub fn strike_pattern(p: u64) -> Result<StrikePattern> {
    if p < 5 || !sieve::is_prime(p) {
        return Err(Error::Domain(format!(
            "strike pattern requires a prime >= 5, got {p}"
        )));
    }
    // 6*residue_a ≡ 1 (mod p); gcd(6, p) = 1 so the inverse exists.
    let inv6 = mod_inverse(6 % p, p);
    let residue_a = inv6;
    let residue_b = p - inv6;
    Ok(StrikePattern { p, residue_a, residue_b })
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // Extended Euclid on (a, m), m prime here.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}
