//! Segmented sieve of Eratosthenes over half-open ranges, twin-pair
//! enumeration, and a deliberately naive trial-division oracle used to
//! cross-check the sieve.
//!
//! The sieve stores one bit per odd integer; even numbers are answered
//! arithmetically. Segments are pure functions of their inputs, so
//! disjoint segments can be sieved in parallel and merged in ascending
//! order with byte-identical results.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default number of odd slots per segment (bitset stays cache-resident).
pub const DEFAULT_SEGMENT_SIZE: usize = 1 << 20;

/// Integer square root, exact for all u64.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

/// Bit-packed primality answers for the half-open range `[lo, hi)`.
///
/// One bit per odd integer; a set bit means prime. Even numbers other
/// than 2 are composite by arithmetic, not by table lookup.
#[derive(Debug, Clone)]
pub struct PrimalityMap {
    lo: u64,
    hi: u64,
    first_odd: u64,
    words: Vec<u64>,
}

impl PrimalityMap {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    fn bit_index(&self, x: u64) -> usize {
        debug_assert!(x % 2 == 1);
        ((x - self.first_odd) / 2) as usize
    }

    fn bit(&self, x: u64) -> bool {
        let i = self.bit_index(x);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn clear(&mut self, x: u64) {
        let i = self.bit_index(x);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    /// True iff `x` is prime. `x` must lie in `[lo, hi)`.
    pub fn query(&self, x: u64) -> bool {
        assert!(
            x >= self.lo && x < self.hi,
            "query {} outside segment [{}, {})",
            x,
            self.lo,
            self.hi
        );
        if x.is_multiple_of(2) {
            return x == 2;
        }
        if x == 1 {
            return false;
        }
        self.bit(x)
    }

    /// All primes in the segment, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut out = Vec::new();
        if self.lo <= 2 && 2 < self.hi {
            out.push(2);
        }
        let mut x = self.first_odd.max(3);
        while x < self.hi {
            if self.bit(x) {
                out.push(x);
            }
            x += 2;
        }
        out
    }
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Result<Vec<u64>> {
    if limit < 2 {
        return Err(Error::Domain(format!("primes_up_to requires limit >= 2, got {limit}")));
    }
    // Simple odd-only sieve; limit stays small (base primes <= sqrt(hi)).
    let n_odds = ((limit - 1) / 2) as usize; // odds 3, 5, ..., <= limit
    let mut composite = vec![false; n_odds + 1];
    let mut primes = vec![2];
    let mut x = 3u64;
    while x <= limit {
        let i = ((x - 3) / 2) as usize;
        if !composite[i] {
            primes.push(x);
            let mut m = x * x;
            while m <= limit {
                composite[((m - 3) / 2) as usize] = true;
                m += 2 * x;
            }
        }
        x += 2;
    }
    Ok(primes)
}

/// Sieve the half-open segment `[lo, hi)` using precomputed base primes.
///
/// `base_primes` must contain every prime up to `floor(sqrt(hi - 1))`;
/// a missing prime in that range is a precondition error.
pub fn sieve_segment(lo: u64, hi: u64, base_primes: &[u64]) -> Result<PrimalityMap> {
    if lo < 2 || lo >= hi {
        return Err(Error::Domain(format!(
            "sieve_segment requires 2 <= lo < hi, got [{lo}, {hi})"
        )));
    }
    let bound = isqrt(hi - 1);
    check_base_primes(base_primes, bound)?;

    let first_odd = if lo % 2 == 1 { lo } else { lo + 1 };
    let n_bits = if first_odd >= hi { 0 } else { ((hi - first_odd - 1) / 2 + 1) as usize };
    let mut map = PrimalityMap {
        lo,
        hi,
        first_odd,
        words: vec![u64::MAX; n_bits.div_ceil(64)],
    };

    for &p in base_primes {
        if p < 3 {
            continue; // evens are not stored
        }
        if p > bound {
            break;
        }
        // First odd multiple of p in [max(p^2, lo), hi).
        let mut m = (p * p).max(lo.div_ceil(p) * p);
        if m % 2 == 0 {
            m += p;
        }
        while m < hi {
            map.clear(m);
            m += 2 * p;
        }
    }
    Ok(map)
}

/// Verify `base_primes` covers every prime up to `bound`.
fn check_base_primes(base_primes: &[u64], bound: u64) -> Result<()> {
    if bound < 2 {
        return Ok(());
    }
    let p_max = base_primes.iter().copied().max().unwrap_or(0);
    // Any prime in (p_max, bound] means the base set is short.
    let mut q = p_max.max(1) + 1;
    while q <= bound {
        let mut prime = q >= 2;
        let mut d = 2;
        while d * d <= q {
            if q % d == 0 {
                prime = false;
                break;
            }
            d += 1;
        }
        if prime {
            return Err(Error::Precondition(format!(
                "base primes must cover all primes <= {bound}; missing {q}"
            )));
        }
        q += 1;
    }
    Ok(())
}

/// Convenience single-number primality check backed by the sieve.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x < 4 {
        return true;
    }
    if x.is_multiple_of(2) {
        return false;
    }
    let base = primes_up_to(isqrt(x).max(2)).expect("limit >= 2");
    sieve_segment(x, x + 1, &base)
        .expect("valid segment")
        .query(x)
}

/// A confirmed twin prime pair `(6k-1, 6k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinPairIndex {
    pub k: u64,
    pub a: u64,
    pub b: u64,
}

impl TwinPairIndex {
    fn new(k: u64) -> Self {
        TwinPairIndex { k, a: 6 * k - 1, b: 6 * k + 1 }
    }
}

fn twin_k_range(lo: u64, hi: u64) -> Result<Option<(u64, u64)>> {
    if lo < 5 {
        return Err(Error::Domain(format!(
            "twin enumeration requires lo >= 5 (smallest ATP member), got {lo}"
        )));
    }
    if lo >= hi {
        return Err(Error::Domain(format!("empty range [{lo}, {hi})")));
    }
    let k_min = (lo + 1).div_ceil(6).max(1);
    if hi < 8 {
        return Ok(None);
    }
    let k_max = (hi - 2) / 6;
    if k_min > k_max {
        return Ok(None);
    }
    Ok(Some((k_min, k_max)))
}

/// Sieve the pair indices `[ka, kb]` and return the twin k's, ascending.
fn twin_ks_chunk(ka: u64, kb: u64, base: &[u64]) -> Vec<u64> {
    let seg_lo = 6 * ka - 1;
    let seg_hi = 6 * kb + 2;
    let map = sieve_segment(seg_lo, seg_hi, base).expect("chunk segment is valid");
    (ka..=kb)
        .filter(|&k| map.query(6 * k - 1) && map.query(6 * k + 1))
        .collect()
}

/// Chunked k-ranges to sieve, plus the shared base primes.
type TwinChunks = (Vec<(u64, u64)>, Vec<u64>);

fn twin_chunks(lo: u64, hi: u64, segment_size: usize) -> Result<Option<TwinChunks>> {
    let Some((k_min, k_max)) = twin_k_range(lo, hi)? else {
        return Ok(None);
    };
    let base = primes_up_to(isqrt(hi - 1).max(2))?;
    // Each pair index spans 3 odd slots.
    let chunk_k = (segment_size as u64 / 3).max(1);
    let mut chunks = Vec::new();
    let mut ka = k_min;
    while ka <= k_max {
        let kb = (ka + chunk_k - 1).min(k_max);
        chunks.push((ka, kb));
        ka = kb + 1;
    }
    Ok(Some((chunks, base)))
}

/// All twin prime pairs `(6k-1, 6k+1)` with both members in `[lo, hi)`,
/// ascending by k. Segments are sieved in parallel; the merge order is
/// fixed, so output is independent of the worker schedule.
pub fn twin_pairs_in(lo: u64, hi: u64) -> Result<Vec<TwinPairIndex>> {
    twin_pairs_in_with(lo, hi, DEFAULT_SEGMENT_SIZE)
}

pub fn twin_pairs_in_with(lo: u64, hi: u64, segment_size: usize) -> Result<Vec<TwinPairIndex>> {
    let Some((chunks, base)) = twin_chunks(lo, hi, segment_size)? else {
        return Ok(Vec::new());
    };
    let ks: Vec<Vec<u64>> = chunks
        .par_iter()
        .map(|&(ka, kb)| twin_ks_chunk(ka, kb, &base))
        .collect();
    Ok(ks.into_iter().flatten().map(TwinPairIndex::new).collect())
}

/// Count of twin pairs in `[lo, hi)` without materializing them.
pub fn twin_count_in(lo: u64, hi: u64) -> Result<u64> {
    twin_count_in_with(lo, hi, DEFAULT_SEGMENT_SIZE)
}

pub fn twin_count_in_with(lo: u64, hi: u64, segment_size: usize) -> Result<u64> {
    let Some((chunks, base)) = twin_chunks(lo, hi, segment_size)? else {
        return Ok(0);
    };
    Ok(chunks
        .par_iter()
        .map(|&(ka, kb)| twin_ks_chunk(ka, kb, &base).len() as u64)
        .sum())
}

/// Trial-division primality, no shared code with the sieve.
fn trial_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Independent oracle: count twin pairs `(6k-1, 6k+1)` with `6k+1 < limit`
/// by trial division only.
pub fn count_twins_below_oracle(limit: u64) -> u64 {
    let mut count = 0;
    let mut k = 1;
    while 6 * k + 1 < limit {
        if trial_prime(6 * k - 1) && trial_prime(6 * k + 1) {
            count += 1;
        }
        k += 1;
    }
    count
}

/// Oracle twin count over an arbitrary range, trial division only.
pub fn count_twins_in_oracle(lo: u64, hi: u64) -> u64 {
    let mut count = 0;
    let mut k = 1;
    while 6 * k + 1 < hi {
        if 6 * k > lo && trial_prime(6 * k - 1) && trial_prime(6 * k + 1) {
            count += 1;
        }
        k += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_up_to_small() {
        assert_eq!(primes_up_to(10).unwrap(), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2).unwrap(), vec![2]);
    }

    #[test]
    fn primes_up_to_121() {
        let ps = primes_up_to(121).unwrap();
        assert_eq!(ps.len(), 30);
        assert_eq!(&ps[ps.len() - 2..], &[109, 113]);
    }

    #[test]
    fn primes_up_to_rejects_below_two() {
        assert!(primes_up_to(1).is_err());
    }

    #[test]
    fn segment_small() {
        let map = sieve_segment(2, 12, &[2, 3]).unwrap();
        assert_eq!(map.primes(), vec![2, 3, 5, 7, 11]);
    }

    #[test]
    fn segment_25_121() {
        let base = primes_up_to(10).unwrap();
        let map = sieve_segment(25, 121, &base).unwrap();
        assert_eq!(map.primes().len(), 21);
    }

    #[test]
    fn segment_121_289() {
        let base = primes_up_to(16).unwrap();
        let map = sieve_segment(121, 289, &base).unwrap();
        assert!(!map.query(121));
        assert!(map.query(127));
    }

    #[test]
    fn segment_insufficient_base_primes() {
        let err = sieve_segment(25, 121, &[2, 3]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("10"), "error should name the bound: {msg}");
    }

    #[test]
    fn is_prime_cases() {
        assert!(!is_prime(25));
        assert!(is_prime(23));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(0));
        assert!(is_prime(6 * 4 - 1));
        assert!(!is_prime(6 * 4 + 1));
    }

    #[test]
    fn twins_5_121() {
        let pairs = twin_pairs_in(5, 121).unwrap();
        let ks: Vec<u64> = pairs.iter().map(|p| p.k).collect();
        assert_eq!(ks, vec![1, 2, 3, 5, 7, 10, 12, 17, 18]);
    }

    #[test]
    fn twins_25_121() {
        let pairs = twin_pairs_in(25, 121).unwrap();
        let members: Vec<(u64, u64)> = pairs.iter().map(|p| (p.a, p.b)).collect();
        assert_eq!(
            members,
            vec![(29, 31), (41, 43), (59, 61), (71, 73), (101, 103), (107, 109)]
        );
    }

    #[test]
    fn twins_5_289() {
        assert_eq!(twin_pairs_in(5, 289).unwrap().len(), 18);
    }

    #[test]
    fn twins_reject_low_lo() {
        assert!(twin_pairs_in(4, 100).is_err());
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(count_twins_below_oracle(25), 3);
        assert_eq!(count_twins_below_oracle(121), 9);
    }

    #[test]
    fn mod6_residues() {
        let base = primes_up_to(40).unwrap();
        let map = sieve_segment(2, 1000, &base).unwrap();
        for p in map.primes() {
            if p > 3 {
                assert!(p % 6 == 1 || p % 6 == 5, "prime {p} has bad residue");
            }
        }
    }

    #[test]
    fn segment_independence() {
        let base = primes_up_to(32).unwrap();
        let whole = sieve_segment(5, 1000, &base).unwrap();
        let parts = [(5, 130), (130, 599), (599, 1000)];
        let mut merged = Vec::new();
        for (lo, hi) in parts {
            merged.extend(sieve_segment(lo, hi, &base).unwrap().primes());
        }
        assert_eq!(whole.primes(), merged);
    }
}
