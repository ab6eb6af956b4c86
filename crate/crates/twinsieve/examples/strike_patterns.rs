//! For small primes p, show the two residues of the pair index at which
//! p strikes a pair member, and verify the 2-of-p regularity directly.
//!
//! Run with: cargo run --example strike_patterns

use twinsieve::atp::strike_pattern;

fn main() -> twinsieve::Result<()> {
    for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
        let s = strike_pattern(p)?;
        let struck: Vec<u64> = (1..=p)
            .filter(|&n| (6 * n - 1) % p == 0 || (6 * n + 1) % p == 0)
            .collect();
        println!(
            "p={p:>2}: residue_a={:>2} residue_b={:>2}  struck indices in one block: {struck:?}",
            s.residue_a, s.residue_b
        );
        assert_eq!(struck.len(), 2);
    }
    Ok(())
}
