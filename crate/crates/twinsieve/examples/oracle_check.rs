//! Cross-check the segmented sieve's twin counts against the naive
//! trial-division oracle at each range boundary.
//!
//! Run with: cargo run --example oracle_check

use twinsieve::sieve::{count_twins_below_oracle, twin_count_in};
use twinsieve::verifier::range_limit;

fn main() -> twinsieve::Result<()> {
    for n in 1..=20u64 {
        let limit = range_limit(n);
        let sieved = twin_count_in(5, limit)?;
        let oracle = count_twins_below_oracle(limit);
        println!("limit {limit:>6}: sieve {sieved:>4}, oracle {oracle:>4}");
        assert_eq!(sieved, oracle);
    }
    Ok(())
}
