//! Demonstrate the exact product identities behind the estimator: the
//! group-count product anchored at 3, the telescoped retention product,
//! the expanded cubic form, and the 3(n+1) simplification.
//!
//! Run with: cargo run --example product_identities

use num_bigint::BigInt;
use twinsieve::atp::{atpg_count, atpg_ratio};
use twinsieve::estimator::{tpe_exact, tpe_expanded, tpe_s, tpr_ab};
use twinsieve::ratio::ExactRatio;

fn main() -> twinsieve::Result<()> {
    let n = 20u64;

    let mut acc = ExactRatio::from(BigInt::from(3));
    for i in 1..=n {
        acc *= atpg_ratio(i)?;
    }
    println!("3 * prod ratios        = {acc} (atpg_count({n}) = {})", atpg_count(n));

    let tpr = tpr_ab(n)?;
    println!("tpr({n})                = {tpr}");

    let exact = tpe_exact(n)?;
    let expanded = tpe_expanded(n)?;
    println!("atpg * tpr             = {exact}");
    println!("expanded cubic product = {expanded}");
    assert_eq!(exact, expanded);

    println!("simplified bound       = {} (3n+3)", tpe_s(n));
    Ok(())
}
