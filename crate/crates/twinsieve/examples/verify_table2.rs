//! Recompute every cell of the golden reference table and report
//! mismatches (there should be none).
//!
//! Run with: cargo run --example verify_table2

fn main() -> twinsieve::Result<()> {
    let mismatches = twinsieve::verifier::reproduce_table2(50)?;
    if mismatches.is_empty() {
        println!("all 50 rows match the golden fixture");
    } else {
        for m in &mismatches {
            println!("n={} {}: expected {}, computed {}", m.n, m.column, m.expected, m.actual);
        }
    }
    Ok(())
}
