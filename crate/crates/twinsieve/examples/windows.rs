//! Count twin pairs in each incremental window [(6n+5)^2, (6(n+1)+5)^2)
//! and check the at-least-3 threshold.
//!
//! Run with: cargo run --example windows

use twinsieve::verifier::{window_reports, WINDOW_THRESHOLD};

fn main() -> twinsieve::Result<()> {
    let reports = window_reports(50, WINDOW_THRESHOLD)?;
    twinsieve::report::render_windows(
        &reports,
        twinsieve::report::OutputFormat::Text,
        &mut std::io::stdout(),
    )?;
    let min = reports.iter().map(|w| w.twin_count).min().unwrap();
    println!("minimum twins per window: {min}");
    Ok(())
}
