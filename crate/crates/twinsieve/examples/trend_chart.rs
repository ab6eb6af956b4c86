//! Write the three-series trend chart (actual counts, estimate,
//! simplified bound) to trend.svg.
//!
//! Run with: cargo run --example trend_chart

fn main() -> twinsieve::Result<()> {
    let rows = twinsieve::verifier::table_rows(50)?;
    let svg = twinsieve::svg::render_trend(&rows);
    std::fs::write("trend.svg", svg)?;
    println!("wrote trend.svg");
    Ok(())
}
