//! Print the full measurement table (rows 1..=50) as text.
//!
//! Run with: cargo run --example table

fn main() -> twinsieve::Result<()> {
    let rows = twinsieve::verifier::table_rows(50)?;
    twinsieve::report::render_table(&rows, twinsieve::report::OutputFormat::Text, &mut std::io::stdout())?;
    Ok(())
}
