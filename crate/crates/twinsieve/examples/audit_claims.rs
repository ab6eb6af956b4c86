//! Audit the model's empirical claims up to n = 50: estimate vs actual
//! ordering, window thresholds, and the Case I-IV frequency histogram.
//!
//! Run with: cargo run --example audit_claims

fn main() -> twinsieve::Result<()> {
    let audit = twinsieve::verifier::audit_claims(50)?;
    twinsieve::report::render_audit(
        &audit,
        twinsieve::report::OutputFormat::Text,
        &mut std::io::stdout(),
    )?;
    Ok(())
}
