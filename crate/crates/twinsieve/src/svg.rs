//! Standalone SVG trend chart: actual twin counts, the exact estimate,
//! and the simplified linear bound, as three polylines over n.

use std::fmt::Write as _;

use crate::verifier::EstimateRow;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 30.0;
const MARGIN_B: f64 = 50.0;

struct Series<'a> {
    label: &'a str,
    color: &'a str,
    values: Vec<u64>,
}

fn polyline(ns: &[u64], values: &[u64], n_max: u64, y_max: u64) -> String {
    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let mut points = String::new();
    for (&n, &v) in ns.iter().zip(values) {
        let x = MARGIN_L + (n - 1) as f64 / (n_max - 1) as f64 * plot_w;
        let y = MARGIN_T + plot_h - v as f64 / y_max as f64 * plot_h;
        let _ = write!(points, "{x:.1},{y:.1} ");
    }
    points.trim_end().to_string()
}

/// Render the trend chart for rows 1..=n_max. The plotted values are
/// exactly the table's tpa, tpe (display-rounded), and tpe_s columns.
pub fn render_trend(rows: &[EstimateRow]) -> String {
    assert!(rows.len() >= 2, "trend chart needs at least 2 points");
    let ns: Vec<u64> = rows.iter().map(|r| r.n).collect();
    let n_max = *ns.last().unwrap();
    let series = [
        Series { label: "TPA (actual)", color: "#1f77b4", values: rows.iter().map(|r| r.tpa).collect() },
        Series { label: "TPE (estimate)", color: "#d62728", values: rows.iter().map(|r| r.tpe_display).collect() },
        Series { label: "TPE-S (3n+3)", color: "#2ca02c", values: rows.iter().map(|r| r.tpe_s).collect() },
    ];
    let y_max = series
        .iter()
        .flat_map(|s| s.values.iter().copied())
        .max()
        .unwrap()
        .max(1);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

    // Axes
    let x0 = MARGIN_L;
    let y0 = HEIGHT - MARGIN_B;
    let x1 = WIDTH - MARGIN_R;
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{MARGIN_T}" x2="{x0}" y2="{y0}" stroke="black"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">n</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 18 {})">twin prime pairs</text>"#,
        (MARGIN_T + y0) / 2.0,
        (MARGIN_T + y0) / 2.0
    );
    // Tick labels at the extremes
    let _ = writeln!(
        svg,
        r#"<text x="{x0}" y="{}" text-anchor="middle" font-size="12">1</text>"#,
        y0 + 18.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x1}" y="{}" text-anchor="middle" font-size="12">{n_max}</text>"#,
        y0 + 18.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end" font-size="12">0</text>"#,
        x0 - 6.0,
        y0 + 4.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end" font-size="12">{y_max}</text>"#,
        x0 - 6.0,
        MARGIN_T + 4.0
    );

    for s in &series {
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>"#,
            s.color,
            polyline(&ns, &s.values, n_max, y_max)
        );
    }

    // Legend
    for (i, s) in series.iter().enumerate() {
        let ly = MARGIN_T + 20.0 + i as f64 * 20.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="2"/>"#,
            MARGIN_L + 10.0,
            MARGIN_L + 40.0,
            s.color
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-size="13">{}</text>"#,
            MARGIN_L + 46.0,
            ly + 4.0,
            s.label
        );
    }
    let _ = writeln!(svg, "</svg>");
    svg
}
