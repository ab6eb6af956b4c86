//! End-to-end tests of the installed binary: exit-status contract,
//! cache behavior, fixture fault injection, SVG output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twinsieve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_table2_exits_zero() {
    let o = run(&["verify-table2", "--n-max", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all 50 rows match"));
}

#[test]
fn corrupted_fixture_exits_one_naming_the_cell() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table2.tsv");
    let mut text = String::new();
    for (i, line) in twinsieve::verifier::EMBEDDED_TABLE2.lines().enumerate() {
        if i == 7 {
            // Corrupt row n=7's tpa column.
            let mut fields: Vec<String> = line.split('\t').map(String::from).collect();
            fields[5] = "999".into();
            text.push_str(&fields.join("\t"));
        } else {
            text.push_str(line);
        }
        text.push('\n');
    }
    std::fs::write(&path, text).unwrap();
    let o = run(&["verify-table2", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("n=7") && out.contains("tpa"), "{out}");
}

#[test]
fn missing_fixture_is_config_error() {
    let o = run(&["verify-table2", "--fixture", "/nonexistent/table2.tsv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn windows_cache_cold_and_warm_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("windows.ndjson");
    let args = ["windows", "--n-max", "8", "--format", "csv", "--cache", cache.to_str().unwrap()];
    let cold = run(&args);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 9);
    let warm = run(&args);
    assert_eq!(stdout(&cold), stdout(&warm));
    // Warm run verified rather than re-appended.
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 9);
}

#[test]
fn corrupt_cache_is_ignored_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("windows.ndjson");
    std::fs::write(&cache, "garbage\n").unwrap();
    let o = run(&["windows", "--n-max", "2", "--cache", cache.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ignoring cache"));
}

#[test]
fn windows_threshold_failure_exits_one() {
    let o = run(&["windows", "--n-max", "5", "--min", "100"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn workers_do_not_change_output() {
    let a = run(&["table", "--n-max", "30", "--format", "csv", "--workers", "1"]);
    let b = run(&["table", "--n-max", "30", "--format", "csv", "--workers", "4"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn plot_writes_expected_endpoints() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trend.svg");
    let o = run(&["plot", "--n-max", "50", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 3);
    assert!(svg.contains("1147")); // y-axis max is the tpa endpoint
}

#[test]
fn plot_unwritable_path_is_io_error() {
    let o = run(&["plot", "--n-max", "3", "-o", "/nonexistent-dir/x.svg"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn unknown_flag_is_usage_error() {
    let o = run(&["table", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn audit_json_is_clean_at_twenty() {
    let o = run(&["audit", "--n-max", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["clean"], serde_json::Value::Bool(true));
    assert_eq!(v["case_histogram"]["case_i"].as_u64().unwrap(), 277); // tpa(20)
}
