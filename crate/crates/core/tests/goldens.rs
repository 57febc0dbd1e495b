use std::fs;

use ffdirichlet::cli::golden::{default_dir, golden_path, golden_run, suite_output, SUITES};
use ffdirichlet::Error;

#[test]
fn recorded_suites_reproduce() {
    for suite in SUITES {
        golden_run(suite, &default_dir(), false, 64).unwrap_or_else(|e| panic!("{suite}: {e}"));
    }
}

#[test]
fn grid_suite_is_precision_independent() {
    let frozen = fs::read_to_string(golden_path(&default_dir(), "prop2_1_grid")).unwrap();
    assert_eq!(suite_output("prop2_1_grid", 96).unwrap(), frozen);
}

#[test]
fn a_changed_record_is_located() {
    let dir = std::env::temp_dir().join(format!("ffd-golden-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let original = fs::read_to_string(golden_path(&default_dir(), "probe_x_x2_q2")).unwrap();
    fs::write(golden_path(&dir, "probe_x_x2_q2"), original.replacen("5,0", "5,1", 1)).unwrap();
    match golden_run("probe_x_x2_q2", &dir, false, 64) {
        Err(Error::GoldenMismatch { line, .. }) => assert_eq!(line, 3),
        other => panic!("expected a mismatch, got {other:?}"),
    }
    golden_run("probe_x_x2_q2", &dir, true, 64).unwrap();
    assert_eq!(fs::read_to_string(golden_path(&dir, "probe_x_x2_q2")).unwrap(), original);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert!(matches!(suite_output("nope", 64), Err(Error::Usage(_))));
}
