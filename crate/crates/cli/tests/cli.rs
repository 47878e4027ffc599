use std::path::PathBuf;
use std::process::{Command, Output};

use lne_core::figures::binomial_weights;
use lne_core::{lne, EntropyParams, WeightVector};

fn lne_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lne"))
        .args(args)
        .env("LNE_LOG", "quiet")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn problem(dir: &tempfile::TempDir, name: &str, json: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

/// Value of `key=` in a record.
fn record_field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
        .to_string()
}

fn csv_rows(text: &str, header: &str) -> Vec<[f64; 3]> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(header));
    lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect()
}

#[test]
fn entropy_golden_values() {
    let dir = tempfile::tempdir().unwrap();
    let uniform = problem(
        &dir,
        "u.json",
        r#"{"weights": [0.5, 0.5], "params": {"alpha": 2, "beta": 0.5}}"#,
    );
    let out = lne_cmd(&["entropy", "--input", &uniform, "--family", "lne"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "family=lne\nalpha=2.00000000000\nbeta=0.500000000000\nvalue=0.693147180560\n"
    );

    let skewed = problem(
        &dir,
        "s.json",
        r#"{"weights": [0.75, 0.25], "params": {"alpha": 2, "beta": 1}}"#,
    );
    let out = lne_cmd(&["entropy", "--input", &skewed]);
    assert_eq!(record_field(&stdout(&out), "value"), "0.470003629246");
}

#[test]
fn degenerate_weights_give_zero_for_every_family() {
    let dir = tempfile::tempdir().unwrap();
    let f = problem(
        &dir,
        "d.json",
        r#"{"weights": [1, 0], "params": {"alpha": 2, "beta": 0.5}}"#,
    );
    for family in [
        "shannon",
        "renyi",
        "tsallis",
        "kapur",
        "norm",
        "aczel_daroczy",
        "lne",
        "min_entropy_scaled",
    ] {
        let out = lne_cmd(&["entropy", "--input", &f, "--family", family]);
        assert!(out.status.success(), "{family}");
        assert_eq!(record_field(&stdout(&out), "value"), "0", "{family}");
    }
}

#[test]
fn entropy_validation_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = problem(
        &dir,
        "b.json",
        r#"{"weights": [0.5, -0.5], "params": {"alpha": 2, "beta": 1}}"#,
    );
    let out = lne_cmd(&["entropy", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weights"));
    assert!(out.stdout.is_empty());

    let typo = problem(&dir, "t.json", r#"{"weights": [1], "parms": {}}"#);
    let out = lne_cmd(&["entropy", "--input", &typo]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parms"));

    let out = lne_cmd(&["entropy", "--input", &typo, "--family", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bernoulli_curve_csv() {
    let out = lne_cmd(&[
        "curve", "--alpha", "100", "--beta", "2,0.5", "--step", "0.1",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out), "p,beta,value");
    assert_eq!(rows.len(), 22);
    for block in rows.chunks(11) {
        assert_eq!(block[0][2], 0.0);
        assert_eq!(block[10][2], 0.0);
        assert!((block[5][2] - std::f64::consts::LN_2).abs() < 1e-12);
        for k in 0..11 {
            assert_eq!(block[k][2], block[10 - k][2]);
        }
    }
    let at = rows.iter().find(|r| r[0] == 0.3 && r[1] == 2.0).unwrap();
    let p = WeightVector::from_slice(&[0.3, 0.7]).unwrap();
    let lib = lne(&p, EntropyParams::new(100.0, 2.0).unwrap()).value;
    assert!((at[2] - lib).abs() < 1e-12);

    let out = lne_cmd(&["curve", "--alpha", "1", "--beta", "1", "--step", "0.6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binomial_surface_csv() {
    let out = lne_cmd(&["surface", "--n", "1", "--p", "0.5"]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out), "alpha,beta,value");
    assert_eq!(rows.len(), 49);
    assert!(rows
        .iter()
        .all(|r| (r[2] - std::f64::consts::LN_2).abs() < 1e-12));

    let out = lne_cmd(&["surface", "--n", "6", "--p", "0", "--alpha", "0.5:2:4"]);
    assert!(csv_rows(&stdout(&out), "alpha,beta,value")
        .iter()
        .all(|r| r[2] == 0.0));

    let out = lne_cmd(&[
        "surface", "--n", "10", "--p", "0.3", "--alpha", "1,2", "--beta", "2,3",
    ]);
    let rows = csv_rows(&stdout(&out), "alpha,beta,value");
    let at = rows.iter().find(|r| r[0] == 2.0 && r[1] == 2.0).unwrap();
    let lib = lne(
        &binomial_weights(10, 0.3).unwrap(),
        EntropyParams::new(2.0, 2.0).unwrap(),
    )
    .value;
    assert!((at[2] - lib).abs() < 1e-12);

    let out = lne_cmd(&["surface", "--n", "3", "--p", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn maxent_records() {
    let dir = tempfile::tempdir().unwrap();
    let free = problem(&dir, "f.json", r#"{"params": {"alpha": 2, "beta": 1}}"#);
    let out = lne_cmd(&["maxent", "--input", &free, "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(
        record_field(&stdout(&out), "p"),
        "0.250000000000,0.250000000000,0.250000000000,0.250000000000"
    );

    let linear = problem(
        &dir,
        "l.json",
        r#"{"params": {"alpha": 2, "beta": 1}, "constraints": [{"g": [0, 1, 2], "G": 0.8}]}"#,
    );
    let text = stdout(&lne_cmd(&["maxent", "--input", &linear]));
    assert_eq!(
        record_field(&text, "p"),
        "0.433333333333,0.333333333333,0.233333333333"
    );
    assert_eq!(record_field(&text, "branch"), "power_law");
    assert_eq!(record_field(&text, "converged"), "true");
}

#[test]
fn uniform_prior_minxent_reproduces_maxent() {
    let dir = tempfile::tempdir().unwrap();
    let json = r#"{"params": {"alpha": 0.7, "beta": 1.6}, "prior": [1, 1, 1, 1],
                   "constraints": [{"g": [0, 1, 2, 4], "G": 1.1}]}"#;
    let f = problem(&dir, "p.json", json);
    let max = stdout(&lne_cmd(&["maxent", "--input", &f]));
    let min = stdout(&lne_cmd(&["minxent", "--input", &f]));
    assert_eq!(record_field(&max, "p"), record_field(&min, "p"));
    assert_eq!(record_field(&max, "branch"), record_field(&min, "branch"));

    let no_prior = problem(&dir, "n.json", r#"{"params": {"alpha": 2, "beta": 1}}"#);
    assert_eq!(
        lne_cmd(&["minxent", "--input", &no_prior]).status.code(),
        Some(2)
    );
}

#[test]
fn solver_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let infeasible = problem(
        &dir,
        "i.json",
        r#"{"params": {"alpha": 2, "beta": 1}, "constraints": [{"g": [0, 1, 2], "G": 3}]}"#,
    );
    let out = lne_cmd(&["maxent", "--input", &infeasible]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());

    let starved = problem(
        &dir,
        "s.json",
        r#"{"params": {"alpha": 3, "beta": 0.5}, "constraints": [{"g": [0, 1, 5], "G": 4.2}],
            "solver": {"max_iter": 1, "restarts": 0}}"#,
    );
    let out = lne_cmd(&["maxent", "--input", &starved]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert_eq!(record_field(&text, "converged"), "false");
    record_field(&text, "residual_norm");

    let out = lne_cmd(&["maxent", "--input", &infeasible, "--tol", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_redirectable() {
    let dir = tempfile::tempdir().unwrap();
    let f = problem(
        &dir,
        "p.json",
        r#"{"params": {"alpha": 3, "beta": 0.5}, "constraints": [{"g": [0, 1, 5], "G": 1.7}]}"#,
    );
    let a = lne_cmd(&["maxent", "--input", &f]);
    let b = lne_cmd(&["maxent", "--input", &f]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let target = dir.path().join("out.txt");
    let c = lne_cmd(&[
        "maxent",
        "--input",
        &f,
        "--output",
        target.to_str().unwrap(),
    ]);
    assert!(c.status.success() && c.stdout.is_empty());
    assert_eq!(std::fs::read(&target).unwrap(), a.stdout);
}

#[test]
fn logging_goes_to_stderr_only() {
    let dir = tempfile::tempdir().unwrap();
    let f = problem(
        &dir,
        "p.json",
        r#"{"params": {"alpha": 2, "beta": 1}, "constraints": [{"g": [0, 1, 2], "G": 0.8}]}"#,
    );
    let run = |level: &str| {
        Command::new(env!("CARGO_BIN_EXE_lne"))
            .args(["maxent", "--input", &f])
            .env("LNE_LOG", level)
            .output()
            .unwrap()
    };
    let (debug, quiet) = (run("debug"), run("quiet"));
    assert!(String::from_utf8_lossy(&debug.stderr).contains("DEBUG"));
    assert!(quiet.stderr.is_empty());
    assert_eq!(debug.stdout, quiet.stdout);
}

#[test]
fn check_runs_the_suite() {
    let out = lne_cmd(&["check", "--seed", "11"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().count() >= 14);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
