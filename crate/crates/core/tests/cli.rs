use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use comrade::io::{parse_dense, parse_matrix};
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn comrade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comrade"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn det_retries_symbolically_on_zero_pivot() {
    let o = comrade(&["det", path_str(&fixture("example3_2.json"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "24");
    assert!(stderr(&o).contains("retrying in symbolic mode"));
    assert!(stderr(&o).contains("mu[1] := t"));
}

#[test]
fn det_in_each_mode() {
    let f = fixture("example3_1.json");
    let exact = comrade(&["det", path_str(&f), "--mode", "exact"]);
    assert_eq!(stdout(&exact).trim(), "-1/45");
    let symbolic = comrade(&["det", path_str(&f), "--mode", "symbolic"]);
    assert_eq!(stdout(&symbolic).trim(), "-1/45");
    let float = comrade(&["det", path_str(&f), "--mode", "float"]);
    let v: f64 = stdout(&float).trim().parse().unwrap();
    assert!((v + 1.0 / 45.0).abs() < 1e-15);
}

#[test]
fn explicit_exact_mode_reports_zero_pivot() {
    let o = comrade(&["det", path_str(&fixture("example3_2.json")), "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("zero pivot at index 1"));
}

#[test]
fn singular_matrix_exit_code() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("inv.json");
    let o = comrade(&["inv", path_str(&fixture("singular.json")), "-o", path_str(&out)]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("singular"));
    assert!(!out.exists());

    let d = comrade(&["det", path_str(&fixture("singular.json"))]);
    assert_eq!(d.status.code(), Some(0));
    assert_eq!(stdout(&d).trim(), "0");
}

#[test]
fn malformed_input_exit_code() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("not json", "error: "),
        (
            r#"{"n":3,"beta":["1","1","1"],"alpha":["1","x"],"gamma":["1","1"],"a":["1"]}"#,
            "alpha",
        ),
        (
            r#"{"n":4,"beta":["1","1","1","1"],"alpha":["1","1","1"],"gamma":["1","1","1"],"a":["1"]}"#,
            "a: expected 2",
        ),
        (
            r#"{"n":2,"beta":["1","1"],"alpha":["1"],"gamma":["1"],"a":[]}"#,
            "order",
        ),
        (
            r#"{"n":3,"beta":["1","1","1"],"alpha":["1","1/0"],"gamma":["1","1"],"a":["1"]}"#,
            "alpha[1]",
        ),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let p = dir.path().join(format!("m{i}.json"));
        std::fs::write(&p, text).unwrap();
        let o = comrade(&["det", path_str(&p)]);
        assert_eq!(o.status.code(), Some(3), "case {i}: {}", stderr(&o));
        let err = stderr(&o);
        assert!(err.contains(needle), "case {i}: {err}");
    }
}

#[test]
fn missing_file_is_a_failure() {
    let o = comrade(&["det", "/nonexistent/matrix.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(comrade(&[]).status.code(), Some(2));
    assert_eq!(comrade(&["det"]).status.code(), Some(2));
    assert_eq!(comrade(&["det", "x.json", "--mode", "fuzzy"]).status.code(), Some(2));
}

#[test]
fn check_prints_zero_residual() {
    for name in ["example3_1.json", "example3_2.json", "interior_alpha_zero.json"] {
        let o = comrade(&["check", path_str(&fixture(name))]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), "0", "{name}");
    }
    let f = comrade(&["check", path_str(&fixture("example3_1.json")), "--mode", "float"]);
    let r: f64 = stdout(&f).trim().parse().unwrap();
    assert!(r < 1e-12);
}

#[test]
fn inverse_files_reparse_to_the_inverse() {
    let dir = TempDir::new().unwrap();
    for name in ["example3_1.json", "example3_2.json", "interior_alpha_zero.json"] {
        let out = dir.path().join(format!("inv-{name}"));
        let o = comrade(&["inv", path_str(&fixture(name)), "-o", path_str(&out)]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("determinant: "));

        let c = parse_matrix(fixture(name)).unwrap();
        let s = parse_dense(&out).unwrap();
        assert!(c.mul_right(&s).is_identity(), "{name}");
        assert!(c.mul_left(&s).is_identity(), "{name}");
    }
}

#[test]
fn inv_reports_alpha_substitution() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("inv.json");
    let o = comrade(&[
        "inv",
        path_str(&fixture("interior_alpha_zero.json")),
        "-o",
        path_str(&out),
    ]);
    assert!(stdout(&o).contains("mode: symbolic"));
    assert!(stdout(&o).contains("alpha[2] := t"));
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str, seed: &str| {
        let p = dir.path().join(name);
        let o = comrade(&[
            "gen",
            "--family",
            "random",
            "--n",
            "7",
            "--seed",
            seed,
            "--zero-pivot-bias",
            "0.5",
            "-o",
            path_str(&p),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read_to_string(p).unwrap()
    };
    assert_eq!(run("a.json", "42"), run("b.json", "42"));
    assert_ne!(run("c.json", "42"), run("d.json", "43"));

    let p = dir.path().join("e33.json");
    comrade(&["gen", "--family", "example33", "--n", "6", "-o", path_str(&p)]);
    assert_eq!(parse_matrix(&p).unwrap(), comrade::example33(6).unwrap());
}

#[test]
fn bench_writes_csv() {
    let o = comrade(&[
        "bench",
        "--family",
        "example33",
        "--sizes",
        "5,10",
        "--mode",
        "exact",
        "-o",
        "-",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,mode,op_count,wall_time_seconds,epsilon"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "5");
    assert_eq!(row[1], "exact");
    assert_eq!(row[2], (7 * 25 - 5 * 5 - 11).to_string());
    assert_eq!(row[4].parse::<f64>().unwrap(), 0.0);
    assert_eq!(text.lines().count(), 3);
    assert!(stderr(&o).contains("baseline"));

    let dir = TempDir::new().unwrap();
    let p = dir.path().join("b.csv");
    let o = comrade(&[
        "bench",
        "--family",
        "random",
        "--sizes",
        "8",
        "--no-epsilon",
        "-o",
        path_str(&p),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(p).unwrap();
    assert!(text.lines().nth(1).unwrap().ends_with(','));
}
