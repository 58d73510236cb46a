use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn matrix_file(rows: &[&[i64]]) -> NamedTempFile {
    let data: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    let body = serde_json::json!({ "rows": rows.len(), "cols": rows[0].len(), "data": data });
    let mut f = NamedTempFile::new().unwrap();
    write!(f, "{body}").unwrap();
    f
}

fn mex() -> NamedTempFile {
    matrix_file(&[&[3, 2, 1, 0], &[0, 1, 2, 2]])
}

fn vecpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vecpart")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn count_methods_agree() {
    let m = mex();
    for (alpha, want) in [("3,2", "1"), ("2,1", "1"), ("0,0", "1"), ("8,8", "3"), ("-1,2", "0")] {
        for method in ["brute", "formula", "both"] {
            let o = vecpart(&["count", "--matrix", path(&m), "--alpha", alpha, "--method", method]);
            assert!(o.status.success(), "{alpha} {method}: {}", String::from_utf8_lossy(&o.stderr));
            assert_eq!(stdout(&o), want, "{alpha} {method}");
        }
    }
    let o = vecpart(&["--format", "json", "count", "--matrix", path(&m), "--alpha", "3,2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn count_sweep_on_walls() {
    // points on the rays through (2,1) and (1,2) belong to two chambers
    let m = mex();
    for alpha in ["4,2", "6,3", "2,4", "5,10", "9,0", "0,6"] {
        let o = vecpart(&["count", "--matrix", path(&m), "--alpha", alpha, "--method", "both"]);
        assert!(o.status.success(), "{alpha}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn popoviciu_and_volume() {
    let o = vecpart(&["popoviciu", "--a", "3", "--b", "4", "--n", "12"]);
    assert_eq!(stdout(&o), "2");
    let id = matrix_file(&[&[1, 0], &[0, 1]]);
    let o = vecpart(&["volume", "--mode", "ineq", "--matrix", path(&id), "--b", "2,2"]);
    assert_eq!(stdout(&o), "4");
    let seg = matrix_file(&[&[1, 1]]);
    let o = vecpart(&["volume", "--mode", "eq", "--matrix", path(&seg), "--b", "2"]);
    assert_eq!(stdout(&o), "2");
    let o = vecpart(&["--format", "json", "volume", "--mode", "ineq", "--matrix", path(&seg), "--b", "1"]);
    assert_eq!(stdout(&o), r#"{"volume":"1/2"}"#);
}

#[test]
fn formula_and_listings() {
    let m = mex();
    let o = vecpart(&["formula", "--matrix", path(&m)]);
    let text = stdout(&o);
    assert_eq!(text.matches("chamber").count(), 3);
    assert!(text.contains("θ = (1, -1)"));

    let o = vecpart(&["--format", "json", "formula", "--matrix", path(&m), "--witness", "2,10"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["parts"].as_array().unwrap().len(), 13);

    let o = vecpart(&["chambers", "--matrix", path(&m)]);
    assert_eq!(stdout(&o).lines().count(), 3);

    let o = vecpart(&["characters", "--matrix", path(&m)]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 13);
    assert_eq!(text.lines().filter(|l| l.contains("#M_θ = 2")).count(), 9);
}

#[test]
fn ehrhart_and_pitman_stanley() {
    let u = matrix_file(&[&[1, 0, 1], &[0, 1, 1]]);
    let o = vecpart(&["ehrhart", "--matrix", path(&u), "--b", "1,1"]);
    assert_eq!(stdout(&o), "L(g) = g + 1");
    let two_three = matrix_file(&[&[2, 3]]);
    let o = vecpart(&["--format", "json", "ehrhart", "--matrix", path(&two_three), "--b", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["period"], 6);
    assert_eq!(v["degree"], 1);

    let o = vecpart(&["pitman-stanley", "--x", "1,1,1"]);
    assert!(stdout(&o).lines().all(|l| l.ends_with("8/3")));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(vecpart(&["count"]).status.code(), Some(2));
    assert_eq!(vecpart(&["frobnicate"]).status.code(), Some(2));
    let m = mex();
    assert_eq!(vecpart(&["count", "--matrix", path(&m), "--alpha", "1/2,3"]).status.code(), Some(2));
    assert_eq!(vecpart(&["count", "--matrix", "/nonexistent.json", "--alpha", "1,1"]).status.code(), Some(2));

    // domain errors name the violated precondition
    let o = vecpart(&["popoviciu", "--a", "2", "--b", "4", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("coprime"));
    let bad = matrix_file(&[&[1, -1]]);
    assert_eq!(vecpart(&["count", "--matrix", path(&bad), "--alpha", "1"]).status.code(), Some(1));
    assert_eq!(vecpart(&["count", "--matrix", path(&m), "--alpha", "1,2,3"]).status.code(), Some(1));
    let o = vecpart(&["formula", "--matrix", path(&m), "--witness", "4,2"]);
    assert_eq!(o.status.code(), Some(1));
    let three = matrix_file(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]]);
    assert_eq!(vecpart(&["chambers", "--matrix", path(&three)]).status.code(), Some(1));
}

#[test]
fn three_rows_count_by_formula() {
    let three = matrix_file(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]]);
    for alpha in ["2,3,4", "1,1,1", "0,0,0", "3,1,2"] {
        let o = vecpart(&["count", "--matrix", path(&three), "--alpha", alpha, "--method", "both"]);
        assert!(o.status.success(), "{alpha}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = vecpart(&["formula", "--matrix", path(&three)]);
    assert_eq!(o.status.code(), Some(2));
}
