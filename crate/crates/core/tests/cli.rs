use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn polygv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polygv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn polygv_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polygv"))
        .args(args)
        .env(key, value)
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
fn construct_then_fvec_and_gvec() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("mw.json");
    let o = polygv(&[
        "construct",
        "--family",
        "mw",
        "--K",
        "2",
        "--D",
        "4",
        "--N",
        "7",
        "--output",
        path_str(&file),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    let o = polygv(&["fvec", "--in", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["f"], serde_json::json!([1, 7, 18, 22, 11]));

    let o = polygv(&["gvec", "--in", path_str(&file), "--kind", "simplicial"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["g"], serde_json::json!([1, 2, 0]));
    assert_eq!(v["dehn_sommerville"], Value::Bool(true));
}

#[test]
fn gvec_cubical_from_f() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cube.json");
    std::fs::write(&file, r#"{"d": 3, "f": [8, 12, 6]}"#).unwrap();
    let o = polygv(&["gvec", "--in", path_str(&file), "--kind", "cubical-from-f"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["h_c"], serde_json::json!([4, 4, 4, 4]));
    assert_eq!(v["h_sc"], serde_json::json!([8, 8, 8]));

    std::fs::write(&file, r#"{"d": 3, "f": [8, 12]}"#).unwrap();
    let o = polygv(&["gvec", "--in", path_str(&file), "--kind", "cubical-from-f"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_family_constructs() {
    for args in [
        &["construct", "--family", "cyclic", "--K", "4", "--m", "7"][..],
        &[
            "construct",
            "--family",
            "lex",
            "--K",
            "2",
            "--m",
            "5",
            "--a",
            "1",
        ],
        &[
            "construct",
            "--family",
            "lex",
            "--K",
            "2",
            "--D",
            "4",
            "--N",
            "8",
            "--a",
            "2",
        ],
        &[
            "construct",
            "--family",
            "diamond",
            "--k",
            "1",
            "--d",
            "6",
            "--n",
            "9",
            "--a",
            "2",
        ],
    ] {
        let o = polygv(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(v["facets"].as_array().is_some_and(|f| !f.is_empty()));
    }
    let o = polygv(&[
        "construct",
        "--family",
        "cyclic",
        "--K",
        "4",
        "--m",
        "7",
        "--format",
        "csv",
    ]);
    assert!(stdout(&o).starts_with("facet\n"));
}

#[test]
fn q_report_shows_both_routes() {
    let o = polygv(&["q-report", "--k", "1", "--d", "6", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("g^c = (32, 448, 1088, 0)"));
    assert!(text.contains("routes agree: yes"));

    let o = polygv(&[
        "q-report",
        "--k",
        "1",
        "--d",
        "6",
        "--n",
        "9",
        "--explicit",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gsc"]["explicit"], serde_json::json!([512, 1536, 1088]));
    assert_eq!(
        v["histogram"],
        serde_json::json!({"1": 256, "2": 128, "3": 64, "4": 64})
    );
}

#[test]
fn ray_csv_and_degenerate_row() {
    let o = polygv(&[
        "ray", "--k", "1", "--d", "6", "--n-from", "6", "--n-to", "30",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 26);
    assert_eq!(lines[1], "1,6,6,0,0,0,,,,");
    assert!(lines[25].starts_with("1,6,30,"));
    assert!(
        lines[25].ends_with(",0.0416667,0.958333,0,2"),
        "{}",
        lines[25]
    );
    assert!(stderr(&o).contains("n=6"));
}

#[test]
fn stackedness_reports_witness() {
    let o = polygv(&["stackedness", "--k", "1", "--d", "6", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diamonds"].as_array().unwrap().len(), 4);
    assert_eq!(v["witness"]["sigma"], "+--------");
    assert_eq!(
        v["witness"]["face"],
        serde_json::json!(["c1", "c2", "c3", "t1", "t2", "t3"])
    );
    assert_eq!(v["witness"]["face_type_in_b"], "Unclassified");

    let o = polygv(&["stackedness", "--k", "1", "--d", "5", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = polygv(&["verify", "--suite", "all", "--grid", "small"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o)
        .lines()
        .all(|l| l.starts_with("PASS ") || l == "all checks passed"));

    let o = polygv(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["stackedness", "--k", "1", "--d", "6", "--n", "10"];
    let one = polygv_env(&args, "POLYGV_THREADS", "1");
    let four = polygv_env(&args, "POLYGV_THREADS", "4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);

    let v1 = polygv_env(&["verify", "--format", "json"], "POLYGV_THREADS", "1");
    let v0 = polygv_env(&["verify", "--format", "json"], "POLYGV_THREADS", "0");
    assert_eq!(v1.stdout, v0.stdout);

    let bad = polygv_env(&args, "POLYGV_THREADS", "many");
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("POLYGV_THREADS"));
}

#[test]
fn parameter_errors_go_to_stderr() {
    let o = polygv(&[
        "construct",
        "--family",
        "mw",
        "--K",
        "5",
        "--D",
        "4",
        "--N",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).starts_with("error:"));

    let o = polygv(&["fvec", "--in", "/nonexistent/complex.json"]);
    assert_eq!(o.status.code(), Some(2));
}
