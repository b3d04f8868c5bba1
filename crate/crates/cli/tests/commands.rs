use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn amalgam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amalgam")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn construct_to(dir: &Path, m: &str, n: &str, r: &str) -> String {
    let path = dir.join(format!("a_{m}_{n}_{r}.json"));
    let path = path.to_str().unwrap().to_owned();
    let out = amalgam(&["construct", "--copies", m, "--clique", n, "--overlap", r, "--out", &path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn construct_writes_the_documented_schema() {
    let out = amalgam(&["construct", "--copies", "3", "--clique", "6", "--overlap", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["m", "n", "r", "entries", "weights", "colors", "diagSum", "exact", "theorem"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["colors"], 6);
    assert_eq!(doc["diagSum"], 856);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 16);
    assert!(doc["entries"][0][5].is_null());
}

#[test]
fn construct_formats() {
    let csv = stdout(&amalgam(&["construct", "-m", "2", "-n", "5", "-r", "0", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 10);
    let tex = stdout(&amalgam(&["construct", "-m", "2", "-n", "5", "-r", "0", "--format", "tex", "--copy", "2"]));
    assert!(tex.starts_with("\\begin{array}"));
    assert!(tex.contains("M_2"));
    let out = amalgam(&["construct", "-m", "2", "-n", "5", "-r", "0", "--format", "csv", "--copy", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lift_and_extend() {
    let lifted: Value =
        serde_json::from_str(&stdout(&amalgam(&["construct", "-m", "3", "-n", "6", "-r", "1", "--lift"]))).unwrap();
    assert_eq!(lifted["apex"], true);
    assert_eq!(lifted["colors"], 7);
    let extended: Value =
        serde_json::from_str(&stdout(&amalgam(&["construct", "-m", "2", "-n", "4", "-r", "0", "--extend"]))).unwrap();
    assert_eq!(extended["n"], 5);
}

#[test]
fn construct_with_supplied_rectangle() {
    let dir = tempfile::tempdir().unwrap();
    let omega = dir.path().join("omega.json");
    fs::write(
        &omega,
        "[[27,32,37],[20,34,42],[31,39,26],[36,41,19],[29,43,24],[40,21,35],[45,23,28],[38,25,33],[22,30,44]]",
    )
    .unwrap();
    let out = amalgam(&["construct", "-m", "3", "-n", "7", "-r", "4", "--omega", omega.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["entries"][0], serde_json::json!([46, 3, 4, null, null, null, null, null, null, 9, 27, 32, 37]));
    fs::write(&omega, "[[1,2],[3,4]]").unwrap();
    let out = amalgam(&["construct", "-m", "3", "-n", "7", "-r", "4", "--omega", omega.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unsupported_parameters_exit_3() {
    assert_eq!(amalgam(&["construct", "-m", "4", "-n", "5", "-r", "2"]).status.code(), Some(3));
    assert_eq!(amalgam(&["magic", "--rows", "1", "--cols", "4"]).status.code(), Some(3));
    assert_eq!(amalgam(&["oracle", "chi-lat", "--graph", "amalgam:3,6,1"]).status.code(), Some(3));
}

#[test]
fn invalid_parameters_exit_2() {
    assert_eq!(amalgam(&["construct", "-m", "2", "-n", "3", "-r", "3"]).status.code(), Some(2));
    assert_eq!(amalgam(&["oracle", "chi-lat", "--graph", "amalgam:2,3"]).status.code(), Some(2));
    assert_eq!(amalgam(&["selftest", "--scope", "most"]).status.code(), Some(2));
}

#[test]
fn verify_accepts_reports_and_rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "3", "6", "0");
    let out = amalgam(&["verify", "--graph", "amalgam:3,6,0", "--labeling", &path]);
    assert_eq!(out.status.code(), Some(0));
    let rep: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep["proper"], true);

    // lower the label of v(1,3) by 33 so its weight meets v(1,2)'s, and give
    // its old label to whichever element held the new one
    let doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let e = &doc["entries"];
    let old = e[2][2].as_u64().unwrap();
    let new = old - 33;
    let mut vertices: Vec<u64> = (0..18).map(|i| e[i][i].as_u64().unwrap()).collect();
    let mut edges = edges_of(e);
    vertices[2] = new;
    if let Some(v) = vertices.iter_mut().skip(3).find(|v| **v == new) {
        *v = old;
    }
    for edge in edges.iter_mut().filter(|x| x[2] == new) {
        edge[2] = old.into();
    }
    let doc = serde_json::json!({ "kind": "total", "vertices": vertices, "edges": edges });
    let tampered = dir.path().join("tampered.json");
    fs::write(&tampered, doc.to_string()).unwrap();
    let out = amalgam(&["verify", "--graph", "amalgam:3,6,0", "--labeling", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let rep: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep["proper"], false);
    assert_eq!(rep["bijective"], true);
    assert_eq!(rep["weights"][2], 138);
}

fn edges_of(entries: &Value) -> Vec<Value> {
    let rows = entries.as_array().unwrap();
    let mut out = Vec::new();
    for (a, row) in rows.iter().enumerate() {
        for (b, cell) in row.as_array().unwrap().iter().enumerate().skip(a + 1) {
            if let Some(x) = cell.as_u64() {
                out.push(serde_json::json!([a, b, x]));
            }
        }
    }
    out
}

#[test]
fn verify_malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    let out = amalgam(&["verify", "--graph", "amalgam:2,3,1", "--labeling", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let path = construct_to(dir.path(), "2", "4", "0");
    let out = amalgam(&["verify", "--graph", "amalgam:3,6,1", "--labeling", &path]);
    assert_eq!(out.status.code(), Some(2));
    let out = amalgam(&["verify", "--graph", "amalgam:2,4,0", "--labeling", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_on_named_and_listed_graphs() {
    let out = amalgam(&["oracle", "chi-lat", "--graph", "amalgam:2,3,1", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let res: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(res["value"], 3);
    assert_eq!(res["proven_exact"], true);

    let dir = tempfile::tempdir().unwrap();
    let adj = dir.path().join("p3.txt");
    fs::write(&adj, "# path on three vertices\n0: 1\n1: 0 2\n2: 1\n").unwrap();
    let out = amalgam(&["oracle", "chi-la", "--adjacency", adj.to_str().unwrap()]);
    let res: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(res["value"], 3);
    assert_eq!(res["witness"]["kind"], "edge-only");
}

#[test]
fn signs_and_magic() {
    let signs = stdout(&amalgam(&["signs", "--order", "4"]));
    assert_eq!(signs.lines().count(), 4);
    assert!(signs.lines().all(|l| l.split_whitespace().count() == 4));

    let csv = stdout(&amalgam(&["magic", "--rows", "3", "--cols", "5", "--lo", "10", "--format", "csv"]));
    let rows: Vec<Vec<u64>> = csv.lines().map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 3);
    let sums: Vec<u64> = rows.iter().map(|r| r.iter().sum()).collect();
    assert!(sums.iter().all(|&s| s == sums[0]));
    assert_eq!(rows.iter().flatten().min(), Some(&10));
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_to(dir.path(), "2", "7", "3");
    let again = dir.path().join("again.json");
    let out = amalgam(&["export", "--input", &path, "--format", "json", "--out", again.to_str().unwrap()]);
    assert!(out.status.success());
    let a: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&fs::read_to_string(&again).unwrap()).unwrap();
    assert_eq!(a, b);
    let tex = stdout(&amalgam(&["export", "--input", &path, "--format", "tex"]));
    assert!(tex.contains("\\end{array}"));
}

#[test]
fn selftest_fixtures_pass_and_seed_is_accepted() {
    let out = amalgam(&["--seed", "7", "selftest", "--scope", "fixtures"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fixtures: 10 checked, 0 failed"));
}
