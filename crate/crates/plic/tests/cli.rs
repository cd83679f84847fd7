use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn plic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plic")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path: PathBuf = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn complete(n: usize) -> String {
    let edges: Vec<String> = (0..n).flat_map(|u| (u + 1..n).map(move |v| format!("{u} {v}"))).collect();
    format!("{n} {}\n{}\n", edges.len(), edges.join("\n"))
}

#[test]
fn triangles_in_k4() {
    let dir = TempDir::new().unwrap();
    let (p, h) = (write(dir.path(), "p", &complete(3)), write(dir.path(), "h", &complete(4)));
    for mode in ["auto", "brute", "treewidth", "full", "desk"] {
        let out = plic(&["count", "--pattern", &p, "--host", &h, "--induced", "--mode", mode]);
        assert!(out.status.success(), "{mode}");
        assert_eq!(stdout(&out).trim(), "24", "{mode}");
    }
}

#[test]
fn json_document_has_the_documented_fields() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "p", "4 2\n0 1\n2 3\n");
    let h = write(dir.path(), "h", "4 3\n0 1\n1 2\n2 3\n");
    let out = plic(&["count", "--pattern", &p, "--host", &h, "--subgraph", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["count"], "8");
    assert_eq!(doc["semantics"], "subgraph");
    assert!(doc["mode"].is_string());
    for key in ["subproblems", "max_table", "ms"] {
        assert!(doc["stats"][key].is_u64(), "{key}");
    }
}

#[test]
fn subsets_and_gadgets() {
    let dir = TempDir::new().unwrap();
    let (p, h) = (write(dir.path(), "p", &complete(3)), write(dir.path(), "h", &complete(4)));
    let out = plic(&["count", "--pattern", &p, "--host", &h, "--subgraph", "--gadget", "--subsets"]);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn directed_cycle_rotations() {
    let dir = TempDir::new().unwrap();
    let c = write(dir.path(), "c", "3 3\n0 1\n1 2\n2 0\n");
    let out = plic(&["count", "--pattern", &c, "--host", &c, "--directed"]);
    assert_eq!(stdout(&out).trim(), "3");
    let out = plic(&["count", "--pattern", &c, "--host", &c, "--directed", "--subsets"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "p", &complete(3));
    let k5 = write(dir.path(), "k5", &complete(5));
    let bad = write(dir.path(), "bad", "3 1\n2 1\n");
    assert_eq!(plic(&["count", "--pattern", &p, "--host", &k5, "--induced"]).status.code(), Some(3));
    assert_eq!(plic(&["count", "--pattern", &bad, "--host", &p, "--induced"]).status.code(), Some(2));
    assert_eq!(plic(&["count", "--pattern", &p, "--host", &p]).status.code(), Some(2));
}

#[test]
fn seeded_instance_is_reproducible() {
    let run = || stdout(&plic(&["count", "--seed", "11", "--subgraph", "--mode", "desk"]));
    let first = run();
    assert!(first.trim().parse::<u128>().is_ok());
    assert_eq!(first, run());
}

#[test]
fn catalog_records() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "p", "3 2\n0 1\n1 2\n");
    let out = plic(&["catalog", "--pattern", &p, "--order", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut total = 0u128;
    for line in text.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 5);
        let (x, y, order): (usize, usize, usize) = (fields[1].parse().unwrap(), fields[2].parse().unwrap(), fields[3].parse().unwrap());
        assert_eq!(x + y, 3 + order);
        total += fields[4].parse::<u128>().unwrap();
    }
    // separators: empty (X = ∅ or everything), each endpoint (X = ∅ side or the rest), the middle (4 ways)
    assert_eq!(total, 2 + 2 * 2 + 4);
}

#[test]
fn bench_csv_matches_independent_set_counts() {
    let out = plic(&["bench", "--family", "grid", "--k-range", "2..=3", "--sizes", "3", "--modes", "treewidth,desk"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.headers().unwrap(), vec!["family", "n", "k", "mode", "ms", "count"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    // 3x3 grid: 24 two-sets and 22 three-sets without adjacent cells
    for row in rows {
        let expected = if &row[2] == "2" { 24 * 2 } else { 22 * 6 };
        assert_eq!(row[5].parse::<u64>().unwrap(), expected);
    }
}
