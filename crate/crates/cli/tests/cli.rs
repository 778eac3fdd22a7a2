use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn dyckd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckd"))
        .args(args)
        .env_remove("DYCKD_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn matrix_latex_is_the_printed_inverse() {
    let o = dyckd(&["matrix", "--n", "4", "--epsilon", "0", "--kind", "Minv", "--format", "latex"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("\\begin{pmatrix}"));
    assert!(s.contains("q^{3}+q^{5} & q^{4} & q^{3} & q^{2} & q^{2} & q & 1 & 0"));
}

#[test]
fn matrix_trivial_and_json() {
    let o = dyckd(&["matrix", "--n", "1", "--epsilon", "0", "--kind", "M"]);
    assert_eq!(stdout(&o), "   U\nU  1\n");
    let o = dyckd(&["matrix", "--n", "4", "--epsilon", "1", "--kind", "N", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["entries"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 8));
    assert_eq!(v["basis"][0], "UUUD");
}

#[test]
fn genfun_examples() {
    let o = dyckd(&["genfun", "--lambda", "DDUUDD", "--type", "D", "--weight", "art", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["at_q_equals_1"], "36");
    assert_eq!(v["polynomial"]["coeffs"][5], 6);

    let o = dyckd(&["genfun", "--lambda", "DDUU", "--mu", "UUUU", "--type", "D", "--weight", "area"]);
    assert!(stdout(&o).starts_with("DDUU / UUUU = 2q^5\n"));

    let o = dyckd(&["genfun", "--mu", "UUDD", "--class", "exclusive", "--weight", "tiles"]);
    assert!(stdout(&o).starts_with("* / UUDD = 1 + 2q + q^2\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(dyckd(&["genfun", "--lambda", "X"]).status.code(), Some(2));
    assert_eq!(dyckd(&["matrix", "--n", "11", "--kind", "M"]).status.code(), Some(2));
    assert_eq!(dyckd(&["frobnicate"]).status.code(), Some(2));
    // UDUD is not weakly above UUDD.
    assert_eq!(
        dyckd(&["genfun", "--lambda", "UUDD", "--mu", "UDUD"]).status.code(),
        Some(3)
    );
    assert_eq!(
        dyckd(&["tilings", "--lambda", "UUUU", "--mu", "UDUD"]).status.code(),
        Some(3)
    );
}

#[test]
fn tilings_render_with_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = dyckd(&[
        "tilings",
        "--lambda",
        "DDUUDD",
        "--filter-art",
        "5",
        "--render",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("6 tiling(s)\n"));
    let manifest: Value = serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    let arts = manifest["artifacts"].as_array().unwrap();
    assert_eq!(arts.len(), 6);
    for a in arts {
        let body = fs::read(out.join(a["file"].as_str().unwrap())).unwrap();
        assert_eq!(a["sha256"], format!("{:x}", Sha256::digest(&body)));
        assert_eq!(a["art"], 5);
    }
}

#[test]
fn tilings_small_cases() {
    let o = dyckd(&["tilings", "--lambda", "UDUD", "--mu", "UDUD"]);
    assert!(stdout(&o).starts_with("1 tiling(s)\nUDUD / UDUD: area=0 tiles=0 art=0\n"));
    let o = dyckd(&["tilings", "--lambda", "DUDU", "--mu", "UUDD", "--class", "exclusive", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["tiles"], 1);
}

#[test]
fn tree_examples() {
    let o = dyckd(&["tree", "--lambda", "DUUDUU"]);
    assert!(stdout(&o).ends_with("omega = 1 + 2q + 3q^2 + 3q^3 + 3q^4 + 3q^5 + 2q^6 + q^7\n"));
    let o = dyckd(&["tree", "--lambda", ""]);
    assert_eq!(stdout(&o), "tree: ()\nomega = 1\n");
    let o = dyckd(&["tree", "--lambda", "DDDD"]);
    assert!(stdout(&o).ends_with("omega = 1 + q + q^2 + 2q^3 + q^4 + q^5 + q^6\n"));
    let o = dyckd(&["tree", "--lambda", "DUUDUU", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tree"]["arrows"][0]["tail"], serde_json::json!([0, 2]));
    let o = dyckd(&["tree", "--lambda", "DUUDUU", "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph tree {"));
}

#[test]
fn verify_suite() {
    let o = dyckd(&["verify", "--max-length", "1"]);
    assert!(o.status.success());
    let o = dyckd(&["verify", "--max-length", "5", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["failed"] == 0));
    let golden = checks.iter().find(|c| c["name"] == "golden matrices").unwrap();
    assert_eq!(golden["checked"], 257);
}

#[test]
fn output_is_independent_of_workers() {
    let runs: Vec<String> = ["1", "3", "8"]
        .iter()
        .map(|k| {
            let o = dyckd(&["--workers", k, "genfun", "--lambda", "DDUUDD"]);
            stdout(&o) + &stdout(&dyckd(&["--workers", k, "tilings", "--lambda", "DUDUDU", "--format", "json"]))
        })
        .collect();
    assert!(runs.windows(2).all(|p| p[0] == p[1]));
}
