use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const K4: &str = "C~";
const PETERSEN: &str = "IheA@GUAo";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwzeta")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn charpoly_k4_u() {
    let doc = json(&["charpoly", "--target", "U", "--graph6", K4]);
    assert_eq!(
        strings(&doc["coefficients"]),
        [
            "1/1", "0/1", "-2/3", "-64/27", "-43/27", "64/27", "68/27", "64/27", "-43/27", "-64/27", "-2/3", "0/1",
            "1/1"
        ]
    );
    assert_eq!(doc["factored"]["prefactor_exponent"], 2);
    assert_eq!(doc["factored"]["agrees"], true);
    assert_eq!(doc["header"]["tolerance"], 1e-8);
    assert_eq!(doc["header"]["order"], 8);
    assert_eq!(doc["header"]["seed"], 42);
}

#[test]
fn charpoly_k2_adjacency() {
    let doc = json(&["charpoly", "--target", "A", "--graph6", "A_"]);
    assert_eq!(strings(&doc["coefficients"]), ["-1/1", "0/1", "1/1"]);
    assert!(doc.get("factored").is_none());
}

#[test]
fn charpoly_petersen_u3_plus() {
    let doc = json(&["charpoly", "--target", "U3+", "--graph6", PETERSEN]);
    assert_eq!(doc["degree"], 30);
    assert_eq!(
        strings(&doc["coefficients"]),
        [
            "0/1", "0/1", "0/1", "0/1", "-81537269760/1", "76101451776/1", "106451435520/1", "-98146713600/1",
            "-68073553920/1", "51883540480/1", "31073501184/1", "-13746831360/1", "-11006115840/1",
            "1336934400/1", "2753495040/1", "316407808/1", "-419758080/1", "-142540800/1", "26460160/1",
            "24330240/1", "2472960/1", "-1894400/1", "-641280/1", "7680/1", "46720/1", "8832/1", "-480/1",
            "-480/1", "-60/1", "0/1", "1/1"
        ]
    );
}

#[test]
fn spectrum_c3_on_unit_circle() {
    let doc = json(&["spectrum", "--graph6", "Bw"]);
    let values = doc["values"].as_array().unwrap();
    assert_eq!(values.len(), 6);
    for z in values {
        let (re, im) = (z["re"].as_f64().unwrap(), z["im"].as_f64().unwrap());
        assert!((re.hypot(im) - 1.0).abs() < 1e-10);
    }
    assert_eq!(doc["mapped"]["from"], "T");
    assert_eq!(doc["mapped"]["comparison"]["equal"], true);
}

#[test]
fn spectrum_k4_u_plus() {
    let doc = json(&["spectrum", "--target", "U+", "--graph6", K4]);
    let values = doc["values"].as_array().unwrap();
    assert_eq!(values.len(), 12);
    let has = |x: f64| {
        values
            .iter()
            .any(|z| (z["re"].as_f64().unwrap() - x).abs() < 1e-9 && z["im"].as_f64().unwrap().abs() < 1e-9)
    };
    assert!(has(2.0) && has(1.0));
    assert_eq!(doc["mapped"]["from"], "A");
    assert_eq!(doc["mapped"]["comparison"]["equal"], true);
}

#[test]
fn spectrum_k2_csv() {
    let out = run(&["spectrum", "--graph6", "A_", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "re,im,source");
    assert!(rows.contains(&"-1,0,U") && rows.contains(&"1,0,U"));
    assert_eq!(rows.iter().filter(|r| r.ends_with(",U")).count(), 2);
}

#[test]
fn zeta_k4() {
    let doc = json(&["zeta", "--graph6", K4]);
    assert_eq!(doc["equal"], true);
    assert_eq!(
        strings(&doc["edge_form"]),
        ["1/1", "0/1", "0/1", "-8/1", "-6/1", "0/1", "16/1", "24/1", "-3/1", "-16/1", "-24/1", "0/1", "16/1"]
    );
    assert_eq!(doc["euler"]["agrees"], true);
    // 1/det(I - t(B-J0)) = 1 + 8t^3 + 6t^4 + ...
    assert_eq!(strings(&doc["euler"]["series"])[..5], ["1/1", "0/1", "0/1", "8/1", "6/1"]);
}

#[test]
fn json_is_byte_identical() {
    let a = run(&["spectrum", "--target", "U+", "--graph6", PETERSEN]);
    let b = run(&["spectrum", "--target", "U+", "--graph6", PETERSEN]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["verify", "--graph6", K4, "--weight-trials", "3"]);
    let b = run(&["verify", "--graph6", K4, "--weight-trials", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "triangle.txt", "# triangle\n0 1\n1 2\n2 0\n");
    let doc = json(&["charpoly", "--target", "A", "--input", &path]);
    // x^3 - 3x - 2
    assert_eq!(strings(&doc["coefficients"]), ["-2/1", "-3/1", "0/1", "1/1"]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let looped = write(dir.path(), "loop.txt", "0 0\n");
    assert_eq!(run(&["charpoly", "--input", &looped]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "--graph6", K4, "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["charpoly"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--graph6", K4, "--tolerance", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["zeta", "--graph6", PETERSEN, "--euler"]).status.code(), Some(4));
    // Without --euler the oracle is skipped for large graphs.
    let doc = json(&["zeta", "--graph6", PETERSEN]);
    assert!(doc.get("euler").is_none());
    // Hypotheses of the discrimination run: P3 is not md2.
    assert_eq!(run(&["distinguish", "--graph6", "Bg", "--graph6", "Bg"]).status.code(), Some(2));
}

#[test]
fn distinguish_k4_c4() {
    let doc = json(&["distinguish", "--graph6", K4, "--graph6", "Cr"]);
    assert_eq!(doc["level"], 0);
}

#[test]
fn distinguish_srg_pair() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "shrikhande.g6", "OlfJHsHBGK_\\oHWKeBK_\\\n");
    let r = write(dir.path(), "rook44.g6", "O~`HW}GPHDaNaGPCcPWaN\n");
    let doc = json(&["distinguish", &s, &r]);
    assert_eq!(doc["level"], 3);
    let equal: Vec<bool> = doc["details"].as_array().unwrap().iter().map(|d| d["equal"].as_bool().unwrap()).collect();
    assert_eq!(equal, [true, true, true, false]);
}

#[test]
fn verify_builtin_corpus() {
    let out = run(&["verify", "--corpus", "builtin", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("graphs=46"));
    assert!(!text.contains("FAIL"));
}
