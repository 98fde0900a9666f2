use std::path::PathBuf;
use std::process::{Command, Output};

use qblock::io::WeightFile;
use qblock::linkage::WitnessJson;
use qblock::{LinkageWitness, Weight};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qblock"))
}

fn fixture(name: &str, json: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qblock-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, json).unwrap();
    p
}

fn example7() -> PathBuf {
    fixture(
        "ex7.json",
        r#"{"n":7,"symbols":["pi"],"coords":["1/5","1","0+pi*-1","3/2","0+pi*1","-3/2","0+pi*-1"]}"#,
    )
}

fn q2() -> PathBuf {
    fixture("q2.json", r#"{"n":2,"symbols":["s"],"coords":["0+s*1","0+s*-1"]}"#)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    v
}

#[test]
fn reduce_worked_example() {
    let p = example7();
    let v = json(&["reduce", p.to_str().unwrap()]);
    assert_eq!(v["shape"], serde_json::json!([1, 2, 1, 3]));
    assert_eq!(v["atypical_moves"], 1);
    let reduced: WeightFile = serde_json::from_value(v["reduced"].clone()).unwrap();
    let w: Weight = reduced.to_weight().unwrap();
    assert_eq!(w, Weight::parse(&["1", "3/2", "-3/2", "1/5", "-1+pi*1", "1+pi*-1", "0+pi*-1"]).unwrap());
    let notes = v["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("(1/5)^1")));
}

#[test]
fn zigzag_table() {
    let out = run(&["zigzag", "--window", "1", "--table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let table = lines.iter().position(|l| *l == "# table").unwrap();
    assert_eq!(lines[0], "# basis (10)");
    assert_eq!(table - 1, 10);
    assert!(lines.contains(&"X0*Y0 = Z1"));
    assert!(lines.contains(&"Y0*X0 = Z0"));
    let v = json(&["zigzag", "--window", "3", "--radical", "--submodules", "0"]);
    assert_eq!(v["radical"]["dims"], serde_json::json!([19, 7, 0]));
    assert_eq!(v["submodules"]["submodules"].as_array().unwrap().len(), 4);
}

#[test]
fn linked_identical_approx() {
    let p = example7();
    let ps = p.to_str().unwrap();
    let v = json(&["linked", ps, ps, "--relation", "approx"]);
    assert_eq!(v["linked"], true);
    let w: WitnessJson = serde_json::from_value(v["witness"].clone()).unwrap();
    assert_eq!(w.w, (1..=7).collect::<Vec<_>>());
    assert!(w.pairs.is_empty());
    let lambda: Weight = WeightFile::parse(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(LinkageWitness::from_json(&w).unwrap().replay(&lambda).unwrap(), lambda);
}

#[test]
fn block_commands() {
    let p = q2();
    let ps = p.to_str().unwrap();
    let v = json(&["block-quiver", ps, "--s", "s", "--ell", "1", "--window", "3"]);
    assert_eq!(v["cartan"][3], serde_json::json!([0, 0, 1, 2, 1, 0, 0]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    let v = json(&["lambda-minus", ps, "--s", "s", "--ell", "1"]);
    assert_eq!(v["weight"]["coords"], serde_json::json!(["-1+s*1", "1+s*-1"]));
    let v = json(&["glmap", ps, "--s", "s", "--ell", "1"]);
    assert_eq!(v["coords"], serde_json::json!([1, -1]));
    let v = json(&["translate", "F", ps, "--a", "0", "--s", "s", "--ell", "1", "--depth", "2", "--verify"]);
    assert_eq!(v["holds"], true);
    let v = json(&["char", "K", ps, "--ell", "1", "--depth", "1"]);
    assert_eq!(v["character"]["terms"].as_array().unwrap().len(), 2);
    json(&["wt", ps, "--s", "s", "--ell", "1"]);
    json(&["atyp", ps]);
}

#[test]
fn exit_codes() {
    let p = fixture("typical.json", r#"{"n":2,"symbols":["s"],"coords":["1+s*1","0+s*-1"]}"#);
    let out = run(&["lambda-minus", p.to_str().unwrap(), "--s", "s", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("atypicality"));
    let undeclared = fixture("undeclared.json", r#"{"n":1,"symbols":["s"],"coords":["0+pi*1"]}"#);
    assert_eq!(run(&["atyp", undeclared.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["zigzag"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "--bogus"]).status.code(), Some(2));
}

#[test]
fn selfcheck_runs() {
    let out = run(&["selfcheck", "--cases", "0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for suite in qblock::selfcheck::suite_names() {
        assert!(text.contains(suite), "{suite} not listed");
    }
    let a = run(&["selfcheck", "--cases", "6", "--seed", "11", "--format", "json"]);
    let b = run(&["selfcheck", "--cases", "6", "--seed", "11", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
