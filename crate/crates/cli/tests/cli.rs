use std::path::Path;
use std::process::{Command, Output};

use superpi_cli::{exit, exit_code_for};
use superpi_core::constructions::build_family;
use superpi_core::{from_json, FamilyTag};

fn superpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpi")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn build_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = superpi(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn build_writes_interchange_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_to(dir.path(), "a.json", &["--family", "mhl-t", "--h", "2", "--l", "1"]);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["dim"], 9);
    assert_eq!(doc["labels"].as_array().unwrap().len(), 9);
    assert_eq!(doc["wedderburn"]["blocks"][0]["family"], "MHL_T");
}

#[test]
fn build_reports_dims_and_rejects_bad_parameters() {
    let o = superpi(&["build", "--family", "mn-cmn", "--n", "1", "--sign", "minus", "--diamond", "t"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1, 0, 0, 1)"));
    assert_eq!(code(&superpi(&["build", "--family", "mhh-s", "--h", "0"])), 1);
    assert_eq!(code(&superpi(&["build", "--family", "mhl-t"])), 1);
    assert_eq!(code(&superpi(&["no-such-command"])), 1);
}

#[test]
fn round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (args, tag) in [
        (vec!["--family", "mhl-exc", "--h", "1", "--l", "1"], FamilyTag::MhlExc { h: 1, l: 1 }),
        (vec!["--family", "mn-cmn-exc", "--n", "1"], FamilyTag::MnCmnExc { n: 1 }),
        (vec!["--family", "mhh-s", "--h", "1"], FamilyTag::MhhS { h: 1 }),
    ] {
        let path = build_to(dir.path(), "r.json", &args);
        let parsed = from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert!(parsed.validate().is_empty());
        assert_eq!(parsed, build_family(tag).unwrap());
    }
}

#[test]
fn ut_prints_layout_and_radical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("u.json").to_string_lossy().into_owned();
    let o = superpi(&[
        "ut", "--component", "MHL_T(1,0)", "--component", "MHL_T(1,0)", "--grading", "0,1", "--out", &out,
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("dim 4, radical dim 2"), "{text}");
    // row k = 2: s_2 = 1 and η_2 = s_1 + s_2 = 2
    assert!(text.lines().any(|l| l == "2\t1\t2\t2..2"), "{text}");
    let alg = from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(alg.dim(), 4);

    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"components": ["MHL_T(1,0)", "MHL_T(1,0)"], "grading": [0, 1]}"#).unwrap();
    let o = superpi(&["ut", "--spec", spec.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(from_json(&stdout(&o)).unwrap(), alg);

    let o = superpi(&["ut", "--component", "MHL_T(1,0)", "--component", "MHL_T(1,0)", "--grading", "0"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn analysis_rows() {
    let dir = tempfile::tempdir().unwrap();
    let a = build_to(dir.path(), "m.json", &["--family", "mhl-t", "--h", "1", "--l", "1"]);
    let o = superpi(&["threshold", &a, "--kind", "y+", "--cap", "8"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("check,subject,kind,n,expected,actual,status\n"));
    assert!(text.contains("y+,3"), "{text}");

    let o = superpi(&["codim", &a, "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("codim,m.json,graded,1,,3,ok"));
    assert!(stdout(&o).contains("codim_root,m.json,graded,2,,3.605551,ok"));

    let e = build_to(dir.path(), "e.json", &["--family", "mhl-exc", "--h", "1", "--l", "1"]);
    let o = superpi(&["exponent", &e]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("exponent,e.json,,,,8,ok"));

    let o = superpi(&["identity", &a, "--gamma", "3,1,2,2"]);
    assert!(stdout(&o).contains(",identity,ok"));
    let o = superpi(&["identity", &a, "--rank", "2", "--kind", "y+"]);
    assert!(stdout(&o).contains(",violated,ok"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a = build_to(dir.path(), "m.json", &["--family", "mhl-t", "--h", "1", "--l", "1"]);
    assert_eq!(code(&superpi(&["codim", &a, "--n", "7"])), 2);
    assert_eq!(code(&superpi(&["--cap-evals", "10", "codim", &a, "--n", "4"])), 2);
    assert_eq!(code(&superpi(&["--mod-p", "7", "dims", &a])), 1);
    assert_eq!(code(&superpi(&["--mod-p", "2147483647", "codim", &a, "--n", "3"])), 0);
    assert_eq!(code(&superpi(&["dims", "/nonexistent.json"])), 1);

    // declare the odd unit e12 even; products with e21 break the grading
    let text = std::fs::read_to_string(&a).unwrap();
    let mut broken: serde_json::Value = serde_json::from_str(&text).unwrap();
    broken["grading"][1] = serde_json::json!(0);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, broken.to_string()).unwrap();
    assert_eq!(code(&superpi(&["dims", bad.to_str().unwrap()])), 1);

    let internal = anyhow::Error::from(superpi_core::Error::Internal("mismatch".into()));
    assert_eq!(exit_code_for(&internal), exit::INTERNAL);
    let cap = anyhow::Error::from(superpi_core::Error::ThresholdNotFound { cap: 2 });
    assert_eq!(exit_code_for(&cap), exit::CAP);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = build_to(dir.path(), "m.json", &["--family", "mhl-exc", "--h", "1", "--l", "1"]);
    let run = |name: &str, args: &[&str]| {
        let out = dir.path().join(name).to_string_lossy().into_owned();
        let mut full = vec!["--seed", "7", "--out", &out];
        full.extend_from_slice(args);
        assert_eq!(code(&superpi(&full)), 0);
        std::fs::read(out).unwrap()
    };
    assert_eq!(run("c1.csv", &["codim", &a, "--n", "3"]), run("c2.csv", &["codim", &a, "--n", "3"]));
    assert_eq!(
        run("t1.csv", &["threshold", &a, "--kind", "z+", "--cap", "4"]),
        run("t2.csv", &["threshold", &a, "--kind", "z+", "--cap", "4"])
    );
    assert_eq!(run("v1.csv", &["verify-paper", "--suite", "dims"]), run("v2.csv", &["verify-paper", "--suite", "dims"]));
}

#[test]
fn verification_suites_pass() {
    for suite in ["dims", "counterexamples", "peirce", "exponent"] {
        let o = superpi(&["verify-paper", "--suite", suite]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains(",fail"));
    }
    let o = superpi(&["verify-paper", "--suite", "counterexamples"]);
    let text = stdout(&o);
    for name in ["one_sided(MHL_T(1,1))", "tensor(MHL_T(1,1),noncommutative)"] {
        let row = text.lines().find(|l| l.contains("violates_gamma") && l.contains(name)).unwrap();
        assert!(row.ends_with(",true,true,pass"), "{row}");
    }
}
