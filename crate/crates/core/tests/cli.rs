use std::path::PathBuf;
use std::process::Command;

use tempfile::TempDir;

use rechar::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rechar").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "a11.json", r#"{"n": 2, "rows": [["0", "1"], ["1", "0"]]}"#);
    let bad = write(&dir, "diag12.json", r#"{"n": 2, "rows": [["1", "0"], ["0", "2"]]}"#);
    let (code, out, _) = call(&["verify", "--n", "2", "--input", good.to_str().unwrap(), "--q", "2"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = call(&["verify", "--n", "2", "--input", bad.to_str().unwrap(), "--q", "2"]);
    assert_eq!(code, 1);
    assert!(out.contains("eq5"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "a.json", r#"{"n": 2, "rows": [["0", "1"], ["1", "0"]]}"#);
    let path = good.to_str().unwrap();
    for args in [
        vec!["verify", "--n", "2", "--input", path, "--q", "1"],
        vec!["verify", "--n", "2", "--input", path, "--q", "0"],
        vec!["verify", "--n", "3", "--input", path, "--q", "2"],
        vec!["verify", "--n", "2", "--input", "/nonexistent.json", "--q", "2"],
        vec!["oracle", "--n", "4", "--q", "2"],
        vec!["families", "--n", "2", "--unknown"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn families_json() {
    let (code, out, _) = call(&["families", "--n", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert_eq!(v[0]["type"], 1);
    // byte-for-byte deterministic
    assert_eq!(call(&["families", "--n", "2", "--json"]).1, out);
}

#[test]
fn braid_json_has_n_and_square_rows() {
    let (code, out, _) = call(&["braid", "--n", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["rows"][1][1], "q + -1*q^-1");
}

#[test]
fn classify_reports_family_and_violation() {
    let dir = TempDir::new().unwrap();
    let a = write(
        &dir,
        "a.json",
        r#"{"n": 3, "rows": [["3", "0", "1"], ["0", "2", "0"], ["-2", "0", "0"]]}"#,
    );
    let (code, out, _) = call(&["classify", "--n", "3", "--input", a.to_str().unwrap(), "--q", "5/2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "type1");
    assert_eq!((v["b_minus"].as_u64(), v["b_plus"].as_u64()), (Some(1), Some(3)));
    assert_eq!((v["lambda"].as_str(), v["mu"].as_str()), (Some("2"), Some("1")));

    let d = write(&dir, "d.json", r#"{"n": 2, "rows": [["1", "0"], ["0", "2"]]}"#);
    let (code, out, _) = call(&["classify", "--n", "2", "--input", d.to_str().unwrap(), "--q", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("not_a_character"));
}

#[test]
fn spectrum_symbolic_and_numeric() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", r#"{"type": 1, "n": 3, "b_minus": 1, "b_plus": 3}"#);
    let (code, out, _) = call(&["spectrum", "--family", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"value": "m", "mult": 1}, {"value": "l", "mult": 2}])
    );

    let p = write(&dir, "p.json", r#"{"lambda": "2", "mu": "2", "y": {"1": "1"}}"#);
    let (code, out, _) = call(&[
        "spectrum",
        "--family",
        f.to_str().unwrap(),
        "--params",
        p.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!([{"value": "2", "mult": 3}]));

    let bad = write(&dir, "bad.json", r#"{"lambda": "2", "y": {"1": "1"}}"#);
    assert_eq!(
        call(&[
            "spectrum",
            "--family",
            f.to_str().unwrap(),
            "--params",
            bad.to_str().unwrap()
        ])
        .0,
        2
    );
}

#[test]
fn oracle_n2_is_complete() {
    let (code, out, _) = call(&["oracle", "--n", "2", "--q", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["q"], "3");
    assert!(v["missing"].as_array().unwrap().is_empty());
    assert!(v["extra"].as_array().unwrap().is_empty());
}

#[test]
fn examples_all_verify() {
    let (code, out, _) = call(&["examples"]);
    assert_eq!(code, 0);
    assert!(out.contains("A^{2,2}") && out.contains("D_6") && out.contains("P_6"));
    assert!(!out.contains("false"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rechar");
    let ok = Command::new(bin).args(["families", "--n", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["braid"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
