use assert_cmd::Command;
use predicates::prelude::*;

fn dirac() -> Command {
    let mut c = Command::cargo_bin("dirac").unwrap();
    c.env_remove("DIRAC_MAX_RANK");
    c
}

#[test]
fn springer_table_csv_row() {
    dirac()
        .args(["springer-table", "--families", "so-odd", "--max", "2", "--format", "csv"])
        .assert()
        .success()
        .stdout(predicate::str::contains(r#""SO_e(4,5)",(X1^2-X2^2)(X3^2-X4^2)X3X4,Yes,"[3,2,2,1,1]",20"#));
}

#[test]
fn springer_table_json_is_an_array() {
    let out = dirac()
        .args(["springer-table", "--families", "sp-pq", "--max", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["springer"] == false));
}

#[test]
fn index_poly_sl2() {
    dirac()
        .args(["index-poly", "--group", "SL(2,R)", "--chamber", "1"])
        .assert()
        .success()
        .stdout(r#"{"vars":2,"terms":[{"exp":[0,0],"coeff":"-1"}]}"#.to_owned() + "\n");
}

#[test]
fn index_poly_bad_chamber() {
    dirac()
        .args(["index-poly", "--group", "SU(2,1)", "--chamber", "7"])
        .assert()
        .code(2);
}

#[test]
fn char_poly_factor() {
    let out = dirac()
        .args(["char-poly", "--n", "4", "--i", "2", "--factor"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let forms: Vec<&str> = v["factorization"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["form"].as_str().unwrap())
        .collect();
    assert_eq!(forms, ["X1 - X2", "X3 - X4"]);
}

#[test]
fn gcd_matches_closed_form() {
    dirac()
        .args(["gcd", "--n", "4", "--i", "2", "--format", "csv"])
        .assert()
        .success()
        .stdout("X1,X2,X3,X4,coeff\n1,0,1,0,1\n1,0,0,1,-1\n0,1,1,0,-1\n0,1,0,1,1\n");
}

#[test]
fn verify_exit_codes() {
    dirac().args(["verify", "--suite", "sl2"]).assert().success();
    dirac()
        .args(["verify", "--suite", "nope"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown suite"));
}

#[test]
fn usage_errors() {
    dirac().args(["springer-table", "--format", "xml"]).assert().code(2);
    dirac().args(["springer-table", "--families", "e8"]).assert().code(2);
    dirac().args(["char-poly", "--n", "4"]).assert().code(2);
    dirac().args(["char-poly", "--n", "4", "--i", "9"]).assert().code(2);
}

#[test]
fn rank_cap_from_env() {
    dirac()
        .env("DIRAC_MAX_RANK", "2")
        .args(["springer-table", "--families", "su", "--max", "3"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("cap"));
    dirac()
        .args(["--max-rank", "1", "index-poly", "--group", "SU(2,1)"])
        .assert()
        .code(1);
}

#[test]
fn emit_roundtrip() {
    let dir = std::env::temp_dir().join(format!("dirac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.json");
    let out = dirac()
        .args(["springer-table", "--families", "sp-real", "--max", "3"])
        .output()
        .unwrap();
    std::fs::write(&path, &out.stdout).unwrap();
    dirac()
        .args(["emit", "--input", path.to_str().unwrap()])
        .assert()
        .success()
        .stdout(String::from_utf8(out.stdout).unwrap());
    dirac()
        .args(["emit", "--input", path.to_str().unwrap(), "--format", "latex"])
        .assert()
        .success()
        .stdout(predicate::str::contains(r"$Sp(6,\mathbb{R})$ & $(X_{1}-X_{2})(X_{1}-X_{3})(X_{2}-X_{3})$ & Yes & $[2^{3}]$ & $12$"));
    dirac()
        .args(["emit", "--input", "-"])
        .write_stdin(r#"{"vars":1,"terms":[{"exp":[2],"coeff":"1/2"}]}"#)
        .assert()
        .success()
        .stdout(r#"{"vars":1,"terms":[{"exp":[2],"coeff":"1/2"}]}"#.to_owned() + "\n");
    std::fs::remove_dir_all(&dir).ok();
}
