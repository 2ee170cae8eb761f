use std::process::Command;

fn whom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_whom")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn homology_line() {
    let (code, out, _) = whom(&["homology", &fixture("kite"), "--dim", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "H_1^v = R^1 (+) R/(pi^1) (+) R/(pi^4)");
}

#[test]
fn pairing_rows() {
    let (_, out, _) = whom(&["pairing", &fixture("kite"), "--dim", "1"]);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("(A")).collect();
    assert_eq!(rows, ["(AB, ABC, 1)", "(AC, ACD, 4)"]);
}

#[test]
fn bistruct_report() {
    let (code, out, _) = whom(&["bistruct", "--s", "((..))", "--t", "......"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("S ((..))\nT ......\nloop"));
    assert!(out.contains("crossing components: 0"));
}

#[test]
fn exit_statuses() {
    assert_eq!(whom(&[]).0, 2);
    assert_eq!(whom(&["pairing", &fixture("kite"), "--dim", "x"]).0, 2);
    assert_eq!(whom(&["homology", "missing.json"]).0, 1);
    let (code, _, err) = whom(&["theta", &fixture("kite"), "--field", "fp:7"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    assert_eq!(whom(&["check", &fixture("torus"), "--oracle"]).0, 0);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["basis", &fixture("torus"), "--order", "5", "--json"];
    assert_eq!(whom(&args), whom(&args));
}
