//! Drives the installed binary end to end.

use std::process::Command;

fn lensprod(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lensprod"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn ring_over_rationals() {
    let (code, stdout, _) = lensprod("--n 1,1 --t inf ring --coeff Q");
    assert_eq!(code, 0);
    assert!(stdout.contains("zero-divisor cup length: 3"), "{stdout}");
}

#[test]
fn validation_exit_codes() {
    let (code, stdout, stderr) = lensprod("--n 2,1 --t 4 ring");
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.starts_with("error:"), "{stderr}");
    assert_eq!(lensprod("--n 1 --t inf oracle").0, 3);
    assert_eq!(lensprod("--n 1 --t 4 steenrod --coeff F:3").0, 3);
}

#[test]
fn oracle_and_report() {
    let (code, stdout, _) = lensprod("--n 1 --t 3 oracle --json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["matches"], true);

    let (code, a, _) = lensprod("--n 0,1,2 --t 6 report --json");
    assert_eq!(code, 0);
    assert_eq!(lensprod("--n 0,1,2 --t 6 report --json").1, a);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["input"]["coeff"], "F2");
    assert_eq!(v["oracle"]["checked"], true);
}

#[test]
fn tseries_without_a_tuple() {
    let (code, stdout, _) = lensprod("--t 3 tseries --law multiplicative --coeff F3 --precision 4");
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "[3](z) = z^3 + O(z^5)");
}
