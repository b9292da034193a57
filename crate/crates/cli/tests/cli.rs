//! End-to-end CLI tests with golden outputs.

use std::io::Write;
use std::process::{Command, Output};

fn permtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permtab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = permtab(args);
    assert!(
        out.status.success(),
        "permtab {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn psi_worked_example() {
    assert_eq!(stdout(&["psi", "215896374"]), "162593847\n");
    assert_eq!(stdout(&["psi-inv", "162593847"]), "215896374\n");
}

#[test]
fn space_and_comma_separated_permutations() {
    assert_eq!(stdout(&["psi", "2", "1", "5", "8", "9", "6", "3", "7", "4"]), "162593847\n");
    assert_eq!(stdout(&["psi", "2,1,5,8,9,6,3,7,4"]), "162593847\n");
}

#[test]
fn phi_inv_prints_tableau_text() {
    assert_eq!(stdout(&["phi-inv", "514263"]), "3 6\n111\n01\n1\n");
}

#[test]
fn phi_round_trips_through_files() {
    for perm in ["514263", "74836215", "1", "4213"] {
        let tableau = stdout(&["phi-inv", perm]);
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(tableau.as_bytes()).unwrap();
        let path = file.path().to_str().unwrap().to_string();
        assert_eq!(stdout(&["phi", &path]), format!("{perm}\n"));
    }
}

#[test]
fn count_pattern_worked_example() {
    assert_eq!(stdout(&["count-pattern", "416235", "2-31"]), "1\n");
    assert_eq!(stdout(&["count-pattern", "416235", "2-3-1"]), "2\n");
}

#[test]
fn poly_golden_strings() {
    assert_eq!(stdout(&["poly", "D", "2", "3"]), "2*p*q + q^2 + q*r\n");
    assert_eq!(stdout(&["poly", "F", "3,2"]), "3*p^2*q^3 + 3*p*q^4 + q^5\n");
    assert_eq!(stdout(&["poly", "Ehat", "2", "4"]), "q^2 + 4*q + 6\n");
    assert_eq!(stdout(&["poly", "B", "4", "2"]), "3*q^2 + 5*q + 3\n");
    assert_eq!(stdout(&["poly", "E", "1", "5"]), "q^4\n");
}

#[test]
fn poly_json_terms() {
    assert_eq!(
        stdout(&["--format", "json", "poly", "D", "1", "3"]),
        "[{\"p\":0,\"q\":2,\"r\":0,\"y\":0,\"coeff\":\"1\"}]\n"
    );
}

#[test]
fn series_coefficient_table() {
    let out = stdout(&["series", "Dk", "1", "--order", "3"]);
    assert_eq!(out, "x^0: 0\nx^1: 1\nx^2: q\nx^3: q^2\n");
    let cf = stdout(&["series", "Ehat-cf", "--order", "2"]);
    assert_eq!(cf, "x^0: 1\nx^1: y\nx^2: y^2 + y\n");
}

#[test]
fn stats_json_is_byte_stable() {
    let first = stdout(&["stats", "perm", "4213"]);
    let second = stdout(&["stats", "perm", "4213"]);
    assert_eq!(first, second);
    let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(parsed["wex"], 2);
    assert_eq!(parsed["des"], 2);
    assert_eq!(parsed["maj"], 3);
    // Field order is fixed by the struct definition.
    assert!(first.starts_with("{\"n\":4,\"wex\":2,\"des\":2,"));
}

#[test]
fn dist_csv_golden() {
    assert_eq!(
        stdout(&["dist", "des,2-31", "--n", "3", "--csv"]),
        "des,2-31,count\n0,0,1\n1,0,3\n1,1,1\n2,0,1\n"
    );
}

#[test]
fn verify_exit_codes() {
    let ok = permtab(&["verify", "excedance-transport", "--n", "4"]);
    assert!(ok.status.success());
    let conjecture = permtab(&["verify", "essential-ones", "--n", "4"]);
    assert!(conjecture.status.success(), "conjecture checks never gate");
    let unknown = permtab(&["verify", "no-such-check", "--n", "4"]);
    assert!(!unknown.status.success());
    let too_big = permtab(&["verify", "identities", "--n", "11"]);
    assert!(!too_big.status.success());
}

#[test]
fn verify_json_report() {
    let out = stdout(&["--format", "json", "verify", "identities", "--n", "4"]);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed["check"], "identities");
    assert_eq!(parsed["status"], "PASS");
}

#[test]
fn malformed_inputs_exit_nonzero() {
    assert!(!permtab(&["psi", "1231"]).status.success());
    assert!(!permtab(&["count-pattern", "123", "2-41"]).status.success());
    assert!(!permtab(&["phi", "/nonexistent/tableau.txt"]).status.success());
}

#[test]
fn invalid_tableau_is_rejected_by_phi() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"1 2\n0\n").unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let out = permtab(&["phi", &path]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 0"), "diagnostic names the column: {err}");
}
