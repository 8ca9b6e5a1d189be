use std::process::{Command, Output};

use serde_json::Value;

fn qtcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn verdict(args: &[&str]) -> (i32, Value) {
    let out = qtcat(args);
    (
        out.status.code().unwrap(),
        serde_json::from_str(stdout(&out).trim()).unwrap(),
    )
}

#[test]
fn poly_json_matrix() {
    let out = qtcat(&["poly", "dyck", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["rows"], "t");
    assert_eq!(v["cols"], "q");
    let m = &v["matrix"];
    assert_eq!(m[0][0], 1);
    assert_eq!(m[1][1], 3);
    assert_eq!(m[1][3], 2);
    assert_eq!(m[2][2], 3);
    assert_eq!(m[3][3], 1);
    let total: i64 = m
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap())
        .map(|c| c.as_i64().unwrap())
        .sum();
    assert_eq!(total, 14);
}

#[test]
fn poly_csv_and_text() {
    let csv = stdout(&qtcat(&["poly", "motzkin", "4", "--format", "csv"]));
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("t\\q,0,1,"));
    assert!(lines.next().unwrap().starts_with("0,1,0"));
    let text = qtcat(&["poly", "dyck", "3"]);
    assert!(text.status.success());
    assert!(stdout(&text).contains('.'));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["poly", "sn", "5", "--format", "json"][..],
        &["check", "conjecture", "5"],
        &["gamma", "6"],
    ] {
        assert_eq!(qtcat(args).stdout, qtcat(args).stdout, "{args:?}");
    }
}

#[test]
fn checks_pass_with_sorted_keys() {
    for kind in [
        "recurrence",
        "carlitz",
        "cf",
        "corollary",
        "sbd",
        "sbd-b",
        "conjecture",
    ] {
        let (code, v) = verdict(&["check", kind, "5"]);
        assert_eq!(code, 0, "{kind}");
        assert_eq!(v["pass"], true);
        assert_eq!(v["witness"], Value::Null);
        assert_eq!(v["check"], kind);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}

#[test]
fn conjecture_reports_expansion() {
    let (_, v) = verdict(&["check", "conjecture", "5"]);
    assert_eq!(v["gammas"][0], "1");
    assert_eq!(
        v["gammas"][2],
        "q^4 + 2q^5 + 2q^6 + 3q^7 + 4q^8 + 3q^9 + q^10"
    );
}

#[test]
fn convert_path_and_permutation() {
    let out = stdout(&qtcat(&["convert", "path", "UUUDUUDDDD"]));
    assert!(out.contains("bk_fill: 35421\n"));
    assert!(out.contains("stump_fill: 54213\n"));
    assert!(out.contains("area: 8\n"));
    let out = stdout(&qtcat(&["convert", "suword", "bre"]));
    assert!(out.contains("word: bre\n"));
    let out = stdout(&qtcat(&["convert", "perm", "4321"]));
    assert!(out.contains("below_standard_cycle: true"));
    assert!(out.contains("inv: 6\n"));
    let out = stdout(&qtcat(&["convert", "partition", "{1,4}{2,3}"]));
    assert!(out.contains("partition: {1,4}{2,3}\n"));
    let out = stdout(&qtcat(&["convert", "partition", "{1,-1}{2}{-2}"]));
    assert!(out.contains("zero_block: {"));
}

#[test]
fn exit_codes() {
    assert_eq!(qtcat(&["poly", "dyck", "15"]).status.code(), Some(3));
    assert_eq!(qtcat(&["check", "sbd-b", "7"]).status.code(), Some(3));
    assert_eq!(qtcat(&["convert", "path", "UUD"]).status.code(), Some(2));
    assert_eq!(qtcat(&["convert", "perm", "1134"]).status.code(), Some(2));
    assert_eq!(qtcat(&["poly", "bogus", "3"]).status.code(), Some(2));
    assert_eq!(
        qtcat(&["identity", "catalan-b", "6"]).status.code(),
        Some(0)
    );
}

#[test]
fn help_lists_caps() {
    let help = stdout(&qtcat(&["check", "--help"]));
    assert!(help.contains("n <= 14"));
    assert!(help.contains("sbd-b n <= 6"));
    let help = stdout(&qtcat(&["poly", "--help"]));
    assert!(help.contains("ncb-rank n <= 7"));
}
