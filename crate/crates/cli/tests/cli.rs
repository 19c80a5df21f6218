use std::path::Path;
use std::process::{Command, Output};

use paradim::corpus::DataSource;

fn paradim(args: &[&str]) -> Output {
    paradim_with_env(args, None)
}

fn paradim_with_env(args: &[&str], data_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_paradim"));
    cmd.args(args).env_remove("PARADIM_DATA_DIR");
    if let Some(dir) = data_dir {
        cmd.env("PARADIM_DATA_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn copy_embedded_data(dir: &Path) {
    for name in DataSource::embedded_names() {
        let text = DataSource::Embedded.read(name).unwrap();
        std::fs::write(dir.join(name), text).unwrap();
    }
}

#[test]
fn dim_weight_ten_level_seven() {
    let out = paradim(&["dim", "--p", "7", "--k", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "p=7 k=10 j=0 space=S plus=7 minus=0 total=7\n");
}

#[test]
fn dim_weight_three_level_two_vanishes() {
    let out = paradim(&["dim", "--p", "2", "--k", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["plus"], 0);
    assert_eq!(v["minus"], 0);
    assert_eq!(v["source"], "formula");
}

#[test]
fn dim_odd_j_notes_vanishing() {
    let out = paradim(&["dim", "--p", "11", "--k", "3", "--j", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("plus=0 minus=0"), "{text}");
    assert!(text.contains("odd j"), "{text}");
}

#[test]
fn dim_csv_has_header_and_one_row() {
    let out = paradim(&["dim", "--p", "7", "--k", "6", "--space", "M", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("p,k,j,space,plus,minus,total,trace"));
    assert!(lines[1].starts_with("7,6,0,M,"));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(paradim(&["dim", "--p", "7"]).status.code(), Some(2));
    assert_eq!(
        paradim(&["dim", "--p", "7", "--k", "4", "--bogus"]).status.code(),
        Some(2)
    );
    let not_prime = paradim(&["dim", "--p", "10", "--k", "4"]);
    assert_eq!(not_prime.status.code(), Some(2));
    assert!(stderr(&not_prime).contains("10 is not prime"));
    let low_weight = paradim(&["dim", "--p", "7", "--k", "2"]);
    assert_eq!(low_weight.status.code(), Some(2));
    assert!(stderr(&low_weight).contains("k >= 3"));
}

#[test]
fn missing_level_one_data_exits_three() {
    let out = paradim(&["dim", "--p", "11", "--k", "5", "--j", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("j=6"));
    let a_space = paradim(&["dim", "--p", "11", "--k", "5", "--j", "2", "--space", "a"]);
    assert_eq!(a_space.status.code(), Some(3));
}

#[test]
fn table_weight_eight_small_primes() {
    let out = paradim(&[
        "table", "--k", "8", "--pmax", "47", "--rows", "S+,S-", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,S+,S-");
    assert_eq!(lines.len(), 1 + 15);
    assert!(lines.contains(&"7,4,0"), "{text}");
}

#[test]
fn table_without_primes_is_empty() {
    let out = paradim(&["table", "--k", "4", "--pmax", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn table_json_keeps_row_order() {
    let out = paradim(&["table", "--k", "10", "--pmin", "7", "--pmax", "7", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"p":7,"k":10,"H":6,"R":-6,"M+":0,"M-":6,"s2+":0,"s2-":0,"S+":7,"S-":0}"#
    );
}

#[test]
fn hilbert_fit_recovers_numerator() {
    let out = paradim(&["hilbert", "--p", "5", "--space", "M", "--nmax", "40", "--fit"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("numerator: 1 + t^11"), "{text}");
    assert!(text.contains("denominator: 2 3 4 5"), "{text}");
}

#[test]
fn hilbert_fit_needs_enough_terms() {
    let out = paradim(&["hilbert", "--p", "5", "--space", "S+", "--nmax", "20", "--fit"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--nmax"));
}

#[test]
fn search_zero3_small_bound() {
    let out = paradim(&["search", "zero3", "--pmax", "30", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "p\n2\n3\n5\n7\n11\n13\n17\n19\n23\n29\n");
}

#[test]
fn bias_zero_pairs() {
    let out = paradim(&["bias", "--pmax", "11", "--kmax", "20", "--format", "json"]);
    assert!(out.status.success());
    let pairs: Vec<(u64, i64)> = stdout(&out)
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            (v["p"].as_u64().unwrap(), v["k"].as_i64().unwrap())
        })
        .collect();
    assert_eq!(
        pairs,
        [
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (2, 9),
            (2, 13),
            (3, 3),
            (3, 4),
            (3, 5),
            (3, 7),
            (5, 3),
            (5, 4),
            (7, 3),
            (11, 3)
        ]
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--k", "6", "--pmax", "100", "--format", "json"];
    assert_eq!(paradim(&args).stdout, paradim(&args).stdout);
}

#[test]
fn verify_full_corpus_passes() {
    let out = paradim(&["verify", "--format", "csv"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let items = text.lines().count() - 1;
    assert!(items >= 400, "only {items} items");
    assert!(!text.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn verify_only_quaternion() {
    let out = paradim(&["verify", "--only", "quaternion"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let items: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert!(!items.is_empty());
    assert!(items.iter().all(|l| l.contains(" quaternion/")), "{text}");
    assert!(items.iter().any(|l| l.contains("quaternion/p2/")));
    assert!(items.iter().any(|l| l.contains("quaternion/p3/")));
}

#[test]
fn verify_rejects_unknown_group() {
    assert_eq!(paradim(&["verify", "--only", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_reports_corrupted_value() {
    let dir = tempfile::tempdir().unwrap();
    copy_embedded_data(dir.path());
    let path = dir.path().join("table_k10.csv");
    let table = std::fs::read_to_string(&path).unwrap();
    assert!(table.contains("\n7,S+,7\n"));
    std::fs::write(&path, table.replace("\n7,S+,7\n", "\n7,S+,8\n")).unwrap();

    let out = paradim_with_env(&["verify", "--only", "tables"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL tables/k10/p7/S+ expected=8 actual=7"), "{text}");
    assert!(stderr(&out).contains("tables/k10/p7/S+"));
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 1);
}

#[test]
fn verify_reports_missing_file() {
    let dir = tempfile::tempdir().unwrap();
    copy_embedded_data(dir.path());
    std::fs::remove_file(dir.path().join("quaternion_p3.csv")).unwrap();
    let out = paradim_with_env(&["verify", "--only", "quaternion"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL quaternion/quaternion_p3.csv"));
}
