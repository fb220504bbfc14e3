use std::process::Command;

use udbound::cli::{self, ResultDocument};

fn udbound(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_udbound"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn table_matches_golden_file() {
    let golden = include_str!("golden/table.txt");
    let rows = cli::cmd_table(8).unwrap();
    assert_eq!(cli::table_text(&rows), golden);
    let (code, out) = udbound(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden);
}

#[test]
fn table_json_rows() {
    let (code, out) = udbound(&["table", "--max-rank", "4", "--json"]);
    assert_eq!(code, 0);
    let rows: Vec<cli::TableRow> = serde_json::from_str(&out).unwrap();
    let f4 = rows.iter().find(|r| r.ty == "F4").unwrap();
    assert_eq!((f4.one_chain.degree, f4.combined.degree, f4.cd_upper_bound), (10, 11, 13));
    assert!(rows.iter().all(|r| !r.ty.starts_with('E')));
}

#[test]
fn bound_json_feeds_back_into_verify() {
    let (code, out) = udbound(&["bound", "E8", "--json"]);
    assert_eq!(code, 0);
    let doc = ResultDocument::from_json(&out).unwrap();
    assert_eq!((doc.ud_lower_bound, doc.cd_upper_bound), (34, Some(86)));
    assert!(doc.verified);
    let (code, _) = udbound(&[
        "verify",
        "E8",
        "--monomial",
        &doc.certificate.monomial_text(),
        "--word",
        &doc.certificate.word_text(),
    ]);
    assert_eq!(code, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(udbound(&["bound", "F4"]).0, 0);
    assert_eq!(udbound(&["bound", "E6^2/mu3"]).0, 0);
    assert_eq!(udbound(&["bound", "D7:hs"]).0, 2);
    assert_eq!(udbound(&["verify", "C3", "--monomial", "x3", "--word", "2"]).0, 1);
    assert_eq!(udbound(&["verify", "C3", "--monomial", "x3", "--word", "3"]).0, 0);
    let out = Command::new(env!("CARGO_BIN_EXE_udbound"))
        .args(["brute", "E6"])
        .env(cli::GROUP_CAP_ENV, "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn brute_and_schubert_commands() {
    let (code, out) = udbound(&["brute", "C3", "--json"]);
    assert_eq!(code, 0);
    let doc = ResultDocument::from_json(&out).unwrap();
    assert_eq!(doc.ud_lower_bound, 9);
    let (code, out) = udbound(&["schubert", "C3", "--poly", "x1^5*x2^3*x3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.trim_start().starts_with("1 "));
}

#[test]
fn check_command_is_seeded() {
    let (code, a) = udbound(&["check", "--seed", "3", "--cases", "50"]);
    assert_eq!(code, 0);
    let (_, b) = udbound(&["check", "--seed", "3", "--cases", "50"]);
    assert_eq!(a, b);
    assert!(a.lines().all(|l| l.starts_with("PASS")));
}
