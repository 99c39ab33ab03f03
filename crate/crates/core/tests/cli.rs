mod common;

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use common::GOLDEN;

fn qm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qm"))
        .args(args)
        .env("QM_OFFLINE", "1")
        .output()
        .expect("qm runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qm(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compare against a golden file; `QM_BLESS=1` rewrites it instead.
fn assert_golden(name: &str, args: &[&str]) {
    let got = stdout(args);
    let path = golden_path(name);
    if std::env::var_os("QM_BLESS").is_some() {
        fs::write(&path, &got).unwrap();
    }
    let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name}");
}

#[test]
fn golden_outputs() {
    for (name, args) in GOLDEN {
        assert_golden(name, args);
    }
}

#[test]
fn repeated_runs_are_identical() {
    for (_, args) in GOLDEN {
        assert_eq!(qm(args).stdout, qm(args).stdout, "{args:?}");
    }
}

#[test]
fn enumerated_walks_survive_map_and_unmap() {
    let listing = stdout(&["enum", "--family", "s-walks", "--length", "3", "--no-header"]);
    for walk in listing.lines() {
        let marked = stdout(&["map", walk]);
        let back = stdout(&["unmap", marked.trim()]);
        assert_eq!(back, format!("{walk}\tvalid=true\n"));
        let plain = stdout(&["forget", marked.trim()]);
        assert_eq!(stdout(&["mark", plain.trim()]), marked);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(qm(&["map", "UX"]).status.code(), Some(1));
    assert_eq!(qm(&["map", "D"]).status.code(), Some(1));
    assert_eq!(qm(&["mark", "urdr"]).status.code(), Some(0));
    assert_eq!(qm(&["mark", "dr"]).status.code(), Some(1));
    assert_eq!(qm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qm(&["verify", "--suite", "nope", "--length", "2"]).status.code(), Some(2));
    assert_eq!(qm(&["tableau", "--to-walk", "1,3,2"]).status.code(), Some(1));
}

#[test]
fn unmap_reports_invalid_walks() {
    assert_eq!(stdout(&["unmap", "fr."]), "A\tvalid=false\n");
}

#[test]
fn counts_from_the_command_line() {
    assert_eq!(stdout(&["count", "--family", "s-walks", "--length", "8"]), "82688\n");
    assert_eq!(
        stdout(&["count", "--family", "s-walks", "--length", "8", "--shard-depth", "3"]),
        "82688\n"
    );
    assert_eq!(stdout(&["count", "--family", "motzkin", "--length", "10"]), "2188\n");
}

#[test]
fn tableau_round_trip_on_the_command_line() {
    assert_eq!(stdout(&["tableau", "--from-walk", "UUAL"]), "1,2/3/4\n");
    assert_eq!(stdout(&["tableau", "--to-walk", "1,2/3/4"]), "UUAL\n");
    let t = stdout(&["tableau", "--from-motzkin", "uffd"]);
    assert_eq!(stdout(&["tableau", "--to-motzkin", t.trim()]), "uffd\n");
}

#[test]
fn seq_id_offline() {
    let out = stdout(&["seq-id", "1,1,2,4,9,21,51"]);
    assert!(out.starts_with("A001006\t"), "{out}");
    let out = qm(&["seq-id", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seq_id_online_failure_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_qm"))
        .args(["seq-id", "1,1,2,4,9", "--online", "--endpoint", "http://127.0.0.1:9/search"])
        .env_remove("QM_OFFLINE")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
