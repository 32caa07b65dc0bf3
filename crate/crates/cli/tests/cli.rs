use std::io::Write;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use omnisig::enumeration::parse_json_records;
use omnisig::genvec::{verify, Verification, Witness};
use omnisig::groups::FiniteGroup;
use omnisig::{enumerate_potential, Genus, Signature};

fn omnisig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omnisig"))
        .args(args)
        .env_remove("OMNISIG_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_genus_two() {
    let start = Instant::now();
    let out = omnisig(&["enumerate", "--genus", "2", "--format", "text"]);
    assert!(start.elapsed() < Duration::from_secs(1));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 34);
    assert_eq!(lines[0], "(0; 2,3,7)");
    assert_eq!(lines[33], "(2; -)");
    assert!(lines.contains(&"(0; 2,2,2,2,2)"));
}

#[test]
fn enumerate_json_round_trips() {
    let out = omnisig(&["enumerate", "--genus", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let records = parse_json_records(&stdout(&out)).unwrap();
    let parsed: Vec<Signature> = records.iter().map(|r| r.signature().unwrap()).collect();
    let genus = Genus::new(5).unwrap();
    assert_eq!(parsed, enumerate_potential(genus).signatures());
    for r in &records {
        assert_eq!(
            r.signature().unwrap().required_group_order(genus),
            Some(r.required_order)
        );
    }
}

#[test]
fn enumerate_csv_header() {
    let out = omnisig(&["enumerate", "--genus", "2", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("h,r,periods,required_order"));
    assert_eq!(text.lines().count(), 35);
}

#[test]
fn lattice_operations() {
    assert_eq!(stdout(&omnisig(&["lattice", "meet", "7", "9"])).trim(), "3");
    assert_eq!(
        stdout(&omnisig(&["lattice", "join", "7", "9"])).trim(),
        "25"
    );
    assert_eq!(
        stdout(&omnisig(&["lattice", "contains", "3", "5"])).trim(),
        "true"
    );
    assert_eq!(
        stdout(&omnisig(&["lattice", "contains", "4", "5"])).trim(),
        "false"
    );
}

#[test]
fn search_outcomes() {
    let out = omnisig(&["search", "--group", "D:6", "--signature", "(0; 2,6,6)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("definitive absence"));

    let out = omnisig(&[
        "search",
        "--group",
        "P:C:2,C:6",
        "--signature",
        "(0; 2,6,6)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let witness: Witness = serde_json::from_str(&stdout(&out)).unwrap();
    let group = FiniteGroup::direct_product(
        &FiniteGroup::cyclic(2).unwrap(),
        &FiniteGroup::cyclic(6).unwrap(),
    )
    .unwrap();
    let v = witness.to_vector(&group).unwrap();
    assert_eq!(
        verify(&group, &v, &witness.signature),
        Ok(Verification::Pass)
    );

    let out = omnisig(&[
        "search",
        "--group",
        "D:6",
        "--signature",
        "(0; 2,6,6)",
        "--nodes",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_commands() {
    let out = omnisig(&["verify", "omnipersistent", "--from", "2", "--to", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["genera"].as_array().unwrap().len(), 99);

    let out = omnisig(&["verify", "lattice", "--max-genus", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["matches"] == true));

    assert_eq!(
        omnisig(&["verify", "lattice", "--max-genus", "1000"])
            .status
            .code(),
        Some(64)
    );
}

#[test]
fn usage_errors_exit_64_without_output() {
    for args in [
        &["enumerate", "--genus", "1"][..],
        &["enumerate", "--genus", "two"],
        &["search", "--group", "Q:3", "--signature", "(0; 2,3,7)"],
        &["search", "--group", "C:10", "--signature", "(0; 1,3)"],
        &["lattice", "meet", "7"],
        &["frobnicate"],
        &["realize", "--genus", "2", "--complete-orders", "x"],
    ] {
        let out = omnisig(args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(omnisig(&["--help"]).status.code(), Some(0));
}

#[test]
fn catalog_files() {
    let mut good = tempfile::NamedTempFile::new().unwrap();
    write!(
        good,
        r#"{{"groups": [{{"name": "Q8", "order": 8, "degree": 8,
            "generators": [[2,5,4,7,6,1,8,3],[3,8,5,2,7,4,1,6]]}}]}}"#
    )
    .unwrap();
    let path = good.path().to_str().unwrap().to_string();
    let out = omnisig(&["catalog", "validate", &path]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // the quaternion group supplies (0; 4,4,4) in genus 2
    let out = omnisig(&[
        "search",
        "--group",
        &format!("file:{path}#Q8"),
        "--signature",
        "(0; 4,4,4)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = omnisig(&[
        "realize",
        "--genus",
        "2",
        "--catalog",
        &path,
        "--complete-orders",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["complete_orders_flag"], "8");
    let record = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["signature"] == "(0; 4,4,4)")
        .unwrap();
    assert_eq!(record["status"], "realized");
    assert_eq!(record["witness"]["group"], "Q8");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(
        bad,
        r#"{{"groups": [{{"name": "X", "order": 5, "degree": 3, "generators": [[2,3,1]]}}]}}"#
    )
    .unwrap();
    let bad_path = bad.path().to_str().unwrap();
    assert_eq!(
        omnisig(&["catalog", "validate", bad_path]).status.code(),
        Some(65)
    );
    assert_eq!(
        omnisig(&["realize", "--genus", "2", "--catalog", bad_path])
            .status
            .code(),
        Some(65)
    );
    assert_eq!(
        omnisig(&["catalog", "validate", "/nonexistent/catalog.json"])
            .status
            .code(),
        Some(65)
    );
    let out = omnisig(&[
        "search",
        "--group",
        "file:/nonexistent.json#G",
        "--signature",
        "(0; 2,3,7)",
    ]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn catalog_from_environment() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"groups": [{{"name": "Q8", "order": 8, "degree": 8,
            "generators": [[2,5,4,7,6,1,8,3],[3,8,5,2,7,4,1,6]]}}]}}"#
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_omnisig"))
        .args(["realize", "--genus", "2", "--format", "csv"])
        .env("OMNISIG_CATALOG", file.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out)
        .lines()
        .any(|l| l == "\"(0; 4,4,4)\",realized,Q8,8"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["realize", "--genus", "3"][..],
        &["enumerate", "--genus", "9", "--format", "json"],
    ] {
        let one = omnisig(&[&["--jobs", "1"][..], args].concat());
        let many = omnisig(&[&["--jobs", "4"][..], args].concat());
        let again = omnisig(args);
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, many.stdout);
        assert_eq!(one.stdout, again.stdout);
    }
}
