use std::process::{Command, Output};

use serde_json::{json, Value};

fn engel_lab(args: &[&str], cache: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_engel-lab"));
    match cache {
        Some(dir) => cmd.env("ENGEL_LAB_CACHE", dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn reduced_graph_of_d6_as_json() {
    let v = json_of(&engel_lab(&["graph", "D:6", "--kind", "reduced", "--format", "json"], None));
    assert_eq!(v["schema"], "engel-lab/1");
    assert_eq!(v["n"], 3);
    assert_eq!(v["edges"], json!([[0, 1], [0, 2], [1, 2]]));
}

#[test]
fn analyze_d24() {
    let v = json_of(&engel_lab(&["analyze", "D:24"], None));
    assert_eq!(v["shape"]["parts"], json!([4, 4, 4]));
    assert_eq!(v["surface"]["genus"], 3);
    assert_eq!(v["surface"]["classification"], "triple-toroidal");
    assert_eq!(v["spectrum"]["adjacency"]["spectrum"], json!([[-4, 2], [0, 9], [8, 1]]));
    assert_eq!(v["zagreb"]["m1"], 768);
}

#[test]
fn group_summary() {
    let v = json_of(&engel_lab(&["group", "S:4"], None));
    assert_eq!(v["order"], 24);
    assert_eq!(v["left_engel"].as_array().unwrap().len(), 4);
    assert_eq!(v["fitting"]["valid"], true);
    assert_eq!(v["soluble"], true);
    assert_eq!(v["nilpotent"], false);
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [&["group", "D:7"][..], &["group", "Z:3"], &["graph", "D:6", "--kind", "upside-down"], &["frobnicate"]] {
        let out = engel_lab(args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = engel_lab(&["group", "F:3:8"], None);
    assert!(String::from_utf8_lossy(&out.stderr).contains("F:3:8"));
}

#[test]
fn nilpotent_group_has_no_reduced_graph() {
    let out = engel_lab(&["graph", "Q:8"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_paper_exit_status_follows_failures() {
    let out = engel_lab(&["verify-paper", "--families", "F,DQ"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("claim_id,group,expected,computed,status\n"));
    assert!(!text.contains('\r'));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",pass")));

    let out = engel_lab(&["verify-paper", "--families", "P"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().skip(1).all(|l| l.starts_with("thm-bipar,") && l.ends_with(",fail")));
}

#[test]
fn verify_paper_marks_large_groups_skipped() {
    let out = engel_lab(&["verify-paper", "--families", "F", "--max-order", "30", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let records = v["records"].as_array().unwrap();
    assert!(records.iter().any(|r| r["group"] == "F:5:11" && r["status"] == "skipped"));
    assert!(records.iter().any(|r| r["group"] == "F:3:7" && r["status"] == "pass"));
}

#[test]
fn cache_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["analyze", "P:(C:3)x(D:6)"];
    let cold = engel_lab(&args, Some(dir.path()));
    assert!(dir.path().join("P_(C_3)x(D_6).json").exists());
    let warm = engel_lab(&args, Some(dir.path()));
    let none = engel_lab(&args, None);
    assert_eq!(stdout(&cold), stdout(&warm));
    assert_eq!(stdout(&cold), stdout(&none));
    let a = engel_lab(&["verify-paper", "--families", "other"], Some(dir.path()));
    let b = engel_lab(&["verify-paper", "--families", "other"], None);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_single_arcs_reports_s4() {
    let v = json_of(&engel_lab(&["sweep-single-arcs", "--max-order", "24"], None));
    let rows = v["rows"].as_array().unwrap();
    let s4 = rows.iter().find(|r| r["group"] == "S:4").unwrap();
    assert!(s4["single_arcs_outside_left_engel"].as_u64().unwrap() > 0);
    assert!(rows.iter().filter(|r| r["nilpotent"] == true).all(|r| r["single_arcs"] == 0));
}
