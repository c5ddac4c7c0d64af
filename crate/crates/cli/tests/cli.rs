use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn duality(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duality"))
        .args(args)
        .env_remove("DUALITY_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn witness<'a>(report: &'a Value, prefix: &str) -> &'a Value {
    report["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["claim"].as_str().unwrap().starts_with(prefix))
        .unwrap_or_else(|| panic!("no witness {prefix}"))
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), contents).unwrap();
    f
}

#[test]
fn verify_howe_small() {
    let out = duality(&["verify", "howe", "--n", "2", "--m", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["status"], "pass");
    let w = witness(&r, "dim S^2(C^2⊗C^2) = 9+1");
    assert_eq!(
        (w["left"].as_str(), w["right"].as_str()),
        (Some("10"), Some("10"))
    );
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("PASS"));
}

#[test]
fn verify_springer_examples() {
    let out = duality(&["verify", "springer", "--d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(witness(&json(&out), "Σ_λ (f^λ)² = 4!")["left"], "24");

    let out = duality(&["verify", "springer", "--d", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let w = witness(&r, "#{w ∈ S_4 : lds(w) ≤ 2}");
    assert_eq!(
        (w["left"].as_str(), w["right"].as_str()),
        (Some("14"), Some("14"))
    );
}

#[test]
fn every_suite_passes_at_default_size() {
    for suite in [
        "howe",
        "schur",
        "springer",
        "dimensions",
        "convolution",
        "zero-weight",
        "ginzburg",
        "orbits",
    ] {
        let out = duality(&["verify", suite]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn reports_are_byte_identical() {
    let args = ["verify", "schur", "--n", "2", "--d", "3", "--seed", "5"];
    let (a, b) = (duality(&args), duality(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn budget_violations_exit_2() {
    let out = duality(&["verify", "schur", "--n", "3", "--d", "4", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let out = Command::new(env!("CARGO_BIN_EXE_duality"))
        .args(["verify", "howe", "--n", "2", "--d", "2"])
        .env("DUALITY_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = duality(&[
        "census", "--n", "3", "--m", "3", "--d", "4", "--budget", "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_3() {
    assert_eq!(duality(&["verify", "nonsense"]).status.code(), Some(3));
    assert_eq!(
        duality(&["verify", "howe", "--n", "x"]).status.code(),
        Some(3)
    );
    assert_eq!(
        duality(&["rsk", "--matrix", "[[1,2],[3]]"]).status.code(),
        Some(3)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_duality"))
        .args(["verify", "howe"])
        .env("DUALITY_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn help_exits_0() {
    assert_eq!(duality(&["--help"]).status.code(), Some(0));
    assert_eq!(duality(&["verify", "--help"]).status.code(), Some(0));
    assert_eq!(duality(&["--version"]).status.code(), Some(0));
}

#[test]
fn transverse_lines_fixture() {
    let out = duality(&[
        "orbit-invariant",
        &fixture("transverse_lines.json"),
        "--check-invariance",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["invariant"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(r["invariance"]["changed"], 0);
}

#[test]
fn identical_complete_flags_give_identity() {
    let flag = r#"{"d": 3, "steps": [[["1","0","0"]], [["1","0","0"],["0","1","0"]], [["1","0","0"],["0","1","0"],["0","0","1"]]]}"#;
    let file = write_temp(&format!(r#"{{"first": {flag}, "second": {flag}}}"#));
    let out = duality(&["orbit-invariant", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json(&out)["invariant"],
        serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    );
}

#[test]
fn one_step_second_flag_gives_type_column() {
    // first flag has type (1, 2): a line inside Q^3
    let file = write_temp(
        r#"{"first": {"d": 3, "steps": [[["1","2","-1/3"]], [["1","0","0"],["0","1","0"],["0","0","1"]]]},
            "second": {"d": 3, "steps": [[["1","0","0"],["0","1","0"],["0","0","1"]]]}}"#,
    );
    let out = duality(&["orbit-invariant", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["invariant"], serde_json::json!([[1], [2]]));
}

#[test]
fn malformed_flags_report_the_chain_index() {
    let file = write_temp(
        r#"{"first": {"d": 2, "steps": [[["1","0"]], [["0","1"]]]},
            "second": {"d": 2, "steps": [[["1","0"],["0","1"]]]}}"#,
    );
    let out = duality(&["orbit-invariant", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("chain index 2"), "{err}");
    assert!(err.contains("first flag"), "{err}");

    let file =
        write_temp(r#"{"first": {"d": 2, "steps": [[["1"]]]}, "second": {"d": 2, "steps": []}}"#);
    let out = duality(&["orbit-invariant", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("chain index 1"));

    let file = write_temp("not json");
    assert_eq!(
        duality(&["orbit-invariant", file.path().to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        duality(&["orbit-invariant", "/nonexistent/flags.json"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn census_row_counts() {
    for (n, m, d, rows) in [(2, 2, 1, 4), (2, 2, 2, 10), (1, 1, 3, 1)] {
        let (n, m, d) = (n.to_string(), m.to_string(), d.to_string());
        let out = duality(&["census", "--n", &n, "--m", &m, "--d", &d, "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&out);
        assert_eq!(r["rows"].as_array().unwrap().len(), rows);
        assert_eq!(r["totals"]["consistent"], true);
        assert_eq!(r["totals"]["orbits"], rows.to_string());
    }
    let out = duality(&["census", "--n", "2", "--m", "2", "--d", "2", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[11], "total,10,orbits,10,ok");
}

#[test]
fn census_below_min_rank_lists_strata() {
    let out = duality(&["census", "--n", "2", "--m", "2", "--d", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["kind"], "strata");
    assert!(r["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|row| row["lambda"] == serde_json::json!([2])));
}

#[test]
fn rsk_roundtrip_through_the_cli() {
    let out = duality(&["rsk", "--matrix", "[[0,1],[2,0]]"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["p"], serde_json::json!([[1, 1], [2]]));
    assert_eq!(r["q"], serde_json::json!([[1, 2], [2]]));
    let (p, q) = (r["p"].to_string(), r["q"].to_string());
    let back = duality(&["rsk", "--p", &p, "--q", &q]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(json(&back)["matrix"], serde_json::json!([[0, 1], [2, 0]]));

    let out = duality(&["rsk", "--p", "[[1,1]]", "--q", "[[1],[2]]"]);
    assert_eq!(out.status.code(), Some(3));
}
