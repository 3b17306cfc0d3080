//! End-to-end command-line tests: golden report bodies, the exit-code
//! contract, and report round-tripping.
//!
//! Integration tests run with the crate directory as working directory, so
//! fixture paths here match the paths echoed inside the golden bodies.

use antirb_cli::render::ReportDocument;
use std::process::{Command, Output};

fn antirb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antirb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("tests/golden/{name}")).expect("golden file")
}

#[test]
fn fail_report_carries_the_derived_counterexample() {
    let out = antirb(&[
        "verify",
        "--input",
        "tests/fixtures/iii_prop4_fail.json",
        "--window",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // pair (L_1, L_3), i.e. functional-equation indices (2, 4); the
    // residual lands on L(6) = L_{1+3+2k}
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let violation = doc
        .violations
        .iter()
        .find(|v| v.inputs == ["L(1)", "L(3)"])
        .expect("counterexample pair present");
    assert_eq!(violation.residual.len(), 1);
    assert_eq!(violation.residual[0].basis, "L(6)");
    assert_eq!(violation.residual[0].coeff, "-384/35");
}

#[test]
fn search_reports_expected_tags() {
    let out = antirb(&["search", "--algebra", "witt", "--degree", "2", "--window", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let stable: Vec<_> = doc
        .candidates
        .unwrap()
        .into_iter()
        .filter(|c| c.stable)
        .collect();
    assert_eq!(stable.len(), 2);
    assert!(stable.iter().any(|c| c.tags == ["II"]));
    assert!(stable
        .iter()
        .any(|c| c.tags == ["support_origin"] && c.unclassified_wrt_paper));

    let out = antirb(&[
        "search", "--algebra", "witt", "--degree", "1", "--window", "6", "--branch", "f0zero",
    ]);
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let candidates = doc.candidates.unwrap();
    assert_eq!(candidates.len(), 1);
    assert!(candidates[0].tags.iter().any(|t| t == "support_minus_k"));

    let out = antirb(&["search", "--algebra", "witt", "--degree", "0", "--window", "6"]);
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let stable: Vec<_> = doc
        .candidates
        .unwrap()
        .into_iter()
        .filter(|c| c.stable)
        .collect();
    assert_eq!(stable.len(), 1);
    assert!(stable[0].tags.iter().any(|t| t == "deg0"));
}

#[test]
fn reports_are_byte_stable_across_runs() {
    let run = || {
        antirb(&[
            "verify",
            "--input",
            "tests/fixtures/iii_prop4_fail.json",
            "--window",
            "8",
        ])
        .stdout
    };
    assert_eq!(run(), run());

    let grid = |threads: &str| {
        antirb(&["sl2", "grid", "--range", "1", "--threads", threads]).stdout
    };
    assert_eq!(grid("1"), grid("3"));
}

#[test]
fn report_round_trips_through_schema() {
    for name in ["family_i_pass.stdout.json", "iii_prop4_fail.stdout.json"] {
        let text = golden(name);
        let doc: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.to_json(), text);
    }
}

#[test]
fn truncated_table_reports_skips() {
    let out = antirb(&[
        "verify",
        "--input",
        "tests/fixtures/truncated_table.json",
        "--window",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: ReportDocument =
        serde_json::from_slice(&out.stdout).expect("valid report");
    assert!(doc.skipped > 0);
    assert!(doc.notice.unwrap().contains("window-consistent"));
}

#[test]
fn text_format_renders() {
    let out = antirb(&[
        "verify",
        "--input",
        "tests/fixtures/family_i_pass.json",
        "--window",
        "6",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: pass"));
}

#[test]
fn strong_flag_runs_cyclic_identity() {
    let out = antirb(&[
        "verify",
        "--input",
        "tests/fixtures/family_i_pass.json",
        "--window",
        "4",
        "--strong",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify"],
        vec!["verify", "--input", "tests/fixtures/family_i_pass.json", "--window", "0"],
        vec!["verify", "--input", "no_such_file.json", "--window", "4"],
        vec![
            "verify",
            "--input",
            "tests/fixtures/family_i_pass.json",
            "--window",
            "4",
            "--delta",
            "1.5",
        ],
        vec!["search", "--algebra", "sl2", "--degree", "1", "--window", "6"],
        vec!["search", "--algebra", "witt", "--degree", "1", "--window", "1"],
        vec!["adjudicate", "--algebra", "witt", "--degree", "3", "--window", "4"],
        vec!["sl2", "grid", "--range", "0"],
        vec!["nonsense"],
    ] {
        let out = antirb(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn adjudication_and_search_complete_with_exit_0() {
    for args in [
        vec!["search", "--algebra", "witt", "--degree", "1", "--window", "6"],
        vec![
            "adjudicate", "--algebra", "virasoro", "--degree", "1", "--window", "6",
        ],
        vec!["sl2", "verify-families", "--samples", "2", "--seed", "1"],
        vec!["sl2", "bridge", "--samples", "2", "--seed", "1"],
    ] {
        let out = antirb(&args);
        assert_eq!(out.status.code(), Some(0), "args {args:?}");
        assert!(!out.stdout.is_empty());
    }
}

mod document_properties {
    use antirb_cli::parse_operator_document;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        // arbitrary junk must produce an error, never a panic
        #[test]
        fn junk_never_panics(text in ".{0,200}") {
            let _ = parse_operator_document(&text);
        }

        // truncations of a valid document must error or parse, never panic
        #[test]
        fn truncations_never_panic(cut in 0usize..400) {
            let valid = r#"{
                "algebra": "witt",
                "operator": {
                    "kind": "homogeneous",
                    "degree": 1,
                    "f": { "domain": [-2, 2], "values": { "0": "5", "-1": "1/2+3/4i" } }
                }
            }"#;
            let cut = cut.min(valid.len());
            if valid.is_char_boundary(cut) {
                let _ = parse_operator_document(&valid[..cut]);
            }
        }
    }
}
