use std::process::{Command, Output};

use serde_json::Value;

use scrollfano_core::grammar::{parse_class, parse_variety};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scrollfano"))
        .args(args)
        .env_remove("SCROLLFANO_THREADS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{args:?}: {e}; stderr {}",
            String::from_utf8_lossy(&out.stderr)
        )
    });
    validate(&doc);
    (doc, out.status.code().unwrap())
}

fn validate(doc: &Value) {
    let schema: Value = serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft202012)
        .compile(&schema)
        .unwrap();
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errors) => errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}\n{doc:#}");
}

#[test]
fn info_anticanonical() {
    for (v, k) in [
        ("P[P2;0,0,1]", "(2;3)"),
        ("P[P1;0,0,0]", "(2;3)"),
        ("P[Q3;0,0,0,2]", "(1;4)"),
    ] {
        let (doc, code) = json(&["info", v]);
        assert_eq!(code, 0);
        assert_eq!(doc["command"], "info");
        assert_eq!(doc["results"]["anticanonical"], k, "{v}");
    }
}

#[test]
fn h0_examples() {
    let (doc, code) = json(&["h0", "P[P1;0,0,0,1]", "(0;2)", "--method=both"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["pushforward"], "15");
    assert_eq!(doc["results"]["lattice"], "15");
    assert_eq!(doc["results"]["agree"], true);

    let (doc, _) = json(&["h0", "P[P2;0,0,1]", "(0;1)"]);
    assert_eq!(doc["results"]["pushforward"], "5");
    assert_eq!(doc["results"]["lattice"], Value::Null);

    let (doc, _) = json(&["h0", "P[P1;0,0]", "(−1;0)"]);
    assert_eq!(doc["results"]["pushforward"], "0");
}

#[test]
fn h0_lattice_needs_projective_base() {
    let out = run(&["h0", "P[Q3;0,0]", "(0;1)", "--method=lattice"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn big_counts_are_exact_strings() {
    let (doc, code) = json(&["h0", "P[P20;0,0]", "(200;200)", "--method=both"]);
    assert_eq!(code, 0);
    // 201 * C(220, 20), beyond 64 bits.
    assert_eq!(
        doc["results"]["pushforward"],
        "2392502182564102697956170619701"
    );
    assert_eq!(doc["results"]["agree"], true);
}

#[test]
fn check_examples() {
    let (doc, code) = json(&["check", "P[P1;0,0,1,2]", "D2+D3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["is_log_fano"], true);
    assert_eq!(doc["results"]["index"], "2");
    assert_eq!(doc["results"]["fundamental_class"], "(1;1)");
    assert!(doc["results"]["adjunction"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["holds"] == true));

    let (doc, code) = json(&["check", "P[Q3;0,0,0,-1]", "D3"]);
    assert_eq!(code, 1);
    assert_eq!(doc["results"]["is_log_fano"], false);
    let witness = &doc["results"]["witness"];
    assert!(witness["curve"]
        .as_str()
        .unwrap()
        .starts_with("SectionLine"));
    assert_eq!(witness["degree"], "0");

    let (doc, code) = json(&["check", "P[P2;0,0,0]", "(1;1)"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["index"], "2");
}

#[test]
fn members_verdicts() {
    let (doc, code) = json(&["members", "P[P1;0,0,1,2]", "(-3;2)"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["members"]["status"], "forced-decomposition");
    assert_eq!(
        doc["results"]["members"]["components"],
        serde_json::json!(["(-2;1)", "(-1;1)"])
    );

    let (doc, _) = json(&["members", "P[P1;0,0,1,2]", "(-4;2)"]);
    assert_eq!(doc["results"]["members"]["status"], "forced-non-reduced");

    let (doc, code) = json(&["members", "P[P1;0,0,1,2]", "(-5;2)"]);
    assert_eq!(code, 1);
    assert_eq!(doc["results"]["members"]["status"], "no-member");
}

#[test]
fn parse_errors_point_at_the_input() {
    let out = run(&["info", "P[P2;0,x]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 7"), "{err}");
    assert!(err.contains("P[P2;0,x]\n         ^"), "{err}");

    for bad in [
        vec!["h0", "P[P2;0,1]", "(1;2;3)"],
        vec!["check", "P[P2;0,1]", "D7"],
        vec!["check", "P[P2;0,1]", ""],
        vec!["info", "P[Q2;0,0]"],
        vec!["gallery", "--r=1"],
        vec!["census", "--n=4", "--max-twist=1"],
        vec!["census", "--n=4", "--index=2", "--max-twist=-1"],
        vec!["frobnicate"],
    ] {
        let out = run(&bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn invalid_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_scrollfano"))
        .args(["census", "--n=3", "--index=2", "--max-twist=0"])
        .env("SCROLLFANO_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explain_goes_to_stderr() {
    let out = run(&["--explain", "h0", "P[P2;0,0,1]", "(0;1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stderr.is_empty());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate(&doc);
}

#[test]
fn census_json() {
    let (doc, code) = json(&["census", "--n=3", "--pseudoindex=2", "--max-twist=2"]);
    assert_eq!(code, 0);
    let rows = doc["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert_eq!(row["family"]["family"], "two-r-minus-one");
        // Printed literals parse back.
        let v = row["variety"].as_str().unwrap();
        assert_eq!(parse_variety(v).unwrap().scroll.to_string(), v);
        let c = row["boundary_class"].as_str().unwrap();
        assert_eq!(parse_class(c).unwrap().to_string(), c);
    }
    assert_eq!(doc["results"]["match"]["unmatched"], serde_json::json!([]));
}

#[test]
fn census_markdown_matches_golden() {
    let golden = include_str!("golden/census_n4_index2_twist1.md");
    for _ in 0..2 {
        let out = run(&[
            "census",
            "--n=4",
            "--index=2",
            "--max-twist=1",
            "--format=markdown",
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
    }
}

#[test]
fn gallery_reports_only_the_kayaku_edge() {
    let (doc, code) = json(&["gallery", "--r=2", "--max-twist=3"]);
    let failing: Vec<(String, String)> = doc["results"]["instances"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["pass"] == false)
        .map(|i| {
            (
                i["family"].as_str().unwrap().to_string(),
                i["params"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        failing,
        [1, 2, 3].map(|m2| ("kayaku".to_string(), format!("r=2,m1=0,m2={m2}")))
    );
    assert_eq!(code, 3);

    let (doc, code) = json(&["gallery", "--r=3", "--max-twist=0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["failed"], "0");
}

#[test]
fn schema_rejects_numeric_counts() {
    let (mut doc, _) = json(&["h0", "P[P2;0,0,1]", "(0;1)"]);
    doc["results"]["pushforward"] = serde_json::json!(5);
    let schema: Value = serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft202012)
        .compile(&schema)
        .unwrap();
    assert!(!compiled.is_valid(&doc));
}
