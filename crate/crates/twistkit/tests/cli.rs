//! End-to-end CLI behavior: exit codes, JSON determinism, document
//! ingestion, and schema conformance of the report.

use std::path::Path;
use std::process::{Command, Output};

fn twistkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn cocycle_suite_passes_with_exit_zero() {
    let output = twistkit(&[
        "verify",
        "--suite",
        "cocycle",
        "--family",
        "F",
        "--params",
        "γ=1,δ=1,μ=i",
        "--order",
        "4",
        "--trials",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stdout_of(&output));
    assert!(stdout_of(&output).contains("[PASS]"));
}

#[test]
fn verbatim_schrodinger_embedding_fails_with_exit_one_naming_h_relations() {
    let output = twistkit(&[
        "verify",
        "--suite",
        "embedding",
        "--target",
        "schrodinger",
        "--n",
        "2",
        "--verbatim",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("[FAIL]"));
    assert!(text.contains("[H, E]"), "failure must name [H, E]: {text}");
    assert!(text.contains("[H, A]"));
    assert!(text.contains("[H, B]"));
}

#[test]
fn usage_errors_exit_with_two() {
    let bad_flag = twistkit(&["verify", "--no-such-flag"]);
    assert_eq!(bad_flag.status.code(), Some(2));
    let bad_params = twistkit(&["verify", "--suite", "cocycle", "--params", "γ=1/0"]);
    assert_eq!(bad_params.status.code(), Some(2));
    let bad_order = twistkit(&["verify", "--suite", "cocycle", "--order", "9"]);
    assert_eq!(bad_order.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical_for_fixed_seed() {
    let args = [
        "verify",
        "--suite",
        "counit",
        "--order",
        "3",
        "--trials",
        "3",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let first = twistkit(&args);
    let second = twistkit(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "JSON must be deterministic");
    let different_seed = twistkit(&[
        "verify", "--suite", "counit", "--order", "3", "--trials", "3", "--seed", "8",
        "--format", "json",
    ]);
    assert_ne!(first.stdout, different_seed.stdout);
}

#[test]
fn strict_paper_promotes_recorded_mismatches() {
    let relaxed = twistkit(&[
        "verify",
        "--suite",
        "coproducts",
        "--family",
        "Ftilde",
        "--order",
        "3",
    ]);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(stdout_of(&relaxed).contains("[RECORDED-MISMATCH]"));
    let strict = twistkit(&[
        "verify",
        "--suite",
        "coproducts",
        "--family",
        "Ftilde",
        "--order",
        "3",
        "--strict-paper",
    ]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn exported_algebra_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poincare.json");
    let export = twistkit(&[
        "export",
        "algebra",
        "--algebra",
        "poincare",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(export.status.code(), Some(0));
    let verify = twistkit(&[
        "verify",
        "--suite",
        "jacobi",
        "--algebra-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout_of(&verify));
    assert!(stdout_of(&verify).contains("jacobi"));
}

#[test]
fn corrupted_algebra_document_fails_jacobi() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poincare.json");
    let export = twistkit(&["export", "algebra", "--algebra", "poincare", "-o", path.to_str().unwrap()]);
    assert_eq!(export.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    // corrupt [K_1, K_2]: -J_3 becomes +P_t
    let brackets = doc["brackets"].as_array_mut().unwrap();
    let entry = brackets
        .iter_mut()
        .find(|b| b["lhs"] == serde_json::json!(["K_1", "K_2"]))
        .expect("bracket present");
    entry["rhs"] = serde_json::json!([{"coef": "1", "gen": "P_t"}]);
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let verify = twistkit(&[
        "verify",
        "--suite",
        "jacobi",
        "--algebra-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(1));
    let out = stdout_of(&verify);
    assert!(out.contains("[FAIL]"));
    assert!(out.contains("K_1"), "violating triples listed: {out}");
}

#[test]
fn exported_embedding_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("embedding.json");
    let export = twistkit(&[
        "export",
        "embedding",
        "--target",
        "iso",
        "--n",
        "5",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(export.status.code(), Some(0));
    let verify = twistkit(&[
        "verify",
        "--suite",
        "embedding",
        "--embedding-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout_of(&verify));
}

#[test]
fn show_commands_render_expected_objects() {
    let coproduct = twistkit(&[
        "show",
        "coproduct",
        "--family",
        "FP",
        "--generator",
        "E",
        "--params",
        "γ=1,δ=1,μ=i",
    ]);
    assert_eq!(coproduct.status.code(), Some(0));
    // Δ_P(E) = E⊗e^{δσ} + 1⊗E with e^{δσ} = 1 + E
    assert_eq!(
        stdout_of(&coproduct),
        "Δ[F_P](E) = (1 | E) + (E | 1) + (E | E)\n"
    );

    let rmatrix = twistkit(&["show", "rmatrix", "--family", "Ftilde", "--params", "γ=1,δ=1,μ=i"]);
    assert_eq!(stdout_of(&rmatrix), "r[F~] = -1·J∧B + H∧E + A∧B\n");

    let algebra = twistkit(&["show", "algebra", "--algebra", "poincare"]);
    let text = stdout_of(&algebra);
    assert!(text.contains("generators (10):"));
    assert!(text.contains("[P_1, K_1] = P_t"));

    // the omitted closed forms are still computable and shown
    let omitted = twistkit(&["show", "coproduct", "--family", "Ftilde", "--generator", "H", "--order", "2"]);
    assert!(stdout_of(&omitted).starts_with("Δ[F~](H) = "));
}

// --- report schema conformance ---------------------------------------------

/// Minimal JSON-Schema subset checker: type / required / properties /
/// items / enum, which is everything the shipped schema uses.
fn validate(schema: &serde_json::Value, value: &serde_json::Value, path: &str) -> Vec<String> {
    let mut errors = Vec::new();
    if let Some(kind) = schema.get("type").and_then(|t| t.as_str()) {
        let matches = match kind {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            _ => true,
        };
        if !matches {
            errors.push(format!("{path}: expected {kind}"));
            return errors;
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            errors.push(format!("{path}: {value} not in enum"));
        }
    }
    if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                errors.push(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(properties) = schema.get("properties").and_then(|p| p.as_object()) {
        for (key, subschema) in properties {
            if let Some(subvalue) = value.get(key) {
                errors.extend(validate(subschema, subvalue, &format!("{path}.{key}")));
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = value.as_array() {
            for (index, item) in array.iter().enumerate() {
                errors.extend(validate(items, item, &format!("{path}[{index}]")));
            }
        }
    }
    errors
}

#[test]
fn json_report_validates_against_shipped_schema() {
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/report.schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let output = twistkit(&[
        "verify",
        "--suite",
        "coproducts",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let errors = validate(&schema, &report, "$");
    assert!(errors.is_empty(), "schema violations: {errors:?}");
    // a typo-ledger entry must be present in the coproducts report
    let has_ledger = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r.get("typo_ledger").is_some());
    assert!(has_ledger);
    // exported schema matches the shipped file
    let exported = twistkit(&["export", "schema"]);
    let exported_schema: serde_json::Value =
        serde_json::from_str(&stdout_of(&exported)).unwrap();
    assert_eq!(exported_schema, schema);
}
