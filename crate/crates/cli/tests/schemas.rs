//! Every command's JSON output must validate against the schema files
//! shipped under schemas/. The checker covers the subset of JSON Schema the
//! files use: type, required, properties, items, additionalProperties.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

fn specdet(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_specdet")).args(args).output().unwrap();
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn type_matches(expected: &str, value: &Value) -> bool {
    match expected {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => false,
    }
}

fn validate(schema: &Value, value: &Value, at: &str) {
    if let Some(expected) = schema.get("type") {
        let allowed: Vec<&str> = match expected {
            Value::String(s) => vec![s.as_str()],
            Value::Array(options) => options.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        assert!(
            allowed.iter().any(|t| type_matches(t, value)),
            "{at}: expected {allowed:?}, got {value}"
        );
        if value.is_null() && allowed.contains(&"null") {
            return;
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required.iter().filter_map(Value::as_str) {
            assert!(value.get(key).is_some(), "{at}: missing required key '{key}'");
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(inner) = value.get(key) {
                validate(sub, inner, &format!("{at}.{key}"));
            }
        }
    }
    if let Some(extra) = schema.get("additionalProperties") {
        if extra.is_object() {
            let declared: Vec<&String> = schema
                .get("properties")
                .and_then(Value::as_object)
                .map(|m| m.keys().collect())
                .unwrap_or_default();
            if let Some(map) = value.as_object() {
                for (key, inner) in map {
                    if !declared.contains(&key) {
                        validate(extra, inner, &format!("{at}.{key}"));
                    }
                }
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(list) = value.as_array() {
            for (i, inner) in list.iter().enumerate() {
                validate(items, inner, &format!("{at}[{i}]"));
            }
        }
    }
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("specdet-schema-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn spectrum_output_validates() {
    let pet = temp("pet.g6", specdet(&["gen", "--family", "petersen"]).trim());
    let out = specdet(&["spectrum", "--kinds", "A,L,NL", "--numeric", pet.to_str().unwrap()]);
    validate(&schema("spectrum.json"), &serde_json::from_str(out.trim()).unwrap(), "$");
}

#[test]
fn invariants_output_validates() {
    for family in [vec!["gen", "--family", "petersen"], vec!["gen", "--family", "path", "--n", "4"]] {
        let file = temp("inv.g6", specdet(&family).trim());
        let out = specdet(&["invariants", file.to_str().unwrap()]);
        validate(&schema("invariants.json"), &serde_json::from_str(out.trim()).unwrap(), "$");
    }
}

#[test]
fn srg_output_validates() {
    let out = specdet(&["srg", "--n", "16", "--d", "6", "--lambda", "2", "--mu", "2"]);
    validate(&schema("srg.json"), &serde_json::from_str(out.trim()).unwrap(), "$");
}

#[test]
fn census_row_validates() {
    let out = specdet(&["census", "--n", "5", "--kinds", "A,L"]);
    let row = out.lines().next().unwrap();
    validate(&schema("census-row.json"), &serde_json::from_str(row).unwrap(), "$");
}

#[test]
fn certificate_validates() {
    let g = temp("cert-g.g6", "I@TkdfIx?");
    let h = temp("cert-h.g6", "I@\\sDfEq_");
    let k1 = temp("cert-k1.g6", "@");
    let out = specdet(&[
        "certify",
        "--recipe",
        "adiga-dc",
        "--seeds",
        k1.to_str().unwrap(),
        k1.to_str().unwrap(),
        g.to_str().unwrap(),
        h.to_str().unwrap(),
    ]);
    validate(&schema("certificate.json"), &serde_json::from_str(out.trim()).unwrap(), "$");
}

#[test]
fn edge_list_output_validates() {
    let out = specdet(&["gen", "--family", "wheel", "--n", "6", "--out", "json"]);
    validate(&schema("edge-list.json"), &serde_json::from_str(out.trim()).unwrap(), "$");
}
