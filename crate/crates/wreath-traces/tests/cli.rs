//! End-to-end tests of the `wreath-traces` binary: exit codes, output
//! formats, and JSON schema conformance.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath-traces"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath-traces"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

/// Minimal JSON-Schema validator covering the subset the shipped schemas
/// use: type (string or list), enum, object properties/required/
/// additionalProperties, and homogeneous array items.
fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(allowed) = schema.get("enum") {
        let options = allowed.as_array().expect("enum is a list");
        if !options.contains(value) {
            return Err(format!("{path}: {value} not in {options:?}"));
        }
    }
    if let Some(expected) = schema.get("type") {
        let names: Vec<&str> = match expected {
            Value::String(s) => vec![s.as_str()],
            Value::Array(list) => list.iter().filter_map(|v| v.as_str()).collect(),
            _ => panic!("bad schema type at {path}"),
        };
        let matches = names.iter().any(|name| match *name {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => panic!("unknown schema type {other}"),
        });
        if !matches {
            return Err(format!("{path}: expected {names:?}, got {value}"));
        }
    }
    if let Some(object) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().expect("required key");
                if !object.contains_key(key) {
                    return Err(format!("{path}: missing required key {key}"));
                }
            }
        }
        let properties = schema.get("properties").and_then(Value::as_object);
        if let Some(properties) = properties {
            for (key, sub) in object {
                match properties.get(key) {
                    Some(subschema) => validate(subschema, sub, &format!("{path}.{key}"))?,
                    None => {
                        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                            return Err(format!("{path}: unexpected key {key}"));
                        }
                    }
                }
            }
        }
    }
    if let (Some(items), Some(list)) = (schema.get("items"), value.as_array()) {
        for (i, item) in list.iter().enumerate() {
            validate(items, item, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_schema(schema_source: &str, value: &Value) {
    let schema: Value = serde_json::from_str(schema_source).expect("schema parses");
    if let Err(message) = validate(&schema, value, "$") {
        panic!("schema violation: {message}\nvalue: {value:#}");
    }
}

#[test]
fn groups_json_matches_schema_and_table() {
    for gamma in ["Z1", "Z6", "D3", "2T", "2O", "2I"] {
        let output = run(&["groups", "--gamma", gamma, "--format", "json"]);
        assert_eq!(output.status.code(), Some(0));
        let json = stdout_json(&output);
        assert_schema(include_str!("../schemas/groups.schema.json"), &json);
    }
    let output = run(&["groups", "--gamma", "2I", "--format", "json"]);
    let json = stdout_json(&output);
    assert_eq!(json["order"], 120);
    assert_eq!(json["class_count"], 9);
    assert_eq!(json["contains_minus_one"], true);
    assert_eq!(json["classes"].as_array().unwrap().len(), 9);
}

#[test]
fn groups_text_is_default_and_csv_has_fixed_columns() {
    let output = run(&["groups", "--gamma", "D2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("group D2: order 8, 5 conjugacy classes"));

    let output = run(&["groups", "--gamma", "D2", "--format", "csv"]);
    let csv = String::from_utf8_lossy(&output.stdout);
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        "gamma,order,class_count,contains_minus_one,class_id,label,size,element_order,angle,is_identity,is_minus_one"
    );
    assert_eq!(csv.lines().count(), 1 + 5);
}

#[test]
fn unparsable_gamma_exits_2_with_stderr_message() {
    let output = run(&["groups", "--gamma", "E8"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
    assert!(String::from_utf8_lossy(&output.stderr).contains("cannot parse group"));
}

#[test]
fn census_json_and_schema() {
    let output = run(&["census", "--gamma", "Z3", "--n", "2", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_schema(include_str!("../schemas/census.schema.json"), &json);
    assert_eq!(json["c"], 9);
    assert_eq!(json["t"], 5);
    assert_eq!(json["s"], 8);

    let output = run(&[
        "census", "--gamma", "Z2", "--n", "3", "--list", "--format", "json",
    ]);
    let json = stdout_json(&output);
    assert_schema(include_str!("../schemas/census.schema.json"), &json);
    assert!(json["partitions"].as_array().unwrap().len() > 0);
}

#[test]
fn census_list_partitions_feed_charpoly() {
    let output = run(&[
        "census", "--gamma", "D2", "--n", "3", "--list", "--format", "json",
    ]);
    let json = stdout_json(&output);
    for entry in json["partitions"].as_array().unwrap() {
        let partition = entry["partition"].as_str().unwrap();
        let output = run(&[
            "charpoly", "--gamma", "D2", "--mp", partition, "--format", "json",
        ]);
        assert_eq!(output.status.code(), Some(0), "partition {partition}");
        let charpoly = stdout_json(&output);
        assert_eq!(charpoly["partition"], partition);
        assert_eq!(charpoly["t_admissible"], entry["t_admissible"]);
        assert_eq!(charpoly["s_admissible"], entry["s_admissible"]);
    }
}

#[test]
fn census_resource_bound_exits_3() {
    let output = run(&["census", "--gamma", "Z80", "--n", "10", "--list"]);
    assert_eq!(output.status.code(), Some(3));
    let output = run(&["census", "--gamma", "Z2", "--n", "20000"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn series_json_and_bounds() {
    let output = run(&[
        "series", "--gamma", "Z2", "--which", "t", "--nmax", "6", "--format", "json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_schema(include_str!("../schemas/series.schema.json"), &json);
    assert_eq!(json["coefficients"], serde_json::json!([1, 1, 2, 3, 5, 7, 11]));

    let output = run(&[
        "series", "--gamma", "Z1", "--which", "s", "--nmax", "6", "--format", "json",
    ]);
    assert_eq!(
        stdout_json(&output)["coefficients"],
        serde_json::json!([1, 1, 1, 2, 2, 3, 4])
    );

    let output = run(&["series", "--gamma", "Z2", "--which", "t", "--nmax", "10001"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn series_csv_rows() {
    let output = run(&[
        "series", "--gamma", "Z3", "--which", "s", "--nmax", "2", "--format", "csv",
    ]);
    let csv = String::from_utf8_lossy(&output.stdout);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "gamma,which,n,coefficient");
    assert_eq!(lines[1], "Z3,s,0,1");
    assert_eq!(lines[2], "Z3,s,1,3");
    assert_eq!(lines[3], "Z3,s,2,8");
}

#[test]
fn charpoly_json_and_schema() {
    let output = run(&[
        "charpoly", "--gamma", "Z2", "--mp", "2^1[c1]", "--format", "json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_schema(include_str!("../schemas/charpoly.schema.json"), &json);
    assert_eq!(json["degree"], 4);
    assert_eq!(
        json["expanded_coefficients"],
        serde_json::json!([1.0, 0.0, 2.0, 0.0, 1.0])
    );

    let output = run(&["charpoly", "--gamma", "Z2", "--mp", "nonsense"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_passes_on_theorem_backed_cases() {
    for (gamma, nmax, oracle_max) in [("Z3", "8", "2"), ("2T", "6", "1")] {
        let output = run(&[
            "verify", "--gamma", gamma, "--nmax", nmax, "--oracle-max", oracle_max,
            "--format", "json",
        ]);
        assert_eq!(output.status.code(), Some(0), "{gamma}");
        let json = stdout_json(&output);
        assert_schema(include_str!("../schemas/verify.schema.json"), &json);
        assert_eq!(json["passed"], true);
        assert_eq!(json["mismatches"].as_array().unwrap().len(), 0);
    }

    let output = run(&[
        "verify", "--gamma", "Z4", "--nmax", "8", "--skip-oracle", "--format", "json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_schema(include_str!("../schemas/verify.schema.json"), &json);
    let checks = json["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["name"] != "oracle_vs_census"));
}

#[test]
fn verify_injected_mismatch_exits_1_with_structured_diff() {
    let output = run(&[
        "verify", "--gamma", "Z3", "--nmax", "4", "--skip-oracle", "--inject-mismatch",
        "--format", "json",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let json = stdout_json(&output);
    assert_schema(include_str!("../schemas/verify.schema.json"), &json);
    assert_eq!(json["passed"], false);
    let mismatches = json["mismatches"].as_array().unwrap();
    assert_eq!(mismatches.len(), 1);
    assert_eq!(mismatches[0]["check"], "census_vs_series");
    assert_eq!(mismatches[0]["quantity"], "t");
    assert_eq!(mismatches[0]["n"], 1);
}

#[test]
fn oracle_cap_env_var_is_honored() {
    let output = run_with_env(
        &["verify", "--gamma", "Z3", "--nmax", "3", "--oracle-max", "2"],
        "WREATH_ORACLE_CAP",
        "10",
    );
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("wreath-product enumeration"));
}

#[test]
fn verify_csv_is_one_row_per_comparison() {
    let output = run(&[
        "verify", "--gamma", "Z2", "--nmax", "2", "--skip-oracle", "--format", "csv",
    ]);
    let csv = String::from_utf8_lossy(&output.stdout);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "check,n,quantity,left,right,passed");
    // 3 census-vs-series rows and 3 inequality rows per N in 0..=2
    assert_eq!(lines.len(), 1 + 9 + 9);
    assert!(lines[1..].iter().all(|line| line.ends_with(",true")));
}
