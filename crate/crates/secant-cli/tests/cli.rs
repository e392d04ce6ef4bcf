//! End-to-end tests for the `secant` binary: output schema, exact values,
//! format parity, and exit-code contract.

use serde_json::Value;
use std::process::{Command, Output};

fn secant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn nd_table_for_rational_quartic() {
    let out = secant(&["nd", "--g", "0", "--m", "4", "--d-max", "3"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["command"], "nd");
    let values: Vec<&str> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["nd_gf"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "4", "3", "0"]);
    assert!(doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["agree"] == Value::Bool(true)));
    assert_eq!(doc["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn nd_genus_three_sextic_and_degenerate_table() {
    let out = secant(&["nd", "--g", "3", "--m", "6", "--d-max", "2"]);
    let doc = json_of(&out);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.last().unwrap()["nd_acgh"], "7");

    let out = secant(&["nd", "--g", "0", "--m", "4", "--d-max", "0"]);
    let doc = json_of(&out);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["nd_gf"], "1");
}

#[test]
fn coeffs_reports_routes_and_relation() {
    let out = secant(&["coeffs", "--d", "2", "--g", "3", "--m", "6"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    let rows = doc["results"].as_array().unwrap();
    let row = |name: &str| {
        rows.iter()
            .find(|r| r["coefficient"] == name)
            .unwrap_or_else(|| panic!("row {}", name))
            .clone()
    };
    assert_eq!(row("p_c")["explicit"], "-7");
    assert_eq!(row("obveqn(s=3)")["explicit"], "0");

    // At (2, 9, 10) the hypergeometric route is defined and agrees.
    let out = secant(&["coeffs", "--d", "2", "--g", "9", "--m", "10"]);
    let doc = json_of(&out);
    let rows = doc["results"].as_array().unwrap();
    for (name, value) in [("p_alpha", "7"), ("p_beta", "-2"), ("p_c", "-27")] {
        let row = rows.iter().find(|r| r["coefficient"] == name).unwrap();
        assert_eq!(row["explicit"], value);
        assert_eq!(row["hypergeometric"], value);
        assert_eq!(row["generating_function"], value);
        assert_eq!(row["agree"], true);
    }
}

#[test]
fn coeffs_names_the_violated_precondition() {
    let out = secant(&["coeffs", "--d", "1", "--g", "0", "--m", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("p_alpha"), "stderr: {}", stderr);
    assert!(stderr.contains("2g"), "stderr: {}", stderr);
}

#[test]
fn nprime_r1_routes() {
    let out = secant(&["nprime", "--a", "1", "--d", "5"]);
    let doc = json_of(&out);
    assert_eq!(doc["results"][0]["nprime_r1"], "0");

    let out = secant(&["nprime", "--a", "2", "--d", "2"]);
    let doc = json_of(&out);
    assert_eq!(doc["results"][0]["nprime_r1"], "504");
    assert_eq!(doc["results"][0]["nprime_general"], "504");
    assert_eq!(doc["results"][0]["agree"], true);
}

#[test]
fn nprime_general_linear_form() {
    let out = secant(&[
        "nprime", "--d", "2", "--r", "2", "--s", "2", "--g", "7", "--m", "9", "--A", "6",
        "--Aprime", "4",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    let row = &doc["results"][0];
    assert_eq!(row["nprime_linear_form"], "8640");
    assert_eq!(row["rho"], 7);
    assert_eq!(row["mu"], -4);
    assert_eq!(row["enumerative"], false);

    // Rational-valued counts parse as p/q.
    let out = secant(&[
        "nprime", "--d", "2", "--r", "2", "--s", "2", "--g", "7", "--m", "9", "--A", "1/2",
        "--Aprime", "0",
    ]);
    assert!(out.status.success());
}

#[test]
fn oracle_reports_polynomial_and_value() {
    let out = secant(&["oracle", "--d", "2", "--g", "3", "--m", "6"]);
    let doc = json_of(&out);
    let row = &doc["results"][0];
    assert_eq!(row["polynomial"], "m^2 - 3m - γ");
    assert_eq!(row["value"], "7");
    assert_eq!(row["agree"], true);
}

#[test]
fn oracle_cap_error_names_the_opt_in() {
    let out = secant(&["oracle", "--d", "7", "--g", "0", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("SECANT_ORACLE_CAP"), "stderr: {}", stderr);
    assert!(stderr.contains("cap 6"), "stderr: {}", stderr);
}

#[test]
fn macdonald_rs_record_carries_sign() {
    let out = secant(&["macdonald-rs", "--s", "1", "--g", "0", "--m", "3"]);
    let doc = json_of(&out);
    let row = &doc["results"][0];
    assert_eq!(row["a"], "3");
    assert_eq!(row["aprime"], "3");
    assert_eq!(row["sign"], "-1");
}

#[test]
fn verify_exit_codes() {
    let out = secant(&["verify", "--suite", "wz"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["results"][0]["cases_run"], 49);
    assert_eq!(doc["results"][0]["passed"], true);

    let out = secant(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));

    let out = secant(&["verify", "--suite", "lemma45", "--d-max", "4", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_and_csv_carry_identical_content() {
    let json_out = secant(&["nd", "--g", "3", "--m", "6", "--d-max", "2"]);
    let csv_out = secant(&["nd", "--g", "3", "--m", "6", "--d-max", "2", "--format", "csv"]);
    let doc = json_of(&json_out);
    let csv = String::from_utf8_lossy(&csv_out.stdout);
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header, ["d", "nd_gf", "nd_acgh", "agree"]);
    for (row, json_row) in lines.zip(doc["results"].as_array().unwrap()) {
        let fields: Vec<String> = row
            .split(',')
            .map(|f| f.trim_matches('"').to_string())
            .collect();
        assert_eq!(fields[0], json_row["d"].to_string());
        assert_eq!(fields[1], json_row["nd_gf"].as_str().unwrap());
        assert_eq!(fields[2], json_row["nd_acgh"].as_str().unwrap());
        assert_eq!(fields[3], json_row["agree"].to_string());
    }
}

#[test]
fn usage_error_exits_two() {
    let out = secant(&["nd", "--g", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
