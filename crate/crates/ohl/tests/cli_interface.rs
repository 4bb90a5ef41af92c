//! End-to-end coverage of the batch front end: exact stdout for the worked
//! examples, exit-code contract, JSON line schema, round-trips through the
//! text grammar, and byte-level determinism across worker counts and seeds.

use std::process::Command;

fn ohl(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ohl"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

// ---------------------------------------------------------------------------
// Worked examples, byte for byte
// ---------------------------------------------------------------------------

#[test]
fn product_worked_example() {
    let (code, out, _) = ohl(&["mul", "--structure", "mr-hat", "[1]", "[2,1]"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1*[1,3,2] + 1*[3,1,2] + 1*[3,2,1]\n");
}

#[test]
fn substitution_worked_example() {
    let (code, out, _) = ohl(&[
        "compose", "--operad", "as", "[3,2,1,4]", "[2,1]", "[1,3,2]", "[1]", "[2,3,1]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "[6,5,2,4,3,1,8,9,7]\n");
}

#[test]
fn map_worked_examples() {
    let (code, out, _) = ohl(&["map", "--name", "phi", "{3,4}|{1}|{5,6}|{2}"]);
    assert_eq!(code, 0);
    assert_eq!(out, "((| (| |)) | (| | |))\n");

    let (code, out, _) = ohl(&["map", "--name", "alpha", "[1,2]"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[2,1]\n");

    let (code, out, _) = ohl(&["map", "--name", "psi0", "(| (| |))"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1*[1,2]\n");
}

#[test]
fn compact_set_composition_grammar_is_accepted() {
    let (code, out, _) = ohl(&["map", "--name", "phi", "(34,1,56,2)"]);
    assert_eq!(code, 0);
    assert_eq!(out, "((| (| |)) | (| | |))\n");
}

#[test]
fn dimension_tables() {
    let cases = [
        ("perms", "5", "1,1,2,6,24,120"),
        ("setcomps", "4", "1,1,3,13,75"),
        ("trees", "4", "1,1,3,11,45"),
        ("bintrees", "4", "1,1,2,5,14"),
    ];
    for (family, md, want) in cases {
        let (code, out, _) = ohl(&["dims", "--family", family, "--max-degree", md]);
        assert_eq!(code, 0);
        assert_eq!(out.trim_end(), want, "family {family}");
    }
}

#[test]
fn primitive_dimension_tables() {
    let (code, out, _) = ohl(&["primitives", "--structure", "mr-barco", "--max-degree", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "1,1,3,13,71");

    let (code, out, _) = ohl(&["primitives", "--structure", "ctd", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "1,2,8,48");

    let (code, out, _) = ohl(&["primitives", "--structure", "td", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "1,2,6,22");
}

#[test]
fn generator_series_output() {
    let (code, out, _) = ohl(&["series", "--family", "setcomps", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "dims: 1,3,13,75\ngenerators: 1,2,8,48\n");
}

// ---------------------------------------------------------------------------
// Exit-code contract
// ---------------------------------------------------------------------------

#[test]
fn unknown_structure_exits_two() {
    let (code, _, err) = ohl(&["mul", "--structure", "mystery", "[1]", "[1]"]);
    assert_eq!(code, 2);
    assert!(err.contains("UnknownStructure"), "stderr: {err}");
}

#[test]
fn parse_errors_exit_two() {
    let (code, _, err) = ohl(&["mul", "--structure", "mr-hat", "[1,1]", "[1]"]);
    assert_eq!(code, 2);
    assert!(err.contains("ParseError"), "stderr: {err}");

    let (code, _, err) = ohl(&["comul", "--structure", "td", "(|", ]);
    assert_eq!(code, 2);
    assert!(err.contains("ParseError"), "stderr: {err}");
}

#[test]
fn domain_mismatches_exit_two() {
    // non-standard labels cannot enter the surjection to trees
    let (code, _, err) = ohl(&["map", "--name", "phi", "{3}|{1}"]);
    assert_eq!(code, 2);
    assert!(err.contains("DomainMismatch"), "stderr: {err}");

    // wide trees have no dendriform structure
    let (code, _, err) = ohl(&["mul", "--structure", "dend", "(| | |)", "(| |)"]);
    assert_eq!(code, 2);
    assert!(err.contains("DomainMismatch"), "stderr: {err}");

    // the merge generator leaves the degree-zero faces
    let (code, _, err) = ohl(&["compose", "--operad", "zin", "--gen", "dot", "[1]", "[1]"]);
    assert_eq!(code, 2);
    assert!(err.contains("DomainMismatch"), "stderr: {err}");
}

#[test]
fn arity_mismatch_exits_two() {
    let (code, _, _) = ohl(&["compose", "--operad", "as", "[2,1]", "[1]"]);
    assert_eq!(code, 2);
}

#[test]
fn coproduct_only_structures_reject_mul() {
    let (code, _, _) = ohl(&["mul", "--structure", "mr-barco", "[1]", "[1]"]);
    assert_eq!(code, 2);
    let (code, _, _) = ohl(&["comul", "--structure", "mr-hat", "[1]"]);
    assert_eq!(code, 2);
}

#[test]
fn degree_cap_refuses_without_override() {
    let (code, _, err) = ohl(&["verify", "--suite", "words", "--max-degree", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("--unsafe-degree"), "stderr: {err}");

    let (code, _, _) = ohl(&["dims", "--family", "perms", "--max-degree", "9"]);
    assert_eq!(code, 2);

    // the cap itself is reachable
    let (code, out, _) = ohl(&["dims", "--family", "trees", "--max-degree", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "1,1,3,11,45,197,903,4279,20793");
}

#[test]
fn verify_failure_exits_one_with_witness() {
    let (code, out, _) = ohl(&["verify", "--suite", "mr", "--mutate", "drop-shuffle-1"]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL]"));
    assert!(out.contains("witness: inputs="), "failures must print a witness");
}

#[test]
fn verify_all_passes_quickly_at_degree_three() {
    let (code, out, _) = ohl(&["verify", "--suite", "all", "--max-degree", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() > 100);
    assert!(out.lines().all(|l| l.starts_with("[PASS]")));
}

// ---------------------------------------------------------------------------
// JSON lines
// ---------------------------------------------------------------------------

#[test]
fn mul_json_is_one_term_per_line() {
    let (code, out, _) = ohl(&["mul", "--structure", "mr-hat", "[1]", "[2,1]", "--json"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["coeff"], "1");
        assert!(v["basis"].as_str().unwrap().starts_with('['));
    }
    assert_eq!(lines[0], r#"{"coeff":"1","basis":"[1,3,2]"}"#);
}

#[test]
fn fractional_coefficients_survive_the_round_trip() {
    let (code, out, _) =
        ohl(&["mul", "--structure", "words", "1/2*ab", "-1/3*c", "--json"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["coeff"], "-1/6");
    }
}

#[test]
fn verify_json_lines_have_the_report_schema() {
    let (code, out, _) = ohl(&["verify", "--suite", "duality", "--json"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "duality");
        assert_eq!(v["status"], "pass");
        assert!(v["axiom"].is_string());
    }
}

// ---------------------------------------------------------------------------
// Round-trips through the text grammar
// ---------------------------------------------------------------------------

#[test]
fn product_output_parses_back_as_input() {
    // concatenating with the empty permutation is the identity, so feeding
    // a product's text back in must reproduce it verbatim
    let (_, sum, _) = ohl(&["mul", "--structure", "mr-hat", "[2,1]", "[1,2]"]);
    let sum = sum.trim_end().to_string();
    let (code, echoed, _) = ohl(&["mul", "--structure", "mr-bar", &sum, "[]"]);
    assert_eq!(code, 0);
    assert_eq!(echoed.trim_end(), sum);
}

#[test]
fn set_composition_products_round_trip() {
    let (_, sum, _) = ohl(&["mul", "--structure", "ncqsym", "{1}", "{1,2}"]);
    let sum = sum.trim_end().to_string();
    let (code, echoed, _) = ohl(&["mul", "--structure", "ps-twisted", &sum, "{}"]);
    assert_eq!(code, 0);
    assert_eq!(echoed.trim_end(), sum);
}

#[test]
fn tree_products_round_trip() {
    let (_, sum, _) = ohl(&["mul", "--structure", "td", "(| |)", "(| | |)"]);
    let sum = sum.trim_end().to_string();
    let (code, echoed, _) = ohl(&["mul", "--structure", "td", &sum, "|"]);
    assert_eq!(code, 0);
    assert_eq!(echoed.trim_end(), sum);
}

// ---------------------------------------------------------------------------
// Determinism
// ---------------------------------------------------------------------------

#[test]
fn verify_output_is_identical_across_worker_counts() {
    let (c1, o1, _) = ohl(&["verify", "--suite", "all", "--max-degree", "3", "--jobs", "1"]);
    let (c8, o8, _) = ohl(&["verify", "--suite", "all", "--max-degree", "3", "--jobs", "8"]);
    assert_eq!(c1, 0);
    assert_eq!(c8, 0);
    assert_eq!(o1, o8, "worker count changed the output");
}

#[test]
fn seed_shuffles_schedule_but_not_output() {
    let (_, base, _) = ohl(&["verify", "--suite", "tree", "--max-degree", "3"]);
    for seed in ["0", "1", "123456789", "not-a-number"] {
        let (code, out, _) = run_with_env(
            &["verify", "--suite", "tree", "--max-degree", "3", "--jobs", "4"],
            &[("OHL_SEED", seed)],
        );
        assert_eq!(code, 0);
        assert_eq!(out, base, "seed {seed} changed the output");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let (_, a, _) = ohl(&["comul", "--structure", "ctd", "{2}|{1,3}"]);
    let (_, b, _) = ohl(&["comul", "--structure", "ctd", "{2}|{1,3}"]);
    assert_eq!(a, b);
}
