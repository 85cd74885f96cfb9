//! Integration tests for the command-line surface: grammars, exit codes,
//! report shapes, and the cache contract.

use hered::cli::{run, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use serde_json::Value;

fn run_args(args: &[&str]) -> (i32, String) {
    let v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let out = run(&v);
    (out.code, out.stdout)
}

fn run_json(args: &[&str]) -> (i32, Value) {
    // insert --json right after the subcommand so it stays ahead of any
    // "--" end-of-options marker
    let mut v: Vec<&str> = args.to_vec();
    v.insert(1, "--json");
    let (code, text) = run_args(&v);
    let value = serde_json::from_str(&text).expect("valid JSON report");
    (code, value)
}

/// Minimal structural validation against the published report schema: the
/// required envelope fields with their required types.
fn validate_envelope(v: &Value) {
    let obj = v.as_object().expect("report is an object");
    for key in ["command", "params", "result", "discrepancies", "warnings", "notes", "status"] {
        assert!(obj.contains_key(key), "missing envelope key {key}");
    }
    assert!(obj["command"].is_string());
    assert!(obj["params"].is_object());
    assert!(obj["discrepancies"].is_array());
    for d in obj["discrepancies"].as_array().unwrap() {
        for key in ["id", "claimed", "computed"] {
            assert!(d[key].is_string(), "discrepancy missing {key}");
        }
    }
    assert!(obj["warnings"].is_array());
    assert!(obj["notes"].is_array());
    assert_eq!(obj["status"], "ok");
}

#[test]
fn factor_paper_example_exits_zero() {
    let (code, v) = run_json(&["factor", "-f", "Q[a]/(a^4-2)", "x^4+2"]);
    assert_eq!(code, EXIT_OK);
    validate_envelope(&v);
    let factors: Vec<&str> = v["result"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["poly"].as_str().unwrap())
        .collect();
    assert_eq!(factors, vec!["x^2-(a^3)*x+(a^2)", "x^2+(a^3)*x+(a^2)"]);
}

#[test]
fn tree_json_shows_level_4_split() {
    let (code, v) = run_json(&["tree", "-f", "Q", "x+4", "--depth", "4"]);
    assert_eq!(code, EXIT_OK);
    validate_envelope(&v);
    let sizes: Vec<u64> = v["result"]["level_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![1, 1, 1, 2]);
    assert_eq!(v["result"]["level_products_verified"], true);
    // node records carry parents and statuses
    for node in v["result"]["nodes"].as_array().unwrap() {
        assert!(node["status"]["kind"].is_string());
    }
}

#[test]
fn element_refutation_exits_two() {
    let (code, v) = run_json(&[
        "element", "-f", "Q", "--op", "very-rootless-modtor", "--", "-4",
    ]);
    assert_eq!(code, EXIT_REFUTED);
    validate_envelope(&v);
    assert_eq!(v["result"]["verdict"], "false");
    assert_eq!(v["result"]["witness"]["twist"], "-1");
    assert_eq!(v["result"]["witness"]["root"], "2");
    assert_eq!(v["result"]["witness"]["prime"], 2);

    // the plain check passes for -4 and exits 0
    let (code, v) = run_json(&["element", "-f", "Q", "--op", "very-rootless", "--", "-4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["verdict"], "true-up-to-bound");
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let (code, _) = run_args(&["no-such-command"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, text) = run_args(&["factor", "-f", "Q", "x^^2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(text.contains("offset 3"), "position missing in: {text}");
    let (code, _) = run_args(&["factor", "-f", "Q[a]/(a^2-1)", "x"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn text_and_json_carry_identical_mathematical_content() {
    let (code_t, text) = run_args(&["factor", "-f", "Q", "x^4+4"]);
    let (code_j, v) = run_json(&["factor", "-f", "Q", "x^4+4"]);
    assert_eq!(code_t, EXIT_OK);
    assert_eq!(code_j, EXIT_OK);
    // every factor string in the JSON appears verbatim in the text
    for f in v["result"]["factors"].as_array().unwrap() {
        let poly = f["poly"].as_str().unwrap();
        assert!(text.contains(poly), "text report missing {poly}");
    }
    assert!(text.contains("x^2-2*x+2") && text.contains("x^2+2*x+2"));
}

#[test]
fn verify_all_examples_exit_zero() {
    let (code, v) = run_json(&["verify", "--all"]);
    assert_eq!(code, EXIT_OK);
    validate_envelope(&v);
    let examples = v["result"]["examples"].as_array().unwrap();
    assert_eq!(examples.len(), hered::cli::verify::REGISTRY.len());
    for ex in examples {
        assert_eq!(ex["verified"], true, "example {} failed", ex["id"]);
    }
    // the audit flags the n = 4 contradiction
    let ids: Vec<&str> = v["discrepancies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"xn-plus-4-irreducible-for-all-n"));
}

#[test]
fn verify_single_example_with_level_override() {
    let (code, v) = run_json(&["verify", "rottenroots-claim3", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    let detail = &v["result"]["examples"][0]["detail"];
    assert_eq!(detail["divides_exactly"], true);
    assert!(!v["discrepancies"].as_array().unwrap().is_empty());
    let (code, _) = run_args(&["verify", "no-such-example"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn cache_cold_and_warm_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let cache_arg = path.display().to_string();
    let args = [
        "tree", "-f", "Q", "x+4", "--depth", "4", "--cache", &cache_arg, "--json",
    ];
    let (code1, cold) = run_args(&args);
    assert_eq!(code1, EXIT_OK);
    assert!(path.exists());
    let (code2, warm) = run_args(&args);
    assert_eq!(code2, EXIT_OK);
    assert_eq!(cold, warm, "cold and warm cache reports differ");

    // stats and verify see the same records
    let (code, v) = run_json(&["cache", "stats", "--cache", &cache_arg]);
    assert_eq!(code, EXIT_OK);
    assert!(v["result"]["entries"].as_u64().unwrap() > 0);
    let (code, v) = run_json(&["cache", "verify", "--cache", &cache_arg]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["invalid"], 0);
}

#[test]
fn corrupt_cache_lines_are_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    std::fs::write(&path, "garbage line\n").unwrap();
    let cache_arg = path.display().to_string();
    let (code, v) = run_json(&["cache", "stats", "--cache", &cache_arg]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["entries"], 0);
    assert_eq!(v["result"]["skipped_lines"], 1);
    // a factor run through the damaged cache still succeeds
    let (code, v) = run_json(&["factor", "-f", "Q", "x^4+4", "--cache", &cache_arg]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn resource_cap_exits_three() {
    let (code, text) = run_args(&[
        "factor", "-f", "Q[a]/(a^4-2)", "x^4+2", "--degree-cap", "4",
    ]);
    assert_eq!(code, hered::cli::EXIT_RESOURCE);
    assert!(text.contains("resource"), "message: {text}");
}

#[test]
fn classify_reports_match_schema() {
    let (code, v) = run_json(&["classify", "-f", "Q", "x-2", "--depth", "4"]);
    assert_eq!(code, EXIT_OK);
    validate_envelope(&v);
    assert_eq!(v["result"]["verdict"], "good-heredity-certified");
    let (code, v) = run_json(&[
        "classify", "-f", "Q[a]/(a^4-17)", "x+17", "--depth", "3",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["verdict"], "inconclusive-at-depth");
}

#[test]
fn custom_exponent_schedule_is_labeled() {
    let (code, v) = run_json(&[
        "tree", "-f", "Q", "x-2", "--depth", "3", "--exponents", "1,2,4",
    ]);
    assert_eq!(code, EXIT_OK);
    let notes = v["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("factorial")));
}

#[test]
fn env_var_cache_path_is_honored() {
    // uses the element command (no factoring) plus a factor run to show the
    // env var engages the cache file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env-cache.jsonl");
    std::env::set_var("HERED_CACHE", &path);
    let (code, _) = run_args(&["factor", "-f", "Q", "x^4+4"]);
    std::env::remove_var("HERED_CACHE");
    assert_eq!(code, EXIT_OK);
    assert!(path.exists(), "HERED_CACHE file was not created");
}
