//! End-to-end checks of the `kideal` binary: JSON formats, exit codes,
//! and the wire behavior of every subcommand.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kideal"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("kideal-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn generate_then_classify_chain_ideal() {
    let table = run(&["generate", "chain", "3"]);
    assert!(table.status.success());
    let path = temp_file("chain3.json", std::str::from_utf8(&table.stdout).unwrap());

    let out = run(&["classify", "--semiring", path.to_str().unwrap(), "--ideal", "0,1"]);
    assert!(out.status.success());
    let profile = stdout_json(&out);
    assert_eq!(profile["k_maximal"], true);
    assert_eq!(profile["k_prime"], true);
    assert_eq!(profile["strong"], true);
}

#[test]
fn validate_accepts_generated_and_rejects_malformed() {
    let table = run(&["generate", "trunc", "2"]);
    let path = temp_file("n2.json", std::str::from_utf8(&table.stdout).unwrap());
    let out = run(&["validate", "--semiring", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["valid"], true);

    // Non-commutative addition is an axiom violation, not a parse error.
    let bad = temp_file(
        "bad.json",
        r#"{"size":2,"add":[[0,1],[0,1]],"mul":[[0,0],[0,1]],"zero":0,"one":1,"name":"bad"}"#,
    );
    let out = run(&["validate", "--semiring", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["valid"], false);

    // Ragged tables are a usage error.
    let ragged = temp_file(
        "ragged.json",
        r#"{"size":2,"add":[[0,1],[1]],"mul":[[0,0],[0,1]],"zero":0,"one":1,"name":"ragged"}"#,
    );
    let out = run(&["validate", "--semiring", ragged.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideals_closure_radical_roundtrip() {
    let table = run(&["generate", "trunc", "2"]);
    let path = temp_file("n2b.json", std::str::from_utf8(&table.stdout).unwrap());
    let path = path.to_str().unwrap();

    let out = stdout_json(&run(&["ideals", "--semiring", path]));
    assert_eq!(out["ideal_count"], 3);
    assert_eq!(out["k_ideal_count"], 2);

    let out = stdout_json(&run(&["closure", "--semiring", path, "--ideal", "0,2"]));
    assert_eq!(out["k_closure"], serde_json::json!([0, 1, 2]));

    let out = stdout_json(&run(&["radical", "--semiring", path, "--ideal", "0"]));
    assert_eq!(out["k_radical"], serde_json::json!([0]));

    // {0,2} is not a k-ideal, so radical refuses it as usage.
    let out = run(&["radical", "--semiring", path, "--ideal", "0,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quotient_and_localize_emit_tables() {
    let table = run(&["generate", "chain", "3"]);
    let path = temp_file("c3.json", std::str::from_utf8(&table.stdout).unwrap());
    let path = path.to_str().unwrap();

    let out = stdout_json(&run(&["quotient", "--semiring", path, "--ideal", "0,1"]));
    assert_eq!(out["semiring"]["size"], 2);
    assert_eq!(out["projection"], serde_json::json!([0, 0, 1]));

    let n2 = run(&["generate", "trunc", "2"]);
    let n2path = temp_file("n2c.json", std::str::from_utf8(&n2.stdout).unwrap());
    let out =
        stdout_json(&run(&["localize", "--semiring", n2path.to_str().unwrap(), "--denoms", "1,2"]));
    assert_eq!(out["semiring"]["size"], 2, "inverting 2 collapses N2 onto B1");

    // Denominator 0 degenerates and is rejected.
    let out = run(&["localize", "--semiring", n2path.to_str().unwrap(), "--denoms", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn congruences_listing() {
    let table = run(&["generate", "chain", "3"]);
    let path = temp_file("c3b.json", std::str::from_utf8(&table.stdout).unwrap());
    let out = stdout_json(&run(&["congruences", "--semiring", path.to_str().unwrap()]));
    assert_eq!(out["count"], 4);
}

#[test]
fn nat_subcommands() {
    let out = stdout_json(&run(&["nat", "classify", "--nat-ideal", "4"]));
    assert_eq!(out["k_strongly_irreducible"], true);
    assert_eq!(out["k_prime"], false);

    // Flag-before-action spelling works too.
    let out2 = stdout_json(&run(&["nat", "--nat-ideal", "4", "classify"]));
    assert_eq!(out, out2);

    let out = stdout_json(&run(&["nat", "ops", "--nat-ideal", "6", "--other", "4"]));
    assert_eq!(out["intersection"], 12);
    assert_eq!(out["sum_k_closure"], 2);

    let out = stdout_json(&run(&["nat", "lcm", "--nat-ideal", "6", "--bound", "24"]));
    assert_eq!(out["holds"], false);
    assert_eq!(out["witness"], serde_json::json!([2, 3]));

    let out = stdout_json(&run(&["nat", "decompose", "--nat-ideal", "12"]));
    assert_eq!(out["parts"], serde_json::json!([4, 3]));

    let out = stdout_json(&run(&["nat", "classify", "--trop-ideal", "2"]));
    assert_eq!(out["k_strongly_irreducible"], true);
    assert_eq!(out["k_prime"], false);

    let out = stdout_json(&run(&["nat", "localise", "--t-gens", "2"]));
    assert_eq!(out["colon_formula_ok"], true);

    let out = run(&["nat", "classify"]);
    assert_eq!(out.status.code(), Some(2), "needs an ideal argument");
}

#[test]
fn verify_single_suite_and_seeded_corpus() {
    let out = run(&[
        "verify",
        "exchange-principle",
        "--seed",
        "trunc=1..2;chain=2..3;prod=B1;zn=2;trop=1..2",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["findings_total"], 0);
    assert_eq!(report["reports"][0]["suite"], "exchange-principle");

    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "core-algebra-laws", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3), "budget exhaustion is exit 3");
    assert!(stdout_json(&out)["interrupted"].is_object());
}
