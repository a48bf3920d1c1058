//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Suites run once over the default corpus and are shared between
//! criteria.

use std::sync::OnceLock;
use std::time::Instant;

use kideal::budget::Budget;
use kideal::corpus::default_corpus;
use kideal::nat::{nat_classify, NatIdeal};
use kideal::suite::{run_all, SuiteReport};

struct SharedRun {
    reports: Vec<SuiteReport>,
    elapsed_ms: u128,
}

fn shared() -> &'static SharedRun {
    static RUN: OnceLock<SharedRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let corpus = default_corpus();
        let budget = Budget::default();
        let start = Instant::now();
        let reports = run_all(&corpus, &budget).expect("suites must run to completion");
        SharedRun { reports, elapsed_ms: start.elapsed().as_millis() }
    })
}

fn suite<'a>(run: &'a SharedRun, id: &str) -> &'a SuiteReport {
    run.reports.iter().find(|r| r.suite == id).unwrap_or_else(|| panic!("suite {id} missing"))
}

fn assert_clean(run: &SharedRun, criterion: &str, ids: &[&str]) {
    let mut ok = true;
    for id in ids {
        let report = suite(run, id);
        if !report.findings.is_empty() {
            ok = false;
            eprintln!("criterion {criterion}: suite {id} findings: {:?}", report.findings);
        }
        assert!(!report.vacuous, "criterion {criterion}: suite {id} was vacuous");
        assert_eq!(
            report.passes + report.findings.len() as u32,
            report.instances_checked,
            "criterion {criterion}: bookkeeping broken in {id}"
        );
    }
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} reported findings");
}

#[test]
fn criterion_1_nat_regression_vectors() {
    // Boolean equality, zero tolerance.
    let p4 = nat_classify(NatIdeal::new(4));
    assert!(p4.k_strongly_irreducible.holds);
    assert!(!p4.k_prime.holds);

    let p6 = nat_classify(NatIdeal::new(6));
    assert!(p6.k_semiprime.holds);
    assert!(!p6.k_prime.holds);
    assert!(!p6.k_strongly_irreducible.holds);

    for p in [2u64, 3, 5] {
        let sq = nat_classify(NatIdeal::new(p * p));
        assert!(sq.k_primary.holds, "p^2 N must be k-primary for p = {p}");
        assert!(!sq.k_prime.holds, "p^2 N must not be k-prime for p = {p}");
    }
    assert_clean(shared(), "1 (N-model regression vectors)", &["nat-regression-vectors"]);
}

#[test]
fn criterion_2_kclosure_laws() {
    assert_clean(shared(), "2 (k-closure laws)", &["kclosure-laws"]);
}

#[test]
fn criterion_3_exchange_principle() {
    assert_clean(shared(), "3 (exchange principle)", &["exchange-principle"]);
}

#[test]
fn criterion_4_theorem_suites() {
    assert_clean(
        shared(),
        "4 (theorem suites)",
        &[
            "kmax-implies-kprime",
            "subtractive-krull",
            "lattice-laws",
            "arithmetic-irreducible-coincidence",
            "vnr-kprime-eq-kprimary",
            "weakly-noetherian-irreducible-primary",
            "ik-system-equivalence",
        ],
    );
}

#[test]
fn criterion_5_quotient_suite() {
    assert_clean(
        shared(),
        "5 (quotient suite)",
        &["quotient-bourne-laws", "quotient-irreducibility"],
    );
}

#[test]
fn criterion_6_localisation_suite() {
    // Every default-corpus instance has |S| <= 9, so all of them are in
    // scope for the (S, T) sweeps.
    assert!(default_corpus().instances.iter().all(|i| i.ring.size() <= 9));
    assert_clean(
        shared(),
        "6 (localisation suite)",
        &["localisation-bijection", "localisation-ideal-laws", "localisation-primary"],
    );
}

#[test]
fn criterion_7_idempotent_suite() {
    assert_clean(
        shared(),
        "7 (additively idempotent suite)",
        &[
            "saturated-iff-kideal",
            "order-kprime-agrees",
            "order-ksemiprime-agrees",
            "absolutely-kprime-sandwich",
            "congruence-kmax-prime",
            "congruence-kmax-correspondence",
            "congruence-prime-irreducible",
            "congruence-ideal-irreducible",
            "congruence-excellent-irreducible",
        ],
    );
}

#[test]
fn criterion_8_oracle_crosschecks() {
    // Generators 0..=60 at bound 4 d^2 on the N side; |S| <= 6 instances
    // against the 2^n subset scan and the partition scan on the finite
    // side. Exact agreement, no tolerance.
    let run = shared();
    let nat = suite(run, "nat-oracle-crosscheck");
    assert!(nat.instances_checked >= 61, "all generators d <= 60 must be swept");
    assert_clean(run, "8 (oracle cross-checks)", &["nat-oracle-crosscheck", "ideal-enum-crosscheck"]);
}

#[test]
fn criterion_9_determinism() {
    // Library level: two fresh runs serialize identically.
    let corpus = default_corpus();
    let a = serde_json::to_string(&run_all(&corpus, &Budget::default()).unwrap()).unwrap();
    let b =
        serde_json::to_string(&run_all(&default_corpus(), &Budget::default()).unwrap()).unwrap();
    assert_eq!(a, b, "library reports must be byte-identical");

    // Binary level: `verify all --corpus default` twice.
    let bin = env!("CARGO_BIN_EXE_kideal");
    let run = |_: u32| {
        let out = std::process::Command::new(bin)
            .args(["verify", "all", "--corpus", "default"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "verify all must exit 0");
        out.stdout
    };
    assert_eq!(run(1), run(2), "CLI reports must be byte-identical");
    println!("criterion 9 (determinism): PASS");
}

#[test]
fn full_suite_fits_the_time_budget() {
    let run = shared();
    println!("full sweep: {} suites in {} ms", run.reports.len(), run.elapsed_ms);
    assert!(run.elapsed_ms < 300_000, "the default-corpus sweep must finish within 5 minutes");
}

// Remaining registered suites are part of the same gate: everything the
// harness knows about must be clean on the default corpus.
#[test]
fn all_registered_suites_are_clean() {
    let run = shared();
    let ids: Vec<&str> = run.reports.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(ids.len(), kideal::suite::registry().len());
    let all: Vec<&str> = ids.clone();
    assert_clean(run, "all-suites", &all);
}
