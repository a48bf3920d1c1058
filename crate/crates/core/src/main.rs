//! Command-line workbench: load or generate semirings, run the ideal and
//! congruence machinery, and replay the law suites over a corpus.
//!
//! All output is JSON on stdout (`--pretty` for indented form). Exit codes:
//! 0 on success with no findings, 2 on usage errors, 3 when a search budget
//! is exhausted (a partial report is still emitted), 4 when `verify` found
//! violations.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use kideal::budget::Budget;
use kideal::classify::{classify_ideal, k_primary_decomposition, Classifier};
use kideal::congruence::enumerate_congruences;
use kideal::corpus::{atom_semiring, corpus_from_spec, corpus_from_tables, Corpus};
use kideal::error::Error;
use kideal::ideal::{is_ideal, is_k_ideal, k_closure, k_radical, IdealLattice, MultSet};
use kideal::localize::localize;
use kideal::nat::{
    nat_classify, nat_lcm_witness, nat_localisation_correspondence, nat_ops,
    nat_primary_decomposition, nat_prime_element_theorems, nat_radical, trop_classify,
    trop_lcm_criterion, NatIdeal, TropIdeal,
};
use kideal::quotient::bourne_quotient;
use kideal::semiring::{validate_semiring, FiniteSemiring, SemiringTable};
use kideal::set::CarrierSet;
use kideal::suite::{run_suite, suite_ids, total_findings, SuiteReport};

#[derive(Parser)]
#[command(
    name = "kideal",
    about = "workbench for subtractive ideals of finite commutative semirings",
    version
)]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Step budget for enumeration-heavy operations.
    #[arg(long, global = true, default_value_t = 2_000_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SemiringArg {
    /// Path to a semiring table JSON file.
    #[arg(long)]
    semiring: std::path::PathBuf,
}

#[derive(Args)]
struct IdealArg {
    /// Comma-separated element indices, e.g. `0,2`.
    #[arg(long)]
    ideal: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semiring axioms of a table file.
    Validate(SemiringArg),
    /// Emit a generator-family semiring as a table.
    Generate {
        /// One of: boolean | trunc | chain | tropical | zn | product.
        family: String,
        /// Size parameter (cap or n) for the scalar families.
        param: Option<usize>,
        /// Left factor for `product`: an atom name (B1, C3, N2, Z4, T3) or a table path.
        #[arg(long)]
        left: Option<String>,
        /// Right factor for `product`.
        #[arg(long)]
        right: Option<String>,
    },
    /// Enumerate all ideals (k-ideals flagged).
    Ideals(SemiringArg),
    /// Classify an ideal against the full taxonomy.
    Classify {
        #[command(flatten)]
        semiring: SemiringArg,
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// k-closure of an ideal.
    Closure {
        #[command(flatten)]
        semiring: SemiringArg,
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// k-radical and k-primary decomposition of a k-ideal.
    Radical {
        #[command(flatten)]
        semiring: SemiringArg,
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Bourne quotient S/I with its projection map.
    Quotient {
        #[command(flatten)]
        semiring: SemiringArg,
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Localisation at a multiplicative set of denominators.
    Localize {
        #[command(flatten)]
        semiring: SemiringArg,
        /// Comma-separated denominator indices; must be multiplicatively
        /// closed once 1 is added.
        #[arg(long)]
        denoms: String,
    },
    /// Enumerate all congruences as class-index arrays.
    Congruences(SemiringArg),
    /// Symbolic models of (N, +, .) and the min-plus semiring.
    Nat {
        /// One of: classify | ops | lcm | decompose | prime-elements | localise.
        action: String,
        /// Generator d of the ideal dN.
        #[arg(long)]
        nat_ideal: Option<u64>,
        /// Threshold of an up-set ideal: a number or `inf`.
        #[arg(long)]
        trop_ideal: Option<String>,
        /// Second generator for `ops`.
        #[arg(long)]
        other: Option<u64>,
        /// Sample bound for the lcm criterion.
        #[arg(long, default_value_t = 24)]
        bound: u64,
        /// Prime generators of the multiplicative set for `localise`.
        #[arg(long)]
        t_gens: Option<String>,
    },
    /// Run law suites over a corpus.
    Verify {
        /// Suite id or `all`.
        suite: String,
        /// `default`, a seed spec string, or a path to a JSON array of
        /// semiring tables.
        #[arg(long, default_value = "default")]
        corpus: String,
        /// Seed spec overriding the generator families.
        #[arg(long)]
        seed: Option<String>,
        /// Record wall-clock runtimes (off by default so reports stay
        /// byte-identical across runs).
        #[arg(long)]
        timing: bool,
    },
}

fn load_semiring(path: &std::path::Path) -> Result<FiniteSemiring, Error> {
    let text = std::fs::read_to_string(path)?;
    let table: SemiringTable = serde_json::from_str(&text)?;
    FiniteSemiring::from_table(&table)
}

fn parse_elems(ring: &FiniteSemiring, spec: &str) -> Result<CarrierSet, Error> {
    let mut out = CarrierSet::EMPTY;
    for part in spec.split(',').filter(|p| !p.is_empty()) {
        let v: usize =
            part.parse().map_err(|_| Error::Param(format!("bad element index {part:?}")))?;
        if v >= ring.size() {
            return Err(Error::Param(format!("element {v} out of range for |S|={}", ring.size())));
        }
        out.insert(v as u8);
    }
    Ok(out)
}

fn require_ideal(ring: &FiniteSemiring, set: &CarrierSet) -> Result<(), Error> {
    if !is_ideal(ring, set) {
        return Err(Error::Param(format!("{set} is not an ideal of {}", ring.name())));
    }
    Ok(())
}

fn emit(value: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    };
    println!("{text}");
}

fn ideal_json(set: &CarrierSet) -> Value {
    json!(set.to_vec())
}

fn run(cli: Cli) -> Result<i32, Error> {
    let budget = Budget::new(cli.budget);
    let pretty = cli.pretty;
    match cli.command {
        Command::Validate(arg) => {
            let text = std::fs::read_to_string(&arg.semiring)?;
            let table: SemiringTable = serde_json::from_str(&text)?;
            let report = validate_semiring(&table.add, &table.mul, table.zero, table.one)?;
            emit(&serde_json::to_value(&report)?, pretty);
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Generate { family, param, left, right } => {
            let need = |p: Option<usize>| {
                p.ok_or_else(|| Error::Param(format!("family {family} needs a size parameter")))
            };
            let ring = match family.as_str() {
                "boolean" => kideal::semiring::make_boolean(),
                "trunc" => kideal::semiring::make_truncated_nat(need(param)?)?,
                "chain" => kideal::semiring::make_chain_lattice(need(param)?)?,
                "tropical" => kideal::semiring::make_tropical(need(param)?)?,
                "zn" => kideal::semiring::make_zn_ring(need(param)?)?,
                "product" => {
                    let resolve =
                        |spec: Option<String>, side: &str| -> Result<FiniteSemiring, Error> {
                            let spec = spec
                                .ok_or_else(|| Error::Param(format!("product needs --{side}")))?;
                            if std::path::Path::new(&spec).exists() {
                                load_semiring(std::path::Path::new(&spec))
                            } else {
                                atom_semiring(&spec)
                            }
                        };
                    let l = resolve(left, "left")?;
                    let r = resolve(right, "right")?;
                    kideal::semiring::make_product(&l, &r)?
                }
                other => return Err(Error::Param(format!("unknown family {other:?}"))),
            };
            emit(&serde_json::to_value(ring.to_table())?, pretty);
            Ok(0)
        }
        Command::Ideals(arg) => {
            let ring = load_semiring(&arg.semiring)?;
            let lat = IdealLattice::compute(&ring, &budget)?;
            let items: Vec<Value> = lat
                .ideals
                .iter()
                .map(|i| {
                    json!({
                        "members": i.to_vec(),
                        "k_ideal": is_k_ideal(&ring, i),
                    })
                })
                .collect();
            emit(
                &json!({
                    "semiring": ring.name(),
                    "ideal_count": lat.ideals.len(),
                    "k_ideal_count": lat.k_ideals.len(),
                    "ideals": items,
                }),
                pretty,
            );
            Ok(0)
        }
        Command::Classify { semiring, ideal } => {
            let ring = load_semiring(&semiring.semiring)?;
            let set = parse_elems(&ring, &ideal.ideal)?;
            let lat = IdealLattice::compute(&ring, &budget)?;
            let profile = classify_ideal(&lat, &set);
            emit(&profile.to_json(), pretty);
            Ok(0)
        }
        Command::Closure { semiring, ideal } => {
            let ring = load_semiring(&semiring.semiring)?;
            let set = parse_elems(&ring, &ideal.ideal)?;
            require_ideal(&ring, &set)?;
            let closed = k_closure(&ring, &set);
            emit(&json!({ "input": ideal_json(&set), "k_closure": ideal_json(&closed) }), pretty);
            Ok(0)
        }
        Command::Radical { semiring, ideal } => {
            let ring = load_semiring(&semiring.semiring)?;
            let set = parse_elems(&ring, &ideal.ideal)?;
            if !is_k_ideal(&ring, &set) {
                return Err(Error::Param(format!("{set} is not a k-ideal of {}", ring.name())));
            }
            let lat = IdealLattice::compute(&ring, &budget)?;
            let radical = k_radical(&lat, &set);
            let cls = Classifier::new(&lat);
            let decomposition = k_primary_decomposition(&cls, &set, &budget)?
                .map(|parts| parts.iter().map(ideal_json).collect::<Vec<_>>());
            emit(
                &json!({
                    "input": ideal_json(&set),
                    "k_radical": ideal_json(&radical),
                    "k_primary_decomposition": decomposition,
                    "note": "empty intersection of k-primes is the whole semiring",
                }),
                pretty,
            );
            Ok(0)
        }
        Command::Quotient { semiring, ideal } => {
            let ring = load_semiring(&semiring.semiring)?;
            let set = parse_elems(&ring, &ideal.ideal)?;
            require_ideal(&ring, &set)?;
            let q = bourne_quotient(&ring, &set);
            emit(
                &json!({
                    "semiring": serde_json::to_value(q.ring.to_table())?,
                    "projection": q.class_of,
                }),
                pretty,
            );
            Ok(0)
        }
        Command::Localize { semiring, denoms } => {
            let ring = load_semiring(&semiring.semiring)?;
            let mut set = parse_elems(&ring, &denoms)?;
            set.insert(ring.one());
            let t = MultSet::new(&ring, set)?;
            let loc = localize(&ring, &t)?;
            emit(
                &json!({
                    "semiring": serde_json::to_value(loc.ring.to_table())?,
                    "canonical": loc.canonical,
                    "denominators": loc.denominators.to_vec(),
                }),
                pretty,
            );
            Ok(0)
        }
        Command::Congruences(arg) => {
            let ring = load_semiring(&arg.semiring)?;
            let all = enumerate_congruences(&ring, &budget)?;
            let arrays: Vec<Vec<u8>> = all.iter().map(|c| c.class_of.clone()).collect();
            emit(
                &json!({ "semiring": ring.name(), "count": arrays.len(), "congruences": arrays }),
                pretty,
            );
            Ok(0)
        }
        Command::Nat { action, nat_ideal, trop_ideal, other, bound, t_gens } => {
            let trop = match trop_ideal.as_deref() {
                None => None,
                Some("inf") => Some(TropIdeal::new(None)),
                Some(v) => Some(TropIdeal::new(Some(v.parse().map_err(|_| {
                    Error::Param(format!("bad tropical threshold {v:?} (number or 'inf')"))
                })?))),
            };
            let value = match (action.as_str(), nat_ideal, trop) {
                ("classify", Some(d), None) => nat_classify(NatIdeal::new(d)).to_json(),
                ("classify", None, Some(t)) => trop_classify(t).to_json(),
                ("ops", Some(d), None) => {
                    let e = other.ok_or_else(|| Error::Param("ops needs --other <e>".into()))?;
                    let ops = nat_ops(NatIdeal::new(d), NatIdeal::new(e));
                    json!({
                        "sum_k_closure": ops.sum_k_closure,
                        "product": ops.product,
                        "intersection": ops.intersection,
                        "radical_of_first": nat_radical(NatIdeal::new(d)).generator,
                    })
                }
                ("lcm", Some(d), None) => {
                    let witness = nat_lcm_witness(NatIdeal::new(d), bound);
                    json!({ "holds": witness.is_none(), "witness": witness, "bound": bound })
                }
                ("lcm", None, Some(t)) => {
                    json!({ "holds": trop_lcm_criterion(t, bound), "bound": bound })
                }
                ("decompose", Some(d), None) => {
                    if d == 0 {
                        json!({ "parts": [0u64], "note": "the zero ideal is already k-prime" })
                    } else {
                        let parts: Vec<u64> = nat_primary_decomposition(NatIdeal::new(d))
                            .iter()
                            .map(|p| p.generator)
                            .collect();
                        json!({ "parts": parts })
                    }
                }
                ("prime-elements", Some(d), None) => {
                    json!({ "holds": nat_prime_element_theorems(NatIdeal::new(d))? })
                }
                ("localise", _, None) => {
                    let gens: Vec<u64> = t_gens
                        .unwrap_or_default()
                        .split(',')
                        .filter(|p| !p.is_empty())
                        .map(|p| {
                            p.parse()
                                .map_err(|_| Error::Param(format!("bad prime {p:?} in --t-gens")))
                        })
                        .collect::<Result<_, _>>()?;
                    serde_json::to_value(nat_localisation_correspondence(&gens, 60)?)?
                }
                _ => {
                    return Err(Error::Param(format!(
                        "nat action {action:?} needs exactly one of --nat-ideal/--trop-ideal \
                         (localise takes --t-gens)"
                    )))
                }
            };
            emit(&value, pretty);
            Ok(0)
        }
        Command::Verify { suite, corpus, seed, timing } => {
            let corpus = load_corpus(&corpus, seed.as_deref())?;
            let ids: Vec<String> = if suite == "all" {
                suite_ids().iter().map(|s| s.to_string()).collect()
            } else {
                if !suite_ids().contains(&suite.as_str()) {
                    return Err(Error::Param(format!(
                        "unknown suite {suite:?}; available: {}",
                        suite_ids().join(", ")
                    )));
                }
                vec![suite]
            };
            let mut reports: Vec<SuiteReport> = Vec::new();
            for id in &ids {
                let started = std::time::Instant::now();
                match run_suite(id, &corpus, &budget) {
                    Ok(mut report) => {
                        if timing {
                            report.runtime_ms = Some(started.elapsed().as_millis() as u64);
                        }
                        reports.push(report);
                    }
                    Err(Error::Budget { context, limit }) => {
                        // Partial report plus the interruption marker.
                        let value = json!({
                            "reports": reports,
                            "interrupted": { "suite": id, "context": context, "budget": limit },
                        });
                        emit(&value, pretty);
                        return Ok(3);
                    }
                    Err(e) => return Err(e),
                }
            }
            let findings = total_findings(&reports);
            emit(
                &json!({
                    "corpus": corpus.seed_spec,
                    "findings_total": findings,
                    "reports": reports,
                }),
                pretty,
            );
            Ok(if findings == 0 { 0 } else { 4 })
        }
    }
}

fn load_corpus(spec: &str, seed: Option<&str>) -> Result<Corpus, Error> {
    if let Some(seed) = seed {
        return corpus_from_spec(seed);
    }
    let path = std::path::Path::new(spec);
    if path.exists() && path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let tables: Vec<SemiringTable> = serde_json::from_str(&text)?;
        return corpus_from_tables(&tables, spec);
    }
    corpus_from_spec(spec)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Budget { .. } => 3,
                Error::Param(_)
                | Error::Malformed(_)
                | Error::Degenerate(_)
                | Error::NotIdempotent { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
