//! The law-suite harness: every structure theorem as a machine-checkable
//! sweep over a corpus of instances.
//!
//! A suite replays one quantified claim over every applicable instance and
//! reports violations as findings with minimal witnesses. The claims are
//! expected to hold — each one is a theorem — but the harness treats them
//! as falsifiable so that implementation bugs surface as findings instead
//! of silent passes. At most one finding is recorded per instance per
//! suite, keeping `passes + |findings| = instances_checked`.
//!
//! Reports are deterministic: instance order follows the corpus, witnesses
//! are minimal in the scan order, and notes are sorted. Wall-clock timing
//! is opt-in so that byte-identical reruns stay byte-identical.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::budget::Budget;
use crate::classify::{
    is_ik_system, is_k_cancellation, k_primary_decomposition, order_k_prime, order_k_semiprime,
    order_k_strongly_irreducible_lcm, strongly_irreducible_views, ClassProfile, Classifier,
};
use crate::congruence::{
    bourne_congruence, congruence_profile, enumerate_congruences_bruteforce, is_absolutely_k_prime,
    is_saturated, CongruenceWorld,
};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::hom::{enumerate_homs, Hom};
use crate::ideal::{
    arithmetic_principal_criterion, colon_element, colon_ideal, enumerate_ideals_exhaustive,
    enumerate_mult_sets, generate_ideal, ideal_intersection, ideal_product, ideal_sum, is_ideal,
    is_k_ideal, k_closure, k_radical_of, lattice_analysis, maximal_k_ideals_disjoint_from,
    saturated_closure, IdealLattice, MultSet,
};
use crate::localize::{contract_along, extend_along, localize, spectral_map, Localization};
use crate::nat::{
    check_k_ideals_are_principal, check_unique_factorization, nat_classify,
    nat_lcm_witness, nat_localisation_correspondence, nat_ops, nat_primary_decomposition,
    nat_radical, rad, trop_classify, trop_lcm_criterion, BoundedOracle, NatIdeal, TropIdeal,
    TropOracle,
};
use crate::quotient::bourne_quotient;
use crate::semiring::FiniteSemiring;
use crate::set::CarrierSet;

/// One violated assertion: the instance it happened on and a minimal
/// witness description.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Finding {
    pub instance: String,
    pub witness: String,
}

/// Result of one suite over one corpus.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub claim: String,
    pub instances_checked: u32,
    pub passes: u32,
    pub findings: Vec<Finding>,
    /// No applicable instance at all — distinct from a pass.
    pub vacuous: bool,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

pub struct SuiteOutcome {
    checked: u32,
    passes: u32,
    findings: Vec<Finding>,
    notes: BTreeSet<String>,
}

/// Accumulator enforcing one finding per instance.
struct Sweep {
    current: Option<(String, bool)>,
    checked: u32,
    passes: u32,
    findings: Vec<Finding>,
    notes: BTreeSet<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { current: None, checked: 0, passes: 0, findings: Vec::new(), notes: BTreeSet::new() }
    }

    fn begin(&mut self, instance: &str) {
        self.close();
        self.current = Some((instance.to_string(), false));
        self.checked += 1;
    }

    fn close(&mut self) {
        if let Some((_, failed)) = self.current.take() {
            if !failed {
                self.passes += 1;
            }
        }
    }

    fn require(&mut self, cond: bool, witness: impl FnOnce() -> String) {
        if cond {
            return;
        }
        let (name, failed) = self.current.as_mut().expect("require outside instance");
        if !*failed {
            self.findings.push(Finding { instance: name.clone(), witness: witness() });
            *failed = true;
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.insert(s.into());
    }

    fn finish(mut self) -> SuiteOutcome {
        self.close();
        SuiteOutcome {
            checked: self.checked,
            passes: self.passes,
            findings: self.findings,
            notes: self.notes,
        }
    }
}

type SuiteFn = fn(&Corpus, &Budget) -> Result<SuiteOutcome>;

pub struct SuiteDef {
    pub id: &'static str,
    pub claim: &'static str,
    pub run: SuiteFn,
}

/// The registry: one entry per verified claim. `verify all` runs it in
/// this order.
pub fn registry() -> &'static [SuiteDef] {
    &[
        SuiteDef {
            id: "core-algebra-laws",
            claim: "generated instances validate; the natural order is a partial order with least element 0; homomorphism search returns exactly the preserving maps",
            run: suite_core_algebra,
        },
        SuiteDef {
            id: "kclosure-laws",
            claim: "C_k(I) is the least k-ideal containing I, is idempotent, and distributes over intersections of pairs and triples",
            run: suite_kclosure,
        },
        SuiteDef {
            id: "exchange-principle",
            claim: "k-X = k-ideal + X for X in {prime, semiprime, irreducible, strongly irreducible}",
            run: suite_exchange,
        },
        SuiteDef {
            id: "kmax-implies-kprime",
            claim: "every k-maximal ideal is k-prime",
            run: suite_kmax_kprime,
        },
        SuiteDef {
            id: "subtractive-krull",
            claim: "k-ideals maximal among those disjoint from a multiplicative set are k-prime",
            run: suite_krull,
        },
        SuiteDef {
            id: "lattice-laws",
            claim: "strongly subtractive semirings have distributive ideal lattices; distributive implies modular; arithmeticity is decided by the principal-ideal triple identity",
            run: suite_lattice,
        },
        SuiteDef {
            id: "arithmetic-irreducible-coincidence",
            claim: "in arithmetic semirings k-irreducible and k-strongly-irreducible ideals coincide",
            run: suite_arith_coincidence,
        },
        SuiteDef {
            id: "vnr-kprime-eq-kprimary",
            claim: "in von Neumann regular semirings the k-prime and k-primary ideals coincide",
            run: suite_vnr_prime_primary,
        },
        SuiteDef {
            id: "vnr-stronglyirr-eq-kprimary",
            claim: "in von Neumann regular semirings k-strongly-irreducible and k-primary ideals coincide",
            run: suite_vnr_sirr_primary,
        },
        SuiteDef {
            id: "weakly-noetherian-irreducible-primary",
            claim: "every finite semiring is weakly Noetherian, so every k-irreducible ideal is k-primary",
            run: suite_weakly_noetherian,
        },
        SuiteDef {
            id: "laskerian-stronglyirr-primary",
            claim: "in Laskerian semirings every k-strongly-irreducible ideal is k-primary",
            run: suite_laskerian,
        },
        SuiteDef {
            id: "stronglyirr-radical-prime",
            claim: "a k-strongly-irreducible ideal is k-prime iff it equals its k-radical",
            run: suite_sirr_radical,
        },
        SuiteDef {
            id: "radical-laws",
            claim: "R_k(I) is a k-ideal containing I and R_k(IJ) = R_k(I∩J) = R_k(I)∩R_k(J)",
            run: suite_radical_laws,
        },
        SuiteDef {
            id: "unit-closure-kmaximal",
            claim: "1 lies in C_k(<x>) iff x avoids every k-maximal ideal",
            run: suite_unit_closure,
        },
        SuiteDef {
            id: "k-simple-criterion",
            claim: "if 1 + xa = ya is solvable for every nonzero a, the only k-ideals are C_k({0}) and S",
            run: suite_k_simple,
        },
        SuiteDef {
            id: "ik-system-equivalence",
            claim: "k-strong irreducibility, the principal-closure condition, and the complement being an i_k-system are equivalent",
            run: suite_ik_system,
        },
        SuiteDef {
            id: "ideal-ops-laws",
            claim: "sum is the join, products sit under intersections, colons of k-ideals are k-ideals, and products of k-ideals stay k in the idempotent case",
            run: suite_ideal_ops,
        },
        SuiteDef {
            id: "quotient-bourne-laws",
            claim: "Bourne classes are well-defined, the zero class of S/I is C_k(I), lifts of (k-)ideals are (k-)ideals, and intersections correspond",
            run: suite_quotient_bourne,
        },
        SuiteDef {
            id: "quotient-irreducibility",
            claim: "k-strong irreducibility descends to quotients (with converse in arithmetic semirings) and k-irreducibility is detected by the zero ideal of S/I",
            run: suite_quotient_irr,
        },
        SuiteDef {
            id: "localisation-bijection",
            claim: "proper k-strongly-irreducible ideals of T^{-1}S biject with those of S in the contracted set C avoiding T",
            run: suite_loc_bijection,
        },
        SuiteDef {
            id: "localisation-ideal-laws",
            claim: "contractions and fraction ideals of k-ideals are k-ideals; I^{ec} = ∪_{s∈T}(I:s); I^e is the unit ideal iff I meets T",
            run: suite_loc_ideal_laws,
        },
        SuiteDef {
            id: "localisation-primary",
            claim: "k-primary ideals localise to k-primary ideals, contract back when the radical avoids T, and k-strong irreducibility transfers both ways",
            run: suite_loc_primary,
        },
        SuiteDef {
            id: "localisation-equivalences",
            claim: "all k-primary ideals are k-strongly irreducible iff the same holds in every localisation at a k-prime (equivalently k-maximal) ideal",
            run: suite_loc_equivalences,
        },
        SuiteDef {
            id: "spectral-map",
            claim: "contraction maps k-spectra to k-spectra; fixed points of ec are the contractions; surjectivity and injectivity follow from contractedness and extendedness",
            run: suite_spectral,
        },
        SuiteDef {
            id: "idempotent-order-kideal",
            claim: "on additively idempotent semirings the k-ideals are the downward closed ideals",
            run: suite_order_kideal,
        },
        SuiteDef {
            id: "order-kprime-agrees",
            claim: "the natural-order characterization of k-prime matches the classifier flag",
            run: suite_order_kprime,
        },
        SuiteDef {
            id: "order-ksemiprime-agrees",
            claim: "the natural-order characterization of k-semiprime matches the classifier flag",
            run: suite_order_ksemiprime,
        },
        SuiteDef {
            id: "order-lcm-strongly-irreducible",
            claim: "on min-plus instances the lcm criterion matches the k-strongly-irreducible flag",
            run: suite_order_lcm,
        },
        SuiteDef {
            id: "saturated-iff-kideal",
            claim: "on additively idempotent semirings an ideal is saturated iff it is a k-ideal, and saturation coincides with k-closure",
            run: suite_saturated,
        },
        SuiteDef {
            id: "absolutely-kprime-sandwich",
            claim: "k-maximal implies absolutely k-prime implies k-prime",
            run: suite_absolutely_kprime,
        },
        SuiteDef {
            id: "k-cancellation-characterization",
            claim: "IJ = IK cancellation, (IJ : I) = J, and IJ ⊆ IK -> J ⊆ K agree for nonzero k-ideals of idempotent semirings",
            run: suite_cancellation,
        },
        SuiteDef {
            id: "congruence-kmax-prime",
            claim: "every k-maximal congruence is a k-prime congruence",
            run: suite_cong_kmax_prime,
        },
        SuiteDef {
            id: "congruence-kmax-correspondence",
            claim: "K_I is a k-maximal congruence iff I is a k-maximal ideal",
            run: suite_cong_kmax_corr,
        },
        SuiteDef {
            id: "congruence-prime-irreducible",
            claim: "every k-prime congruence is k-irreducible",
            run: suite_cong_prime_irr,
        },
        SuiteDef {
            id: "congruence-ideal-irreducible",
            claim: "K_I is a k-irreducible congruence whenever I is a k-irreducible ideal (converse recorded as an observation only)",
            run: suite_cong_ideal_irr,
        },
        SuiteDef {
            id: "congruence-excellent-irreducible",
            claim: "rho_J is excellent-irreducible whenever the saturation of J is k-irreducible",
            run: suite_cong_excellent,
        },
        SuiteDef {
            id: "k-congruence-correspondence",
            claim: "I -> K_I is injective on k-ideals, the zero class recovers C_k(I), and K_I = K_{C_k(I)}",
            run: suite_k_cong_corr,
        },
        SuiteDef {
            id: "ideal-enum-crosscheck",
            claim: "closure enumeration of ideals and congruences agrees with the exhaustive subset and partition scans on small carriers",
            run: suite_enum_crosscheck,
        },
        SuiteDef {
            id: "nat-regression-vectors",
            claim: "4N is k-strongly irreducible but not k-prime; 6N is k-semiprime but neither; p^2 N is k-primary but not k-prime",
            run: suite_nat_regression,
        },
        SuiteDef {
            id: "nat-oracle-crosscheck",
            claim: "closed-form classification and ideal arithmetic in N agree with the bounded brute-force oracle",
            run: suite_nat_oracle,
        },
        SuiteDef {
            id: "nat-ufsd-pid-laws",
            claim: "lcm criterion, prime-power decompositions, prime elements in k-primes, and k-maximality of nonzero k-primes in N",
            run: suite_nat_ufsd,
        },
        SuiteDef {
            id: "nat-localisation-correspondence",
            claim: "k-strongly-irreducible ideals of N avoiding a prime-generated T are the surviving prime powers, fixed by ec-contraction",
            run: suite_nat_loc,
        },
        SuiteDef {
            id: "trop-model-laws",
            claim: "up-set ideals of the min-plus semiring are strong, form a chain, and their classification matches the bounded oracle and the lcm criterion",
            run: suite_trop,
        },
    ]
}

pub fn suite_ids() -> Vec<&'static str> {
    registry().iter().map(|s| s.id).collect()
}

/// Runs one suite by id.
pub fn run_suite(id: &str, corpus: &Corpus, budget: &Budget) -> Result<SuiteReport> {
    let def = registry()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::Param(format!("unknown suite id {id:?}")))?;
    let outcome = (def.run)(corpus, budget)?;
    Ok(SuiteReport {
        suite: def.id.to_string(),
        claim: def.claim.to_string(),
        instances_checked: outcome.checked,
        passes: outcome.passes,
        vacuous: outcome.checked == 0,
        findings: outcome.findings,
        notes: outcome.notes.into_iter().collect(),
        runtime_ms: None,
    })
}

/// Runs every registered suite in registry order.
pub fn run_all(corpus: &Corpus, budget: &Budget) -> Result<Vec<SuiteReport>> {
    registry().iter().map(|def| run_suite(def.id, corpus, budget)).collect()
}

pub fn total_findings(reports: &[SuiteReport]) -> usize {
    reports.iter().map(|r| r.findings.len()).sum()
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

fn profiles_of_k_ideals<'a>(
    cls: &Classifier<'a>,
) -> Vec<(CarrierSet, ClassProfile)> {
    cls.lat.k_ideals.iter().map(|i| (*i, cls.profile(i))).collect()
}

/// Multiplicative sets of an instance, skipping any that contain zero.
fn mult_sets(ring: &FiniteSemiring) -> Vec<CarrierSet> {
    enumerate_mult_sets(ring)
}

// ---------------------------------------------------------------------------
// Core algebra
// ---------------------------------------------------------------------------

fn suite_core_algebra(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let t = ring.to_table();
        let report = crate::semiring::validate_semiring(&t.add, &t.mul, t.zero, t.one)?;
        sweep.require(report.valid, || format!("axiom violations: {:?}", report.violations));
        if ring.is_additively_idempotent() {
            let ord = crate::semiring::natural_order(ring)?;
            for x in ring.elements() {
                sweep.require(ord.leq(ring.zero(), x), || {
                    format!("zero is not below {x} in the natural order")
                });
            }
        }
        if ring.size() <= 5 {
            let homs = enumerate_homs(ring, ring, budget)?;
            sweep.require(
                homs.iter().any(|h| h.map == Hom::identity(ring).map),
                || "identity endomorphism missing".into(),
            );
            for h in &homs {
                sweep.require(h.is_valid(), || format!("invalid hom {:?}", h.map));
            }
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// k-closure laws
// ---------------------------------------------------------------------------

fn suite_kclosure(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let closures: Vec<CarrierSet> = lat.ideals.iter().map(|i| k_closure(ring, i)).collect();
        for (i, c) in lat.ideals.iter().zip(&closures) {
            sweep.require(is_k_ideal(ring, c), || format!("C_k({i}) = {c} is not a k-ideal"));
            sweep.require(i.is_subset(c), || format!("C_k({i}) does not contain {i}"));
            sweep.require(k_closure(ring, c) == *c, || format!("C_k not idempotent at {i}"));
            for k in &lat.k_ideals {
                sweep.require(!i.is_subset(k) || c.is_subset(k), || {
                    format!("C_k({i}) is not least: k-ideal {k} contains {i} but not {c}")
                });
            }
        }
        for (a, ca) in lat.ideals.iter().zip(&closures) {
            for (b, cb) in lat.ideals.iter().zip(&closures) {
                let meet = ideal_intersection(a, b);
                sweep.require(
                    k_closure(ring, &meet) == ca.intersection(cb),
                    || format!("C_k({a} ∩ {b}) differs from C_k({a}) ∩ C_k({b})"),
                );
                for (c, cc) in lat.ideals.iter().zip(&closures) {
                    budget.charge(1, "kclosure triple sweep")?;
                    let triple = meet.intersection(c);
                    sweep.require(
                        k_closure(ring, &triple) == ca.intersection(cb).intersection(cc),
                        || format!("triple intersection law fails at {a}, {b}, {c}"),
                    );
                }
            }
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// Classification laws
// ---------------------------------------------------------------------------

fn suite_exchange(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            for (name, quantified, plain) in [
                ("prime", p.k_prime.holds, p.prime.holds),
                ("semiprime", p.k_semiprime.holds, p.semiprime.holds),
                ("irreducible", p.k_irreducible.holds, p.irreducible.holds),
                ("strongly irreducible", p.k_strongly_irreducible.holds, p.strongly_irreducible.holds),
            ] {
                sweep.require(quantified == plain, || {
                    format!("{name} exchange fails at {i}: k-variant {quantified}, plain {plain}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_kmax_kprime(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(!p.k_maximal.holds || p.k_prime.holds, || {
                format!("k-maximal {i} is not k-prime")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_krull(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for t in mult_sets(ring) {
            let ms = MultSet::new(ring, t)?;
            for m in maximal_k_ideals_disjoint_from(&lat, &ms)? {
                sweep.require(cls.profile(&m).k_prime.holds, || {
                    format!("maximal disjoint from T={t} but not k-prime: {m}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_lattice(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let profile = lattice_analysis(&lat, budget)?;
        sweep.require(!profile.strongly_subtractive || profile.distributive, || {
            "strongly subtractive but ideal lattice not distributive".into()
        });
        sweep.require(!profile.distributive || profile.modular, || {
            "distributive but not modular".into()
        });
        sweep.require(profile.arithmetic == profile.distributive, || {
            "arithmetic flag diverges from distributivity".into()
        });
        sweep.require(
            profile.distributive == arithmetic_principal_criterion(ring),
            || "principal-ideal triple criterion diverges from distributivity".into(),
        );
    }
    Ok(sweep.finish())
}

fn suite_arith_coincidence(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        let lat = IdealLattice::compute(ring, budget)?;
        if !lattice_analysis(&lat, budget)?.arithmetic {
            continue;
        }
        sweep.begin(ring.name());
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(p.k_irreducible.holds == p.k_strongly_irreducible.holds, || {
                format!("coincidence fails at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_vnr_prime_primary(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_von_neumann_regular() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(p.k_prime.holds == p.k_primary.holds, || {
                format!("k-prime/k-primary diverge at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_vnr_sirr_primary(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_von_neumann_regular() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(p.k_strongly_irreducible.holds == p.k_primary.holds, || {
                format!("k-strongly-irreducible/k-primary diverge at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_weakly_noetherian(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("every finite semiring satisfies the ascending chain condition on k-ideals");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(!p.k_irreducible.holds || p.k_primary.holds, || {
                format!("k-irreducible {i} is not k-primary")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_laskerian(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("the unit ideal decomposes as the empty intersection");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        if !crate::classify::is_laskerian(&cls, budget)? {
            continue;
        }
        sweep.begin(ring.name());
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(!p.k_strongly_irreducible.holds || p.k_primary.holds, || {
                format!("k-strongly-irreducible {i} is not k-primary in a Laskerian semiring")
            });
            if let Some(dec) = k_primary_decomposition(&cls, &i, budget)? {
                let meet = dec.iter().fold(ring.carrier(), |acc, d| acc.intersection(d));
                sweep.require(meet == i, || format!("decomposition of {i} does not intersect back"));
            } else {
                sweep.require(false, || format!("Laskerian instance failed to decompose {i}"));
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_sirr_radical(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("empty intersection of k-primes is the whole semiring");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            if p.k_strongly_irreducible.holds {
                let fixed = k_radical_of(&lat, &i) == i;
                sweep.require(p.k_prime.holds == fixed, || {
                    format!("radical fixedness diverges from k-primeness at {i}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_radical_laws(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("empty intersection of k-primes is the whole semiring");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        for i in &lat.k_ideals {
            let r = k_radical_of(&lat, i);
            sweep.require(is_k_ideal(ring, &r), || format!("R_k({i}) is not a k-ideal"));
            sweep.require(i.is_subset(&r), || format!("R_k({i}) does not contain {i}"));
        }
        for i in &lat.k_ideals {
            for j in &lat.k_ideals {
                budget.charge(1, "radical law sweep")?;
                let prod = ideal_product(ring, i, j);
                let meet = ideal_intersection(i, j);
                let (rp, rm) = (k_radical_of(&lat, &prod), k_radical_of(&lat, &meet));
                let pointwise = k_radical_of(&lat, i).intersection(&k_radical_of(&lat, j));
                sweep.require(rp == rm && rm == pointwise, || {
                    format!("radical law fails at I={i}, J={j}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_unit_closure(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let kmaximals: Vec<CarrierSet> = profiles_of_k_ideals(&cls)
            .into_iter()
            .filter(|(_, p)| p.k_maximal.holds)
            .map(|(i, _)| i)
            .collect();
        for x in ring.elements() {
            let closure = k_closure(ring, &generate_ideal(ring, &CarrierSet::singleton(x)));
            let unit_in = closure.contains(ring.one());
            let avoided = kmaximals.iter().all(|m| !m.contains(x));
            sweep.require(unit_in == avoided, || {
                format!("1 ∈ C_k(<{x}>) is {unit_in} but x avoids k-maximals is {avoided}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_k_simple(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        let condition = ring.elements().filter(|&a| a != ring.zero()).all(|a| {
            ring.elements().any(|x| {
                ring.elements()
                    .any(|y| ring.add(ring.one(), ring.mul(x, a)) == ring.mul(y, a))
            })
        });
        if !condition {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let zero_closure = k_closure(ring, &generate_ideal(ring, &CarrierSet::EMPTY));
        for k in &lat.k_ideals {
            sweep.require(*k == zero_closure || *k == ring.carrier(), || {
                format!("nontrivial k-ideal {k} despite the solvability condition")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_ik_system(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for i in &lat.k_ideals {
            if !lat.is_proper(i) {
                continue;
            }
            let views = strongly_irreducible_views(&cls, i);
            sweep.require(views.agree(), || format!("the three views diverge at {i}: {views:?}"));
            // is_ik_system on the complement is definitionally view three.
            let complement = ring.carrier().difference(i);
            sweep.require(
                is_ik_system(ring, &complement) == views.complement_ik_system,
                || format!("i_k-system check inconsistent at {i}"),
            );
        }
    }
    Ok(sweep.finish())
}

fn suite_ideal_ops(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let idempotent = ring.is_additively_idempotent();
        for i in &lat.ideals {
            for j in &lat.ideals {
                budget.charge(1, "ideal op sweep")?;
                let sum = ideal_sum(ring, i, j);
                sweep.require(i.is_subset(&sum) && j.is_subset(&sum), || {
                    format!("sum does not dominate at {i}, {j}")
                });
                for k in &lat.ideals {
                    if i.is_subset(k) && j.is_subset(k) {
                        sweep.require(sum.is_subset(k), || {
                            format!("sum of {i}, {j} is not the join")
                        });
                    }
                }
                let prod = ideal_product(ring, i, j);
                sweep.require(prod.is_subset(&ideal_intersection(i, j)), || {
                    format!("product escapes the intersection at {i}, {j}")
                });
                let colon = colon_ideal(ring, i, j);
                sweep.require(i.is_subset(&colon), || format!("colon misses I at {i}, {j}"));
                sweep.require(
                    ideal_product(ring, &colon, j).is_subset(i),
                    || format!("(I:J)J escapes I at {i}, {j}"),
                );
            }
        }
        for i in &lat.k_ideals {
            for j in &lat.ideals {
                sweep.require(is_k_ideal(ring, &colon_ideal(ring, i, j)), || {
                    format!("colon of k-ideal {i} by {j} is not k")
                });
            }
            for j in &lat.k_ideals {
                sweep.require(is_k_ideal(ring, &ideal_intersection(i, j)), || {
                    format!("intersection of k-ideals {i}, {j} is not k")
                });
                if idempotent {
                    sweep.require(is_k_ideal(ring, &ideal_product(ring, i, j)), || {
                        format!("product of k-ideals {i}, {j} is not k (idempotent case)")
                    });
                }
            }
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

fn suite_quotient_bourne(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        for i in &lat.ideals {
            budget.charge(ring.size() as u64 * ring.size() as u64, "quotient sweep")?;
            let q = bourne_quotient(ring, i);
            // Elements of I land in the zero class.
            for a in i.iter() {
                sweep.require(q.class_of(a) == q.class_of(ring.zero()), || {
                    format!("a={a} in I={i} escapes the zero class")
                });
            }
            // For k-ideals the zero class is exactly I.
            if is_k_ideal(ring, i) {
                let zero_class = q.projection().preimage_of(&CarrierSet::singleton(q.ring.zero()));
                sweep.require(zero_class == *i, || {
                    format!("zero class of S/{i} is {zero_class}, not the ideal itself")
                });
            }
            let proper_lifts: Vec<(CarrierSet, CarrierSet)> = lat
                .ideals
                .iter()
                .filter(|j| i.is_subset(j))
                .map(|j| (*j, q.lift_ideal(j)))
                .collect();
            for (j, lift) in &proper_lifts {
                sweep.require(is_ideal(&q.ring, lift), || {
                    format!("lift of {j} along {i} is not an ideal")
                });
                if is_k_ideal(ring, j) {
                    sweep.require(is_k_ideal(&q.ring, lift), || {
                        format!("lift of k-ideal {j} along {i} is not k")
                    });
                }
                if lift.contains(q.class_of(ring.one())) {
                    sweep.require(*lift == q.ring.carrier(), || {
                        format!("lift of {j} contains the unit class but is proper")
                    });
                }
            }
            // Intersection correspondence for k-ideals containing I.
            let k_over: Vec<&CarrierSet> =
                lat.k_ideals.iter().filter(|j| i.is_subset(j)).collect();
            for j in &k_over {
                for k in &k_over {
                    for l in &k_over {
                        budget.charge(1, "quotient intersection sweep")?;
                        let lhs = q.lift_ideal(j).intersection(&q.lift_ideal(k))
                            == q.lift_ideal(l);
                        let rhs = ideal_intersection(j, k) == **l;
                        sweep.require(lhs == rhs, || {
                            format!("J/I ∩ K/I = L/I mismatch at I={i}, J={j}, K={k}, L={l}")
                        });
                    }
                }
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_quotient_irr(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let arithmetic = lattice_analysis(&lat, budget)?.arithmetic;
        let kprofiles = profiles_of_k_ideals(&cls);
        for i in &lat.ideals {
            budget.charge(ring.size() as u64 * ring.size() as u64, "quotient irr sweep")?;
            let q = bourne_quotient(ring, i);
            let qlat = IdealLattice::compute(&q.ring, budget)?;
            let qcls = Classifier::new(&qlat);
            for (j, p) in &kprofiles {
                if !i.is_subset(j) {
                    continue;
                }
                let lift = q.lift_ideal(j);
                let lifted_sirr = qcls.profile(&lift).k_strongly_irreducible.holds;
                if p.k_strongly_irreducible.holds {
                    sweep.require(lifted_sirr, || {
                        format!("k-strong irreducibility of {j} does not descend along {i}")
                    });
                }
                if arithmetic && lifted_sirr {
                    sweep.require(p.k_strongly_irreducible.holds, || {
                        format!("arithmetic converse fails: {j}/{i} is k-strongly irreducible")
                    });
                }
            }
        }
        for (i, p) in &kprofiles {
            let q = bourne_quotient(ring, i);
            let qlat = IdealLattice::compute(&q.ring, budget)?;
            let qcls = Classifier::new(&qlat);
            let zero_irr = qcls.profile(&q.zero_ideal()).k_irreducible.holds;
            sweep.require(p.k_irreducible.holds == zero_irr, || {
                format!("k-irreducibility of {i} diverges from the zero ideal of S/{i}")
            });
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// Localisation
// ---------------------------------------------------------------------------

struct LocSetup<'a> {
    loc: Localization<'a>,
}

fn localisations<'a>(
    ring: &'a FiniteSemiring,
) -> Result<Vec<(CarrierSet, LocSetup<'a>)>> {
    let mut out = Vec::new();
    for t in mult_sets(ring) {
        let ms = MultSet::new(ring, t)?;
        let loc = localize(ring, &ms)?;
        out.push((t, LocSetup { loc }));
    }
    Ok(out)
}

fn suite_loc_bijection(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if ring.size() > 9 {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let kprofiles = profiles_of_k_ideals(&cls);
        for (t, setup) in localisations(ring)? {
            budget.charge(ring.size() as u64 * ring.size() as u64, "localisation sweep")?;
            let loc = &setup.loc;
            let llat = IdealLattice::compute(&loc.ring, budget)?;
            let lcls = Classifier::new(&llat);
            let contracted = loc.contracted_set(&llat);

            // (T^{-1} I)^c = I for every member of C.
            for c in &contracted {
                sweep.require(loc.contract(&loc.fraction_ideal(c)) == *c, || {
                    format!("(T^-1 I)^c != I at T={t}, I={c}")
                });
            }

            let side_a: Vec<CarrierSet> = llat
                .k_ideals
                .iter()
                .filter(|j| lcls.profile(j).k_strongly_irreducible.holds)
                .copied()
                .collect();
            let side_b: Vec<CarrierSet> = kprofiles
                .iter()
                .filter(|(i, p)| {
                    p.k_strongly_irreducible.holds
                        && i.is_disjoint(&t)
                        && contracted.binary_search(i).is_ok()
                })
                .map(|(i, _)| *i)
                .collect();
            sweep.require(side_a.len() == side_b.len(), || {
                format!("bijection cardinality {} vs {} at T={t}", side_a.len(), side_b.len())
            });
            for j in &side_a {
                let c = loc.contract(j);
                sweep.require(side_b.contains(&c), || {
                    format!("contraction {c} of {j} not on the S side at T={t}")
                });
                sweep.require(loc.fraction_ideal(&c) == *j, || {
                    format!("round trip J -> J^c -> T^-1 J^c moved {j} at T={t}")
                });
            }
            for i in &side_b {
                let e = loc.fraction_ideal(i);
                sweep.require(side_a.contains(&e), || {
                    format!("extension {e} of {i} not k-strongly irreducible at T={t}")
                });
                sweep.require(loc.contract(&e) == *i, || {
                    format!("round trip I -> T^-1 I -> contraction moved {i} at T={t}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_loc_ideal_laws(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("the union in the ec-identity ranges over s in T");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if ring.size() > 9 {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        for (t, setup) in localisations(ring)? {
            budget.charge(ring.size() as u64 * ring.size() as u64, "localisation laws")?;
            let loc = &setup.loc;
            let llat = IdealLattice::compute(&loc.ring, budget)?;
            let hom = loc.canonical_hom();
            for j in &llat.k_ideals {
                sweep.require(is_k_ideal(ring, &loc.contract(j)), || {
                    format!("contraction of {j} is not a k-ideal at T={t}")
                });
            }
            for i in &lat.k_ideals {
                let frac = loc.fraction_ideal(i);
                sweep.require(is_k_ideal(&loc.ring, &frac), || {
                    format!("T^-1 of k-ideal {i} is not k at T={t}")
                });
                let extended = extend_along(&hom, i);
                sweep.require(extended == frac, || {
                    format!("k-extension differs from the fraction ideal at {i}, T={t}")
                });
                // ec = union of colons over denominators.
                let ec = loc.contract(&extended);
                let mut union = CarrierSet::EMPTY;
                for s in t.iter() {
                    union = union.union(&colon_element(ring, i, s));
                }
                sweep.require(ec == union, || {
                    format!("I^ec differs from ∪(I:s) at {i}, T={t}")
                });
                let unit = extended == loc.ring.carrier();
                sweep.require(unit == !i.is_disjoint(&t), || {
                    format!("I^e unit-ness diverges from I meeting T at {i}, T={t}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_loc_primary(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("parts with radicals quantify over k-primary ideals whose k-radical avoids T");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if ring.size() > 9 {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let kprofiles = profiles_of_k_ideals(&cls);
        for (t, setup) in localisations(ring)? {
            budget.charge(ring.size() as u64 * ring.size() as u64, "localisation primary")?;
            let loc = &setup.loc;
            let llat = IdealLattice::compute(&loc.ring, budget)?;
            let lcls = Classifier::new(&llat);
            for (i, p) in &kprofiles {
                if !p.k_primary.holds {
                    continue;
                }
                let radical = k_radical_of(&lat, i);
                if !radical.is_disjoint(&t) {
                    continue;
                }
                let ext = loc.fraction_ideal(i);
                let ext_profile = lcls.profile(&ext);
                sweep.require(ext_profile.k_primary.holds, || {
                    format!("T^-1 I not k-primary at I={i}, T={t}")
                });
                sweep.require(loc.contract(&ext) == *i, || {
                    format!("T^-1 I ∩ S != I at I={i}, T={t}")
                });
                let lhs = colon_ideal(&loc.ring, &ext, &loc.fraction_ideal(&radical));
                let rhs = loc.fraction_ideal(&colon_ideal(ring, i, &radical));
                sweep.require(lhs == rhs, || {
                    format!("colon transfer fails at I={i}, T={t}")
                });
                for (j, _) in &kprofiles {
                    if loc.fraction_ideal(j).is_subset(&ext) {
                        sweep.require(j.is_subset(i), || {
                            format!("JS_T ⊆ IS_T but J ⊄ I at I={i}, J={j}, T={t}")
                        });
                    }
                }
                // Both closing transfer statements.
                let ext_sirr = ext_profile.k_strongly_irreducible.holds;
                if p.k_strongly_irreducible.holds {
                    sweep.require(ext_sirr, || {
                        format!("k-strongly irreducible primary {i} fails to localise at T={t}")
                    });
                }
                if ext_sirr {
                    sweep.require(p.k_strongly_irreducible.holds, || {
                        format!("T^-1 I k-strongly irreducible but I is not, I={i}, T={t}")
                    });
                }
            }
            // Contractions of k-strongly-irreducible fraction ideals.
            for (i, _) in &kprofiles {
                let ext = loc.fraction_ideal(i);
                if lcls.profile(&ext).k_strongly_irreducible.holds {
                    let c = loc.contract(&ext);
                    sweep.require(cls.profile(&c).k_strongly_irreducible.holds, || {
                        format!("IS_T ∩ S not k-strongly irreducible at I={i}, T={t}")
                    });
                }
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_loc_equivalences(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if ring.size() > 9 {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let kprofiles = profiles_of_k_ideals(&cls);
        let global = kprofiles
            .iter()
            .all(|(_, p)| !p.k_primary.holds || p.k_strongly_irreducible.holds);

        let mut at_primes = true;
        let mut at_maximals = true;
        for (p_ideal, p) in &kprofiles {
            if !p.k_prime.holds {
                continue;
            }
            let complement = ring.carrier().difference(p_ideal);
            let ms = MultSet::new(ring, complement)?;
            let loc = localize(ring, &ms)?;
            let llat = IdealLattice::compute(&loc.ring, budget)?;
            let lcls = Classifier::new(&llat);
            let local_ok = llat.k_ideals.iter().all(|i| {
                let prof = lcls.profile(i);
                !prof.k_primary.holds || prof.k_strongly_irreducible.holds
            });
            if !local_ok {
                at_primes = false;
                if p.k_maximal.holds {
                    at_maximals = false;
                }
            }
        }
        sweep.require(global == at_primes && at_primes == at_maximals, || {
            format!(
                "equivalence breaks: global {global}, at primes {at_primes}, at maximals {at_maximals}"
            )
        });
    }
    Ok(sweep.finish())
}

fn suite_spectral(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();

    fn check_hom(
        sweep: &mut Sweep,
        hom: &Hom,
        src_lat: &IdealLattice,
        tgt_lat: &IdealLattice,
        label: &str,
    ) {
        let sm = spectral_map(hom, src_lat, tgt_lat);
        let image: Vec<CarrierSet> = sm.table.iter().map(|(_, c)| *c).collect();
        // (1) P is a contraction of a k-prime iff P^{ec} = P.
        for p in &sm.source_spectrum {
            let fixed = contract_along(hom, &extend_along(hom, p)) == *p;
            sweep.require(image.contains(p) == fixed, || {
                format!("{label}: ec-fixedness diverges from contractedness at {p}")
            });
        }
        // (2) every k-prime of the source is a k-contracted ideal iff the
        // spectral map is surjective.
        let all_contracted = sm.source_spectrum.iter().all(|p| {
            tgt_lat.k_ideals.iter().any(|j| contract_along(hom, j) == *p)
        });
        sweep.require(all_contracted == sm.surjective, || {
            format!("{label}: contractedness of the source spectrum diverges from surjectivity")
        });
        // (3) every k-prime of the target being extended forces injectivity.
        let all_extended = sm
            .target_spectrum
            .iter()
            .all(|q| src_lat.k_ideals.iter().any(|i| extend_along(hom, i) == *q));
        sweep.require(!all_extended || sm.injective, || {
            format!("{label}: extended spectrum without injectivity")
        });
    }

    fn restricted_hom_property(hom: &Hom) -> bool {
        if !hom.is_surjective() {
            return false;
        }
        let src = hom.source;
        src.elements().all(|a| {
            src.elements().all(|b| {
                hom.apply(a) != hom.apply(b)
                    || hom.apply(a) == hom.target.zero()
                    || generate_ideal(src, &CarrierSet::singleton(a))
                        == generate_ideal(src, &CarrierSet::singleton(b))
            })
        })
    }

    fn check_restricted(
        sweep: &mut Sweep,
        hom: &Hom,
        src_cls: &Classifier,
        tgt_cls: &Classifier,
        label: &str,
    ) {
        if !restricted_hom_property(hom) {
            return;
        }
        for j in &tgt_cls.lat.k_ideals {
            if tgt_cls.profile(j).k_strongly_irreducible.holds {
                let c = contract_along(hom, j);
                sweep.require(src_cls.profile(&c).k_strongly_irreducible.holds, || {
                    format!("{label}: restricted-hom contraction of {j} loses strong irreducibility")
                });
            }
        }
    }

    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let id = Hom::identity(ring);
        check_hom(&mut sweep, &id, &lat, &lat, "identity");

        // Canonical localisation homs.
        if ring.size() <= 9 {
            for (t, setup) in localisations(ring)? {
                budget.charge(ring.size() as u64 * ring.size() as u64, "spectral sweep")?;
                let loc = &setup.loc;
                let llat = IdealLattice::compute(&loc.ring, budget)?;
                let lcls = Classifier::new(&llat);
                let hom = loc.canonical_hom();
                check_hom(&mut sweep, &hom, &lat, &llat, &format!("localisation T={t}"));
                check_restricted(&mut sweep, &hom, &cls, &lcls, &format!("localisation T={t}"));
            }
        }

        // Quotient projections.
        for i in &lat.ideals {
            let q = bourne_quotient(ring, i);
            let qlat = IdealLattice::compute(&q.ring, budget)?;
            let qcls = Classifier::new(&qlat);
            let hom = q.projection();
            check_hom(&mut sweep, &hom, &lat, &qlat, &format!("projection mod {i}"));
            check_restricted(&mut sweep, &hom, &cls, &qcls, &format!("projection mod {i}"));
        }
    }

    // Cross-instance homomorphisms between small carriers.
    for a in &corpus.instances {
        for b in &corpus.instances {
            if a.ring.size() > 5 || b.ring.size() > 5 {
                continue;
            }
            sweep.begin(&format!("{}->{}", a.ring.name(), b.ring.name()));
            let src_lat = IdealLattice::compute(&a.ring, budget)?;
            let tgt_lat = IdealLattice::compute(&b.ring, budget)?;
            let src_cls = Classifier::new(&src_lat);
            let tgt_cls = Classifier::new(&tgt_lat);
            for hom in enumerate_homs(&a.ring, &b.ring, budget)? {
                check_hom(&mut sweep, &hom, &src_lat, &tgt_lat, "enumerated");
                check_restricted(&mut sweep, &hom, &src_cls, &tgt_cls, "enumerated");
            }
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// Additively idempotent suites
// ---------------------------------------------------------------------------

fn suite_order_kideal(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let ord = crate::semiring::natural_order(ring)?;
        let lat = IdealLattice::compute(ring, budget)?;
        for i in &lat.ideals {
            sweep.require(
                is_k_ideal(ring, i) == crate::ideal::is_downward_closed(ring, &ord, i),
                || format!("k-ness diverges from downward closure at {i}"),
            );
        }
    }
    Ok(sweep.finish())
}

fn suite_order_kprime(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("quantified over proper k-ideals: the order condition is vacuous at I = S");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let ord = crate::semiring::natural_order(ring)?;
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            if !lat.is_proper(&i) {
                continue;
            }
            sweep.require(order_k_prime(ring, &ord, &i) == p.k_prime.holds, || {
                format!("order criterion diverges from k-prime at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_order_ksemiprime(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let ord = crate::semiring::natural_order(ring)?;
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            sweep.require(order_k_semiprime(ring, &ord, &i) == p.k_semiprime.holds, || {
                format!("order criterion diverges from k-semiprime at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_order_lcm(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("divisibility lcm on min-plus instances is the numeric maximum");
    for inst in &corpus.instances {
        let Some(lcm) = inst.lcm_oracle() else { continue };
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let ord = crate::semiring::natural_order(ring)?;
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            if !lat.is_proper(&i) {
                continue;
            }
            sweep.require(
                order_k_strongly_irreducible_lcm(ring, &ord, &lcm, &i)
                    == p.k_strongly_irreducible.holds,
                || format!("lcm criterion diverges from k-strong irreducibility at {i}"),
            );
        }
    }
    Ok(sweep.finish())
}

fn suite_saturated(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        for i in &lat.ideals {
            sweep.require(is_saturated(ring, i)? == is_k_ideal(ring, i), || {
                format!("saturation diverges from k-ness at {i}")
            });
            sweep.require(saturated_closure(ring, i)? == k_closure(ring, i), || {
                format!("saturation closure diverges from k-closure at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_absolutely_kprime(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        for (i, p) in profiles_of_k_ideals(&cls) {
            if !lat.is_proper(&i) {
                continue;
            }
            let absolute = is_absolutely_k_prime(ring, &i)?;
            sweep.require(!p.k_maximal.holds || absolute, || {
                format!("k-maximal {i} is not absolutely k-prime")
            });
            sweep.require(!absolute || p.k_prime.holds, || {
                format!("absolutely k-prime {i} is not k-prime")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_cancellation(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let zero_ideal = generate_ideal(ring, &CarrierSet::EMPTY);
        for i in &lat.k_ideals {
            if *i == zero_ideal {
                continue;
            }
            // The three characterizations; computed independently here and
            // once more inside is_k_cancellation.
            let cancellation = cls.profile(i).k_cancellation.holds;
            let colon_route = lat
                .k_ideals
                .iter()
                .all(|j| colon_ideal(ring, &ideal_product(ring, i, j), i) == *j);
            let inclusion_route = lat.k_ideals.iter().all(|j| {
                lat.k_ideals.iter().all(|k| {
                    !ideal_product(ring, i, j).is_subset(&ideal_product(ring, i, k))
                        || j.is_subset(k)
                })
            });
            sweep.require(cancellation == colon_route && colon_route == inclusion_route, || {
                format!(
                    "characterizations diverge at {i}: cancel {cancellation}, colon {colon_route}, inclusion {inclusion_route}"
                )
            });
            sweep.require(is_k_cancellation(&cls, i)? == cancellation, || {
                format!("is_k_cancellation disagrees with the flag at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// Congruence suites
// ---------------------------------------------------------------------------

fn suite_cong_kmax_prime(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("prime congruences are required proper");
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let world = CongruenceWorld::compute(&lat, budget)?;
        for theta in &world.all {
            let p = congruence_profile(theta, &world);
            sweep.require(!p.is_k_maximal || p.is_prime, || {
                format!("k-maximal congruence {:?} is not prime", theta.class_of)
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_cong_kmax_corr(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let world = CongruenceWorld::compute(&lat, budget)?;
        for (i, p) in profiles_of_k_ideals(&cls) {
            let k = bourne_congruence(ring, &i);
            let kp = congruence_profile(&k, &world);
            sweep.require(kp.is_k_maximal == p.k_maximal.holds, || {
                format!("K_I maximality diverges from ideal maximality at {i}")
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_cong_prime_irr(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let world = CongruenceWorld::compute(&lat, budget)?;
        for theta in &world.k_congruences {
            let p = congruence_profile(theta, &world);
            sweep.require(!p.is_prime || p.is_irreducible, || {
                format!("k-prime congruence {:?} is not k-irreducible", theta.class_of)
            });
        }
    }
    Ok(sweep.finish())
}

fn suite_cong_ideal_irr(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let world = CongruenceWorld::compute(&lat, budget)?;
        for (i, p) in profiles_of_k_ideals(&cls) {
            let k = bourne_congruence(ring, &i);
            let kp = congruence_profile(&k, &world);
            if p.k_irreducible.holds {
                sweep.require(kp.is_irreducible, || {
                    format!("K_I fails k-irreducibility for k-irreducible I = {i}")
                });
            } else if kp.is_irreducible && lat.is_proper(&i) {
                // The converse is open; record observations without
                // treating them as violations.
                sweep.note(format!(
                    "converse observation on {}: K_I k-irreducible but I = {i} is not",
                    ring.name()
                ));
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_cong_excellent(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if !ring.is_additively_idempotent() {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let cls = Classifier::new(&lat);
        let world = CongruenceWorld::compute(&lat, budget)?;
        for (j, rho) in &world.excellent {
            let bar = saturated_closure(ring, j)?;
            if !cls.profile(&bar).k_irreducible.holds {
                continue;
            }
            for (_, rho1) in &world.excellent {
                for (_, rho2) in &world.excellent {
                    budget.charge(1, "excellent congruence sweep")?;
                    if rho1.meet(rho2) == *rho
                        && rho1.class_of != rho.class_of
                        && rho2.class_of != rho.class_of
                    {
                        sweep.require(false, || {
                            format!(
                                "rho_J for J={j} decomposes as a meet of excellent congruences"
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_k_cong_corr(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let world = CongruenceWorld::compute(&lat, budget)?;
        for i in &lat.k_ideals {
            let k = bourne_congruence(ring, i);
            sweep.require(k.zero_class() == k_closure(ring, i), || {
                format!("zero class of K_I differs from C_k(I) at {i}")
            });
            for j in &lat.k_ideals {
                if i != j {
                    let kj = bourne_congruence(ring, j);
                    sweep.require(k.class_of != kj.class_of, || {
                        format!("K_I collides for distinct k-ideals {i} and {j}")
                    });
                }
            }
        }
        for i in &lat.ideals {
            let k = bourne_congruence(ring, i);
            let closed = bourne_congruence(ring, &k_closure(ring, i));
            sweep.require(k.class_of == closed.class_of, || {
                format!("K_I differs from K of the k-closure at {i}")
            });
            sweep.require(
                world.all.iter().any(|c| c.class_of == k.class_of),
                || format!("K_I missing from the congruence enumeration at {i}"),
            );
        }
    }
    Ok(sweep.finish())
}

// ---------------------------------------------------------------------------
// Cross-check and model suites
// ---------------------------------------------------------------------------

fn suite_enum_crosscheck(corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    for inst in &corpus.instances {
        let ring = &inst.ring;
        if ring.size() > 6 {
            continue;
        }
        sweep.begin(ring.name());
        let lat = IdealLattice::compute(ring, budget)?;
        let brute = enumerate_ideals_exhaustive(ring, budget)?;
        sweep.require(lat.ideals == brute, || {
            format!("ideal enumeration differs: {} vs {} ideals", lat.ideals.len(), brute.len())
        });
        let fast = crate::congruence::enumerate_congruences(ring, budget)?;
        let brute = enumerate_congruences_bruteforce(ring, budget)?;
        sweep.require(
            fast.iter().map(|c| &c.class_of).eq(brute.iter().map(|c| &c.class_of)),
            || format!("congruence enumeration differs: {} vs {}", fast.len(), brute.len()),
        );
    }
    Ok(sweep.finish())
}

fn suite_nat_regression(_corpus: &Corpus, _budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.begin("N:4");
    let p = nat_classify(NatIdeal::new(4));
    sweep.require(p.k_strongly_irreducible.holds && !p.k_prime.holds, || {
        "4N must be k-strongly irreducible and not k-prime".into()
    });
    sweep.begin("N:6");
    let p = nat_classify(NatIdeal::new(6));
    sweep.require(
        p.k_semiprime.holds && !p.k_prime.holds && !p.k_strongly_irreducible.holds,
        || "6N must be k-semiprime and neither k-prime nor k-strongly irreducible".into(),
    );
    for q in [2u64, 3, 5] {
        sweep.begin(&format!("N:{}^2", q));
        let p = nat_classify(NatIdeal::new(q * q));
        sweep.require(p.k_primary.holds && !p.k_prime.holds, || {
            format!("{q}^2 N must be k-primary and not k-prime")
        });
    }
    Ok(sweep.finish())
}

fn suite_nat_oracle(_corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("falsification sweep at bound N = 4 d^2 per generator");
    for d in 0..=60u64 {
        budget.charge(4 * d * d + 64, "nat oracle sweep")?;
        sweep.begin(&format!("N:{d}"));
        let oracle = BoundedOracle::for_generator(d);
        let p = nat_classify(NatIdeal::new(d));
        for (name, closed, scanned) in [
            ("k_prime", p.k_prime.holds, oracle.k_prime(d)),
            ("k_semiprime", p.k_semiprime.holds, oracle.k_semiprime(d)),
            ("k_primary", p.k_primary.holds, oracle.k_primary(d)),
            (
                "k_strongly_irreducible",
                p.k_strongly_irreducible.holds,
                oracle.k_strongly_irreducible(d),
            ),
            ("k_irreducible", p.k_irreducible.holds, oracle.k_irreducible(d)),
            ("k_maximal", p.k_maximal.holds, oracle.k_maximal(d)),
        ] {
            sweep.require(closed == scanned, || {
                format!("{name} closed form {closed} vs oracle {scanned} at d={d}")
            });
        }
        sweep.require(oracle.is_k_ideal(d), || format!("dN fails the k-ideal scan at d={d}"));
        sweep.require(oracle.check_radical(d), || format!("radical formula fails at d={d}"));
        sweep.require(rad(rad(d)) == rad(d), || format!("rad not idempotent at d={d}"));
        // Radical laws as generator arithmetic.
        for e in 0..=60u64 {
            let lhs = rad(d.saturating_mul(e));
            let rhs = crate::nat::lcm(rad(d), rad(e));
            sweep.require(lhs == rhs, || format!("rad(de) != lcm(rad d, rad e) at d={d}, e={e}"));
        }
    }
    // Ideal arithmetic formulas against segment scans.
    for d in 0..=12u64 {
        for e in 0..=12u64 {
            budget.charge(16 * (d * e + 1), "nat ops oracle")?;
            sweep.begin(&format!("N:ops:{d},{e}"));
            let oracle = BoundedOracle::new(4 * d * e);
            let ops = nat_ops(NatIdeal::new(d), NatIdeal::new(e));
            sweep.require(oracle.check_sum_closure(d, e), || {
                format!("sum closure formula fails at d={d}, e={e}")
            });
            sweep.require(ops.sum_k_closure == crate::nat::gcd(d, e), || {
                format!("sum closure generator mismatch at d={d}, e={e}")
            });
            sweep.require(oracle.check_product(d, e), || {
                format!("product formula fails at d={d}, e={e}")
            });
            sweep.require(oracle.check_intersection(d, e), || {
                format!("intersection formula fails at d={d}, e={e}")
            });
            sweep.require(
                nat_radical(NatIdeal::new(ops.product)).generator
                    == crate::nat::lcm(rad(d), rad(e)),
                || format!("radical of product mismatch at d={d}, e={e}"),
            );
        }
    }
    Ok(sweep.finish())
}

fn suite_nat_ufsd(_corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("principality of k-ideals verified for generators up to 20");
    for d in 0..=60u64 {
        budget.charge(4 * d * d + 64, "nat ufsd sweep")?;
        sweep.begin(&format!("N:{d}"));
        let p = nat_classify(NatIdeal::new(d));
        // lcm criterion agrees with the k-strongly-irreducible flag; the
        // witness scan is the restricted oracle at the same bound.
        let oracle = BoundedOracle::for_generator(d);
        sweep.require(oracle.k_strongly_irreducible(d) == p.k_strongly_irreducible.holds, || {
            format!("lcm criterion diverges at d={d}")
        });
        if d >= 1 {
            let dec = nat_primary_decomposition(NatIdeal::new(d));
            let meet = dec.iter().fold(1u64, |acc, part| crate::nat::lcm(acc, part.generator));
            sweep.require(meet == d, || format!("decomposition does not meet back at d={d}"));
            for part in &dec {
                sweep.require(nat_classify(*part).k_primary.holds, || {
                    format!("decomposition part {} is not k-primary at d={d}", part.generator)
                });
            }
            sweep.require(crate::nat::nat_prime_element_theorems(NatIdeal::new(d))?, || {
                format!("prime-element statement fails at d={d}")
            });
        }
        // Principal-ideal-semidomain consequence: nonzero k-primes are
        // k-maximal.
        if d >= 1 && p.k_prime.holds {
            sweep.require(p.k_maximal.holds, || format!("nonzero k-prime {d}N not k-maximal"));
        }
    }
    sweep.begin("N:principality");
    sweep.require(check_k_ideals_are_principal(20), || {
        "k-closure of a small generated ideal is not principal".into()
    });
    sweep.begin("N:unique-factorization");
    sweep.require(check_unique_factorization(2000), || {
        "trial-division factorization failed to reproduce some n".into()
    });
    // Small sanity anchors for the lcm criterion examples.
    sweep.begin("N:lcm-witnesses");
    sweep.require(nat_lcm_witness(NatIdeal::new(6), 24) == Some((2, 3)), || {
        "expected minimal witness (2, 3) for 6N".into()
    });
    sweep.require(nat_lcm_witness(NatIdeal::new(4), 24).is_none(), || {
        "4N must satisfy the lcm criterion".into()
    });
    Ok(sweep.finish())
}

fn suite_nat_loc(_corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    let gen_sets: [&[u64]; 6] = [&[], &[2], &[3], &[2, 3], &[2, 5], &[5, 7]];
    for gens in gen_sets {
        budget.charge(10_000, "nat localisation sweep")?;
        sweep.begin(&format!("N:T={gens:?}"));
        let report = nat_localisation_correspondence(gens, 60)?;
        sweep.require(report.colon_formula_ok, || {
            format!("colon formula fails for T generated by {gens:?}")
        });
        sweep.require(report.contraction_fixed, || {
            format!("a survivor moved under ec-contraction for {gens:?}")
        });
        for &s in &report.survivors {
            sweep.require(s == 0 || crate::nat::is_prime_power(s), || {
                format!("survivor {s} is not zero or a prime power")
            });
            if s > 0 {
                let p = crate::nat::factorize(s)[0].0;
                sweep.require(!gens.contains(&p), || {
                    format!("survivor {s} meets the multiplicative set")
                });
            }
        }
        // Everything k-strongly irreducible either survives or meets T.
        for d in 0..=60u64 {
            let cls = nat_classify(NatIdeal::new(d));
            if cls.k_strongly_irreducible.holds && !report.survivors.contains(&d) {
                let p = if d == 0 { 0 } else { crate::nat::factorize(d)[0].0 };
                sweep.require(d != 0 && gens.contains(&p), || {
                    format!("{d}N neither survives nor meets T for {gens:?}")
                });
            }
        }
    }
    Ok(sweep.finish())
}

fn suite_trop(_corpus: &Corpus, budget: &Budget) -> Result<SuiteOutcome> {
    let mut sweep = Sweep::new();
    sweep.note("thresholds t <= 12 plus infinity; oracle bound 40");
    let oracle = TropOracle::new(40);
    let thresholds: Vec<Option<u64>> = (0..=12).map(Some).chain([None]).collect();
    for t in thresholds {
        budget.charge(oracle.bound * oracle.bound, "tropical sweep")?;
        sweep.begin(&format!("T:{t:?}"));
        let i = TropIdeal::new(t);
        let p = trop_classify(i);
        sweep.require(oracle.k_ideal(i), || format!("up-set at {t:?} fails the k-ideal scan"));
        for (name, closed, scanned) in [
            ("k_prime", p.k_prime.holds, oracle.k_prime(i)),
            ("k_semiprime", p.k_semiprime.holds, oracle.k_semiprime(i)),
            ("k_primary", p.k_primary.holds, oracle.k_primary(i)),
            (
                "k_strongly_irreducible",
                p.k_strongly_irreducible.holds,
                oracle.k_strongly_irreducible(i),
            ),
            ("k_irreducible", p.k_irreducible.holds, oracle.k_irreducible(i)),
            ("k_maximal", p.k_maximal.holds, oracle.k_maximal(i)),
            ("k_cancellation", p.k_cancellation.holds, oracle.k_cancellation(i)),
        ] {
            sweep.require(closed == scanned, || {
                format!("{name} closed form {closed} vs oracle {scanned} at {t:?}")
            });
        }
        // Chain ideal lattice: irreducible and strongly irreducible agree.
        sweep.require(p.k_irreducible.holds == p.k_strongly_irreducible.holds, || {
            format!("chain coincidence fails at {t:?}")
        });
        sweep.require(p.strong.holds, || format!("up-set at {t:?} is not strong"));
        // lcm criterion matches strong irreducibility for proper ideals.
        if i.is_proper() {
            sweep.require(trop_lcm_criterion(i, 24) == p.k_strongly_irreducible.holds, || {
                format!("lcm criterion diverges at {t:?}")
            });
        }
    }
    Ok(sweep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_from_spec;

    // A reduced corpus keeps the unit test quick; the full default corpus
    // is exercised by the acceptance suite.
    fn small_corpus() -> Corpus {
        corpus_from_spec("trunc=1..3;chain=2..3;prod=B1,N2;zn=2,4;trop=1..3").unwrap()
    }

    #[test]
    fn all_suites_pass_on_the_small_corpus() {
        let corpus = small_corpus();
        let budget = Budget::default();
        let reports = run_all(&corpus, &budget).unwrap();
        assert_eq!(reports.len(), registry().len());
        for r in &reports {
            assert!(
                r.findings.is_empty(),
                "suite {} reported findings: {:?}",
                r.suite,
                r.findings
            );
            assert_eq!(r.passes + r.findings.len() as u32, r.instances_checked);
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        let corpus = small_corpus();
        assert!(run_suite("no-such-suite", &corpus, &Budget::default()).is_err());
    }

    // Applicability filters: an idempotent-only suite on a corpus with no
    // additively idempotent instance reports vacuous, which is distinct
    // from a pass.
    #[test]
    fn inapplicable_suites_are_vacuous() {
        let corpus = corpus_from_spec("trunc=2..3;chain=;prod=;zn=;trop=").unwrap();
        assert!(corpus.instances.iter().all(|i| !i.ring.is_additively_idempotent()));
        let report = run_suite("saturated-iff-kideal", &corpus, &Budget::default()).unwrap();
        assert!(report.vacuous);
        assert_eq!(report.instances_checked, 0);
    }

    #[test]
    fn reports_serialize_deterministically() {
        let corpus = small_corpus();
        let budget = Budget::default();
        let a = serde_json::to_string(&run_all(&corpus, &budget).unwrap()).unwrap();
        let b = serde_json::to_string(&run_all(&corpus, &Budget::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
