//! Classification of an ideal against the prime / semiprime / primary /
//! irreducible / strongly irreducible / maximal hierarchy and the
//! k-variants of all of these.
//!
//! Element conditions (prime, semiprime, primary) are decided by element
//! scans; the ideal-quantified classes scan pairs of enumerated ideals (all
//! ideals for the plain classes, k-ideals for the k-classes, exactly as the
//! definitions quantify). Both routes are kept so the exchange principle
//! `k-X  iff  k-ideal and X` can be checked by computing the two sides
//! independently.
//!
//! Conventions, surfaced in every profile's notes: prime, primary, maximal,
//! irreducible and strongly irreducible require a proper ideal; primary
//! exponents range over `1..=|S|` (powers of an element cycle within `|S|`
//! steps in a finite semiring).

use serde_json::{json, Map, Value};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::{
    colon_ideal, generate_ideal, ideal_product, is_ideal, is_k_ideal, is_strong_ideal, k_closure,
    IdealLattice,
};
use crate::semiring::{FiniteSemiring, NaturalOrder};
use crate::set::{CarrierSet, Elem};

/// Counterexample attached to a refuted flag; minimal in scan order, which
/// follows the lexicographic element / bitset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Elems(Vec<Elem>),
    Ideals(Vec<CarrierSet>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Flag {
    pub fn from_bool(holds: bool) -> Self {
        Flag { holds, witness: None }
    }
    fn yes() -> Self {
        Flag { holds: true, witness: None }
    }
    fn no(witness: Option<Witness>) -> Self {
        Flag { holds: false, witness }
    }
}

/// Full classification of one ideal.
#[derive(Clone, Debug)]
pub struct ClassProfile {
    pub ideal: Flag,
    pub k_ideal: Flag,
    pub strong: Flag,
    pub prime: Flag,
    pub semiprime: Flag,
    pub primary: Flag,
    pub irreducible: Flag,
    pub strongly_irreducible: Flag,
    pub maximal: Flag,
    pub k_prime: Flag,
    pub k_semiprime: Flag,
    pub k_primary: Flag,
    pub k_irreducible: Flag,
    pub k_strongly_irreducible: Flag,
    pub k_maximal: Flag,
    pub k_cancellation: Flag,
    pub notes: Vec<String>,
}

impl ClassProfile {
    pub fn fields(&self) -> Vec<(&'static str, &Flag)> {
        vec![
            ("ideal", &self.ideal),
            ("k_ideal", &self.k_ideal),
            ("strong", &self.strong),
            ("prime", &self.prime),
            ("semiprime", &self.semiprime),
            ("primary", &self.primary),
            ("irreducible", &self.irreducible),
            ("strongly_irreducible", &self.strongly_irreducible),
            ("maximal", &self.maximal),
            ("k_prime", &self.k_prime),
            ("k_semiprime", &self.k_semiprime),
            ("k_primary", &self.k_primary),
            ("k_irreducible", &self.k_irreducible),
            ("k_strongly_irreducible", &self.k_strongly_irreducible),
            ("k_maximal", &self.k_maximal),
            ("k_cancellation", &self.k_cancellation),
        ]
    }

    /// Flat JSON object of booleans plus a witness map for the refuted
    /// flags that carry one.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        let mut witnesses = Map::new();
        for (name, flag) in self.fields() {
            obj.insert(name.into(), Value::Bool(flag.holds));
            if let Some(w) = &flag.witness {
                let v = match w {
                    Witness::Elems(es) => json!(es),
                    Witness::Ideals(sets) => {
                        json!(sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
                    }
                };
                witnesses.insert(name.into(), v);
            }
        }
        obj.insert("witnesses".into(), Value::Object(witnesses));
        obj.insert("notes".into(), json!(self.notes));
        Value::Object(obj)
    }
}

/// Classifier for one semiring: the enumerated lattice plus the memoized
/// pairwise products of k-ideals that the quantified definitions keep
/// asking for.
pub struct Classifier<'s> {
    pub lat: &'s IdealLattice<'s>,
    k_products: Vec<Vec<CarrierSet>>,
}

impl<'s> Classifier<'s> {
    pub fn new(lat: &'s IdealLattice<'s>) -> Self {
        let k = &lat.k_ideals;
        let k_products = k
            .iter()
            .map(|a| k.iter().map(|b| ideal_product(lat.ring, a, b)).collect())
            .collect();
        Classifier { lat, k_products }
    }

    pub fn ring(&self) -> &'s FiniteSemiring {
        self.lat.ring
    }

    fn proper(&self, i: &CarrierSet) -> bool {
        self.lat.is_proper(i)
    }

    pub fn k_product(&self, a: usize, b: usize) -> &CarrierSet {
        &self.k_products[a][b]
    }

    fn k_index(&self, i: &CarrierSet) -> Option<usize> {
        self.lat.k_ideals.binary_search(i).ok()
    }

    // -- element conditions --------------------------------------------

    fn prime_elementwise(&self, i: &CarrierSet) -> Flag {
        let ring = self.ring();
        if !self.proper(i) {
            return Flag::no(None);
        }
        for a in ring.elements() {
            for b in ring.elements() {
                if i.contains(ring.mul(a, b)) && !i.contains(a) && !i.contains(b) {
                    return Flag::no(Some(Witness::Elems(vec![a, b])));
                }
            }
        }
        Flag::yes()
    }

    fn semiprime_elementwise(&self, i: &CarrierSet) -> Flag {
        let ring = self.ring();
        for a in ring.elements() {
            if i.contains(ring.mul(a, a)) && !i.contains(a) {
                return Flag::no(Some(Witness::Elems(vec![a])));
            }
        }
        Flag::yes()
    }

    fn primary_elementwise(&self, i: &CarrierSet) -> Flag {
        let ring = self.ring();
        if !self.proper(i) {
            return Flag::no(None);
        }
        for a in ring.elements() {
            for b in ring.elements() {
                if i.contains(ring.mul(a, b)) && !i.contains(a) {
                    let mut power = b;
                    let mut some_power_in = false;
                    for _ in 0..ring.size() {
                        if i.contains(power) {
                            some_power_in = true;
                            break;
                        }
                        power = ring.mul(power, b);
                    }
                    if !some_power_in {
                        return Flag::no(Some(Witness::Elems(vec![a, b])));
                    }
                }
            }
        }
        Flag::yes()
    }

    // -- quantified conditions -------------------------------------------

    fn irreducible_over(&self, universe: &[CarrierSet], i: &CarrierSet) -> Flag {
        if !self.proper(i) {
            return Flag::no(None);
        }
        for a in universe {
            for b in universe {
                if a.intersection(b) == *i && a != i && b != i {
                    return Flag::no(Some(Witness::Ideals(vec![*a, *b])));
                }
            }
        }
        Flag::yes()
    }

    fn strongly_irreducible_over(&self, universe: &[CarrierSet], i: &CarrierSet) -> Flag {
        if !self.proper(i) {
            return Flag::no(None);
        }
        for a in universe {
            for b in universe {
                if a.intersection(b).is_subset(i) && !a.is_subset(i) && !b.is_subset(i) {
                    return Flag::no(Some(Witness::Ideals(vec![*a, *b])));
                }
            }
        }
        Flag::yes()
    }

    fn maximal_over(&self, universe: &[CarrierSet], i: &CarrierSet) -> Flag {
        if !self.proper(i) {
            return Flag::no(None);
        }
        for a in universe {
            if i.is_proper_subset(a) && self.proper(a) {
                return Flag::no(Some(Witness::Ideals(vec![*a])));
            }
        }
        Flag::yes()
    }

    fn k_prime_quantified(&self, i: &CarrierSet) -> Flag {
        if self.k_index(i).is_none() || !self.proper(i) {
            return Flag::no(None);
        }
        let ks = &self.lat.k_ideals;
        for (ai, a) in ks.iter().enumerate() {
            for (bi, b) in ks.iter().enumerate() {
                if self.k_product(ai, bi).is_subset(i) && !a.is_subset(i) && !b.is_subset(i) {
                    return Flag::no(Some(Witness::Ideals(vec![*a, *b])));
                }
            }
        }
        Flag::yes()
    }

    fn k_semiprime_quantified(&self, i: &CarrierSet) -> Flag {
        if self.k_index(i).is_none() {
            return Flag::no(None);
        }
        let ks = &self.lat.k_ideals;
        for (ai, a) in ks.iter().enumerate() {
            if self.k_product(ai, ai).is_subset(i) && !a.is_subset(i) {
                return Flag::no(Some(Witness::Ideals(vec![*a])));
            }
        }
        Flag::yes()
    }

    fn k_cancellation_flag(&self, i: &CarrierSet) -> Flag {
        let ring = self.ring();
        let Some(idx) = self.k_index(i) else { return Flag::no(None) };
        if *i == generate_ideal(ring, &CarrierSet::EMPTY) {
            return Flag::no(None);
        }
        let ks = &self.lat.k_ideals;
        for (ji, j) in ks.iter().enumerate() {
            for (ki, k) in ks.iter().enumerate() {
                if self.k_product(idx, ji) == self.k_product(idx, ki) && j != k {
                    return Flag::no(Some(Witness::Ideals(vec![*j, *k])));
                }
            }
        }
        Flag::yes()
    }

    /// Classifies `i`, which may be any subset; non-ideals get everything
    /// refuted from the `ideal` flag downward.
    pub fn profile(&self, i: &CarrierSet) -> ClassProfile {
        let ring = self.ring();
        let ideal_flag = if is_ideal(ring, i) { Flag::yes() } else { Flag::no(None) };
        let k_flag =
            if ideal_flag.holds && is_k_ideal(ring, i) { Flag::yes() } else { Flag::no(None) };
        let strong_flag =
            if ideal_flag.holds && is_strong_ideal(ring, i) { Flag::yes() } else { Flag::no(None) };

        let (prime, semiprime, primary) = if ideal_flag.holds {
            (self.prime_elementwise(i), self.semiprime_elementwise(i), self.primary_elementwise(i))
        } else {
            (Flag::no(None), Flag::no(None), Flag::no(None))
        };

        let all = &self.lat.ideals;
        let (irreducible, strongly_irreducible, maximal) = if ideal_flag.holds {
            (
                self.irreducible_over(all, i),
                self.strongly_irreducible_over(all, i),
                self.maximal_over(all, i),
            )
        } else {
            (Flag::no(None), Flag::no(None), Flag::no(None))
        };

        let ks = &self.lat.k_ideals;
        let (k_irreducible, k_strongly_irreducible, k_maximal) = if k_flag.holds {
            (
                self.irreducible_over(ks, i),
                self.strongly_irreducible_over(ks, i),
                self.maximal_over(ks, i),
            )
        } else {
            (Flag::no(None), Flag::no(None), Flag::no(None))
        };

        let k_prime = self.k_prime_quantified(i);
        let k_semiprime = self.k_semiprime_quantified(i);
        let k_primary = if k_flag.holds { self.primary_elementwise(i) } else { Flag::no(None) };

        ClassProfile {
            ideal: ideal_flag,
            k_ideal: k_flag,
            strong: strong_flag,
            prime,
            semiprime,
            primary,
            irreducible,
            strongly_irreducible,
            maximal,
            k_prime,
            k_semiprime,
            k_primary,
            k_irreducible,
            k_strongly_irreducible,
            k_maximal,
            k_cancellation: self.k_cancellation_flag(i),
            notes: vec![
                "proper required for prime/primary/maximal/irreducible/strongly-irreducible".into(),
                format!("primary exponents scanned over 1..={}", ring.size()),
            ],
        }
    }
}

/// One-shot classification; builds a transient [`Classifier`].
pub fn classify_ideal(lat: &IdealLattice, i: &CarrierSet) -> ClassProfile {
    Classifier::new(lat).profile(i)
}

// ---------------------------------------------------------------------------
// i_k-systems and the three-way strongly-irreducible characterization
// ---------------------------------------------------------------------------

/// Per-element k-closures of principal ideals, shared by the i_k-system
/// machinery.
pub fn principal_k_closures(ring: &FiniteSemiring) -> Vec<CarrierSet> {
    ring.elements()
        .map(|x| k_closure(ring, &generate_ideal(ring, &CarrierSet::singleton(x))))
        .collect()
}

/// `A` is an i_k-system when any `a, b` in `A` admit a common element of
/// `C_k(<a>) ∩ C_k(<b>)` inside `A`.
pub fn is_ik_system(ring: &FiniteSemiring, a: &CarrierSet) -> bool {
    assert!(!a.is_empty(), "i_k-systems are nonempty by definition");
    let closures = principal_k_closures(ring);
    for x in a.iter() {
        for y in a.iter() {
            let meet = closures[x as usize].intersection(&closures[y as usize]);
            if meet.intersection(a).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The three equivalent readings of k-strong irreducibility for a proper
/// k-ideal, each computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrongIrreducibilityViews {
    /// Pair scan over k-ideals.
    pub quantified: bool,
    /// `C_k(<a>) ∩ C_k(<b>) ⊆ I` forces `a` or `b` into `I`.
    pub principal_closures: bool,
    /// The complement is an i_k-system.
    pub complement_ik_system: bool,
}

impl StrongIrreducibilityViews {
    pub fn agree(&self) -> bool {
        self.quantified == self.principal_closures
            && self.principal_closures == self.complement_ik_system
    }
}

pub fn strongly_irreducible_views(cls: &Classifier, i: &CarrierSet) -> StrongIrreducibilityViews {
    let ring = cls.ring();
    assert!(cls.lat.contains_k_ideal(i) && cls.lat.is_proper(i), "requires a proper k-ideal");
    let quantified = cls.strongly_irreducible_over(&cls.lat.k_ideals, i).holds;
    let closures = principal_k_closures(ring);
    let mut principal = true;
    for a in ring.elements() {
        for b in ring.elements() {
            let meet = closures[a as usize].intersection(&closures[b as usize]);
            if meet.is_subset(i) && !i.contains(a) && !i.contains(b) {
                principal = false;
            }
        }
    }
    let complement = ring.carrier().difference(i);
    StrongIrreducibilityViews {
        quantified,
        principal_closures: principal,
        complement_ik_system: is_ik_system(ring, &complement),
    }
}

// ---------------------------------------------------------------------------
// Order-theoretic criteria (additively idempotent setting)
// ---------------------------------------------------------------------------

/// `xy <= z` with `z` in the ideal forces a factor in, for all elements.
pub fn order_k_prime(ring: &FiniteSemiring, ord: &NaturalOrder, i: &CarrierSet) -> bool {
    for x in ring.elements() {
        for y in ring.elements() {
            if i.contains(x) || i.contains(y) {
                continue;
            }
            let xy = ring.mul(x, y);
            if i.iter().any(|z| ord.leq(xy, z)) {
                return false;
            }
        }
    }
    true
}

/// `x^2 <= z` with `z` in the ideal forces `x` in.
pub fn order_k_semiprime(ring: &FiniteSemiring, ord: &NaturalOrder, i: &CarrierSet) -> bool {
    for x in ring.elements() {
        if i.contains(x) {
            continue;
        }
        let xx = ring.mul(x, x);
        if i.iter().any(|z| ord.leq(xx, z)) {
            return false;
        }
    }
    true
}

/// `lcm{x,y} <= z` with `z` in the ideal forces a factor in; needs a
/// divisibility-lcm oracle for the instance.
pub fn order_k_strongly_irreducible_lcm(
    ring: &FiniteSemiring,
    ord: &NaturalOrder,
    lcm: &dyn Fn(Elem, Elem) -> Elem,
    i: &CarrierSet,
) -> bool {
    for x in ring.elements() {
        for y in ring.elements() {
            if i.contains(x) || i.contains(y) {
                continue;
            }
            let l = lcm(x, y);
            if i.iter().any(|z| ord.leq(l, z)) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// k-cancellation
// ---------------------------------------------------------------------------

/// Decides whether `IJ = IK` forces `J = K` over k-ideals. In the
/// additively idempotent setting (the only one where this is called) the
/// colon characterization `(IJ : I) = J` and the inclusion form
/// `IJ ⊆ IK -> J ⊆ K` are computed as well and any divergence trips an
/// assertion.
pub fn is_k_cancellation(cls: &Classifier, i: &CarrierSet) -> Result<bool> {
    let ring = cls.ring();
    assert!(cls.lat.contains_k_ideal(i), "k-cancellation is defined for k-ideals");
    assert!(
        *i != generate_ideal(ring, &CarrierSet::EMPTY),
        "k-cancellation is defined for non-zero k-ideals"
    );
    if !ring.is_additively_idempotent() {
        return Err(Error::NotIdempotent { op: "is_k_cancellation", name: ring.name().into() });
    }
    let cancellation = cls.k_cancellation_flag(i).holds;

    let ks = &cls.lat.k_ideals;
    let idx = ks.binary_search(i).unwrap();
    let colon_route =
        ks.iter().enumerate().all(|(ji, j)| colon_ideal(ring, cls.k_product(idx, ji), i) == *j);
    let inclusion_route = ks.iter().enumerate().all(|(ji, j)| {
        ks.iter().enumerate().all(|(ki, k)| {
            !cls.k_product(idx, ji).is_subset(cls.k_product(idx, ki)) || j.is_subset(k)
        })
    });
    assert!(
        cancellation == colon_route && colon_route == inclusion_route,
        "k-cancellation characterizations diverge on {} at {i}: IJ=IK->J=K {}, (IJ:I)=J {}, inclusion {}",
        ring.name(),
        cancellation,
        colon_route,
        inclusion_route
    );
    Ok(cancellation)
}

// ---------------------------------------------------------------------------
// Primary decomposition
// ---------------------------------------------------------------------------

/// Least-cardinality set of k-primary ideals meeting in `i`, if any exists
/// within the (finite, hence exhaustively known) k-ideal universe. The unit
/// ideal decomposes as the empty intersection.
pub fn k_primary_decomposition(
    cls: &Classifier,
    i: &CarrierSet,
    budget: &Budget,
) -> Result<Option<Vec<CarrierSet>>> {
    let ring = cls.ring();
    assert!(cls.lat.contains_k_ideal(i), "decomposition target must be a k-ideal");
    let candidates: Vec<CarrierSet> = cls
        .lat
        .k_ideals
        .iter()
        .copied()
        .filter(|p| i.is_subset(p) && cls.lat.is_proper(p))
        .filter(|p| cls.profile(p).k_primary.holds)
        .collect();

    let full_meet = candidates.iter().fold(ring.carrier(), |acc, p| acc.intersection(p));
    if full_meet != *i {
        return Ok(None);
    }

    fn search(
        candidates: &[CarrierSet],
        target: &CarrierSet,
        size: usize,
        start: usize,
        chosen: &mut Vec<CarrierSet>,
        acc: CarrierSet,
        budget: &Budget,
    ) -> Result<bool> {
        budget.charge(1, "k_primary_decomposition")?;
        if chosen.len() == size {
            return Ok(acc == *target);
        }
        for idx in start..candidates.len() {
            chosen.push(candidates[idx]);
            let next = acc.intersection(&candidates[idx]);
            if target.is_subset(&next)
                && search(candidates, target, size, idx + 1, chosen, next, budget)?
            {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    for size in 0..=candidates.len() {
        let mut chosen = Vec::new();
        if search(&candidates, i, size, 0, &mut chosen, ring.carrier(), budget)? {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

/// Every k-ideal admits a k-primary decomposition.
pub fn is_laskerian(cls: &Classifier, budget: &Budget) -> Result<bool> {
    for i in &cls.lat.k_ideals {
        if k_primary_decomposition(cls, i, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{
        make_boolean, make_chain_lattice, make_product, make_tropical, make_truncated_nat,
        natural_order,
    };

    fn with_lattice<R>(ring: &FiniteSemiring, f: impl FnOnce(&Classifier) -> R) -> R {
        let budget = Budget::default();
        let lat = IdealLattice::compute(ring, &budget).unwrap();
        let cls = Classifier::new(&lat);
        f(&cls)
    }

    #[test]
    fn chain_lower_ideal_is_k_maximal_and_k_prime() {
        let c3 = make_chain_lattice(3).unwrap();
        with_lattice(&c3, |cls| {
            let i = CarrierSet::from_slice(&[0, 1]);
            let p = cls.profile(&i);
            assert!(p.k_maximal.holds);
            assert!(p.k_prime.holds);
            assert!(p.strong.holds);
        });
    }

    #[test]
    fn coordinate_ideal_in_b1xb1_is_k_prime_and_k_maximal() {
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        with_lattice(&p, |cls| {
            let i = CarrierSet::from_slice(&[0, 2]);
            let prof = cls.profile(&i);
            assert!(prof.k_prime.holds);
            assert!(prof.k_maximal.holds);
        });
    }

    #[test]
    fn zero_ideal_of_n2_is_k_prime_and_k_maximal() {
        let n2 = make_truncated_nat(2).unwrap();
        with_lattice(&n2, |cls| {
            let prof = cls.profile(&CarrierSet::singleton(0));
            assert!(prof.k_prime.holds);
            assert!(prof.k_maximal.holds, "the only proper k-ideal");
        });
    }

    #[test]
    fn ik_system_examples() {
        let c3 = make_chain_lattice(3).unwrap();
        assert!(is_ik_system(&c3, &CarrierSet::singleton(2)));
        assert!(is_ik_system(&c3, &CarrierSet::from_slice(&[1, 2])));
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        // Complement of the zero ideal: (1,0) and (0,1) have principal
        // closures meeting only in zero.
        assert!(!is_ik_system(&p, &CarrierSet::from_slice(&[1, 2, 3])));
    }

    #[test]
    fn three_way_views_agree() {
        let budget = Budget::default();
        let b1 = make_boolean();
        let rings = vec![
            make_chain_lattice(3).unwrap(),
            make_product(&b1, &b1).unwrap(),
            make_truncated_nat(2).unwrap(),
        ];
        for ring in &rings {
            let lat = IdealLattice::compute(ring, &budget).unwrap();
            let cls = Classifier::new(&lat);
            for i in &lat.k_ideals {
                if !lat.is_proper(i) {
                    continue;
                }
                let views = strongly_irreducible_views(&cls, i);
                assert!(views.agree(), "views diverge on {} at {i}: {views:?}", ring.name());
            }
        }
        // On B1xB1 the zero ideal has all three views false.
        let p = make_product(&b1, &b1).unwrap();
        let lat = IdealLattice::compute(&p, &budget).unwrap();
        let cls = Classifier::new(&lat);
        let views = strongly_irreducible_views(&cls, &CarrierSet::singleton(0));
        assert!(!views.quantified && !views.principal_closures && !views.complement_ik_system);
    }

    #[test]
    fn order_criteria_on_chain() {
        let c3 = make_chain_lattice(3).unwrap();
        let ord = natural_order(&c3).unwrap();
        let i = CarrierSet::from_slice(&[0, 1]);
        assert!(order_k_prime(&c3, &ord, &i));
        assert!(order_k_semiprime(&c3, &ord, &CarrierSet::singleton(0)));
    }

    #[test]
    fn order_lcm_criterion_on_tropical_upset() {
        let t4 = make_tropical(4).unwrap();
        let ord = natural_order(&t4).unwrap();
        let upset = CarrierSet::from_slice(&[2, 3, 4]);
        assert!(is_k_ideal(&t4, &upset));
        let lcm = |x: Elem, y: Elem| x.max(y);
        assert!(order_k_strongly_irreducible_lcm(&t4, &ord, &lcm, &upset));
    }

    #[test]
    fn cancellation_examples() {
        let b1 = make_boolean();
        with_lattice(&b1, |cls| {
            assert!(is_k_cancellation(cls, &b1.carrier()).unwrap(), "unit ideal cancels");
        });
        let p = make_product(&b1, &b1).unwrap();
        with_lattice(&p, |cls| {
            let i = CarrierSet::from_slice(&[0, 2]);
            assert!(!is_k_cancellation(cls, &i).unwrap());
        });
        let c3 = make_chain_lattice(3).unwrap();
        with_lattice(&c3, |cls| {
            assert!(is_k_cancellation(cls, &c3.carrier()).unwrap());
        });
    }

    #[test]
    fn decomposition_examples() {
        let budget = Budget::default();
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        let lat = IdealLattice::compute(&p, &budget).unwrap();
        let cls = Classifier::new(&lat);
        let zero = CarrierSet::singleton(0);
        let dec = k_primary_decomposition(&cls, &zero, &budget).unwrap().unwrap();
        assert_eq!(dec, vec![CarrierSet::from_slice(&[0, 1]), CarrierSet::from_slice(&[0, 2])]);

        let c3 = make_chain_lattice(3).unwrap();
        let lat = IdealLattice::compute(&c3, &budget).unwrap();
        let cls = Classifier::new(&lat);
        let dec =
            k_primary_decomposition(&cls, &CarrierSet::singleton(0), &budget).unwrap().unwrap();
        assert_eq!(dec, vec![CarrierSet::singleton(0)]);

        // A k-primary ideal decomposes as itself.
        for i in &lat.k_ideals {
            if cls.profile(i).k_primary.holds {
                let d = k_primary_decomposition(&cls, i, &budget).unwrap().unwrap();
                assert_eq!(d, vec![*i]);
            }
        }

        // The unit ideal decomposes as the empty intersection.
        let unit = c3.carrier();
        assert_eq!(k_primary_decomposition(&cls, &unit, &budget).unwrap().unwrap(), Vec::new());
    }
}
