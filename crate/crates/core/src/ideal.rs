//! Ideal algebra over a finite semiring.
//!
//! Ideals are carried around as plain [`CarrierSet`]s next to their ambient
//! semiring; all predicates and operations are exhaustive scans over the
//! tables. Enumeration closes the principal ideals under ideal sums, which
//! yields exactly the ideal lattice (every ideal is the join of the
//! principal ideals of its elements); a `2^n` subset scan is kept as an
//! independent cross-check oracle for small carriers.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::semiring::{same_ring, FiniteSemiring, NaturalOrder};
use crate::set::{CarrierSet, Elem};

/// Nonempty, closed under addition, absorbs multiplication by the carrier.
pub fn is_ideal(ring: &FiniteSemiring, a: &CarrierSet) -> bool {
    if !a.contains(ring.zero()) {
        return false;
    }
    for x in a.iter() {
        for y in a.iter() {
            if !a.contains(ring.add(x, y)) {
                return false;
            }
        }
        for s in ring.elements() {
            if !a.contains(ring.mul(s, x)) {
                return false;
            }
        }
    }
    true
}

/// Subtractive: `x + y` and `y` in the ideal force `x` in.
pub fn is_k_ideal(ring: &FiniteSemiring, a: &CarrierSet) -> bool {
    if !is_ideal(ring, a) {
        return false;
    }
    for x in ring.elements() {
        if a.contains(x) {
            continue;
        }
        for y in a.iter() {
            if a.contains(ring.add(x, y)) {
                return false;
            }
        }
    }
    true
}

/// `a + b` in the ideal forces both summands in.
pub fn is_strong_ideal(ring: &FiniteSemiring, a: &CarrierSet) -> bool {
    if !is_ideal(ring, a) {
        return false;
    }
    for x in ring.elements() {
        for y in ring.elements() {
            if a.contains(ring.add(x, y)) && !(a.contains(x) && a.contains(y)) {
                return false;
            }
        }
    }
    true
}

/// Least ideal containing `gens`: fixpoint under addition closure and
/// multiplication by arbitrary carrier elements.
pub fn generate_ideal(ring: &FiniteSemiring, gens: &CarrierSet) -> CarrierSet {
    let mut out = *gens;
    out.insert(ring.zero());
    loop {
        let mut next = out;
        for x in out.iter() {
            for y in out.iter() {
                next.insert(ring.add(x, y));
            }
            for s in ring.elements() {
                next.insert(ring.mul(s, x));
            }
        }
        if next == out {
            return out;
        }
        out = next;
    }
}

/// k-closure `{ s | s + x in I for some x in I }`, the least k-ideal
/// containing the ideal `I`.
pub fn k_closure(ring: &FiniteSemiring, i: &CarrierSet) -> CarrierSet {
    assert!(is_ideal(ring, i), "k_closure requires an ideal");
    let mut out = CarrierSet::EMPTY;
    for s in ring.elements() {
        if i.iter().any(|x| i.contains(ring.add(s, x))) {
            out.insert(s);
        }
    }
    out
}

/// Saturation `{ x | x + z = z for some z in J }` of an ideal of an
/// additively idempotent semiring.
pub fn saturated_closure(ring: &FiniteSemiring, j: &CarrierSet) -> Result<CarrierSet> {
    if !ring.is_additively_idempotent() {
        return Err(Error::NotIdempotent { op: "saturated_closure", name: ring.name().into() });
    }
    assert!(is_ideal(ring, j), "saturated_closure requires an ideal");
    let mut out = CarrierSet::EMPTY;
    for x in ring.elements() {
        if j.iter().any(|z| ring.add(x, z) == z) {
            out.insert(x);
        }
    }
    Ok(out)
}

fn assert_same_ambient(ring: &FiniteSemiring, other: &FiniteSemiring) {
    assert!(same_ring(ring, other), "ideals from different ambient semirings");
}

/// `I + J = { a + b }`; the pointwise sum set is already an ideal.
pub fn ideal_sum(ring: &FiniteSemiring, i: &CarrierSet, j: &CarrierSet) -> CarrierSet {
    let mut out = CarrierSet::EMPTY;
    for a in i.iter() {
        for b in j.iter() {
            out.insert(ring.add(a, b));
        }
    }
    debug_assert!(is_ideal(ring, &out));
    out
}

/// Ideal generated by the pairwise products.
pub fn ideal_product(ring: &FiniteSemiring, i: &CarrierSet, j: &CarrierSet) -> CarrierSet {
    let mut prods = CarrierSet::EMPTY;
    for a in i.iter() {
        for b in j.iter() {
            prods.insert(ring.mul(a, b));
        }
    }
    generate_ideal(ring, &prods)
}

pub fn ideal_intersection(i: &CarrierSet, j: &CarrierSet) -> CarrierSet {
    i.intersection(j)
}

/// Colon ideal `(I : J) = { s | sJ ⊆ I }`.
pub fn colon_ideal(ring: &FiniteSemiring, i: &CarrierSet, j: &CarrierSet) -> CarrierSet {
    let mut out = CarrierSet::EMPTY;
    for s in ring.elements() {
        if j.iter().all(|b| i.contains(ring.mul(s, b))) {
            out.insert(s);
        }
    }
    debug_assert!(is_ideal(ring, &out));
    out
}

/// `(I : s)` for a single denominator.
pub fn colon_element(ring: &FiniteSemiring, i: &CarrierSet, s: Elem) -> CarrierSet {
    colon_ideal(ring, i, &CarrierSet::singleton(s))
}

// ---------------------------------------------------------------------------
// Multiplicative sets
// ---------------------------------------------------------------------------

/// Multiplicatively closed subset containing `1`. Zero is allowed by the
/// type; the constructions that would degenerate reject it themselves.
#[derive(Clone, Copy)]
pub struct MultSet<'s> {
    pub ring: &'s FiniteSemiring,
    pub members: CarrierSet,
}

impl<'s> MultSet<'s> {
    pub fn new(ring: &'s FiniteSemiring, members: CarrierSet) -> Result<Self> {
        if !members.contains(ring.one()) {
            return Err(Error::Param("multiplicative set must contain 1".into()));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(ring.mul(a, b)) {
                    return Err(Error::Param(format!(
                        "set {members} is not multiplicatively closed ({a}*{b} escapes)"
                    )));
                }
            }
        }
        Ok(MultSet { ring, members })
    }

    /// Closure of `gens ∪ {1}` under multiplication.
    pub fn generated_by(ring: &'s FiniteSemiring, gens: &CarrierSet) -> Self {
        let mut members = *gens;
        members.insert(ring.one());
        loop {
            let mut next = members;
            for a in members.iter() {
                for b in members.iter() {
                    next.insert(ring.mul(a, b));
                }
            }
            if next == members {
                break;
            }
            members = next;
        }
        MultSet { ring, members }
    }
}

/// Every multiplicatively closed `T` with `1 ∈ T` and `0 ∉ T`, in bitset
/// order. Used by the suites to quantify over localisations.
pub fn enumerate_mult_sets(ring: &FiniteSemiring) -> Vec<CarrierSet> {
    let others: Vec<Elem> =
        ring.elements().filter(|&x| x != ring.one() && x != ring.zero()).collect();
    assert!(others.len() <= 20, "multiplicative-set sweep limited to small carriers");
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut t = CarrierSet::singleton(ring.one());
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                t.insert(x);
            }
        }
        let closed = t.iter().all(|a| t.iter().all(|b| t.contains(ring.mul(a, b))));
        if closed && !t.contains(ring.zero()) {
            out.push(t);
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// The full ideal lattice of a semiring, with the k-ideals singled out.
/// Both lists are sorted by bitset value and duplicate-free.
pub struct IdealLattice<'s> {
    pub ring: &'s FiniteSemiring,
    pub ideals: Vec<CarrierSet>,
    pub k_ideals: Vec<CarrierSet>,
}

impl<'s> IdealLattice<'s> {
    /// Closes the principal ideals under pairwise ideal sums.
    pub fn compute(ring: &'s FiniteSemiring, budget: &Budget) -> Result<Self> {
        let principals: Vec<CarrierSet> = {
            let mut ps: Vec<CarrierSet> =
                ring.elements().map(|x| generate_ideal(ring, &CarrierSet::singleton(x))).collect();
            ps.sort();
            ps.dedup();
            ps
        };
        let mut found: std::collections::BTreeSet<CarrierSet> =
            principals.iter().copied().collect();
        let mut frontier: Vec<CarrierSet> = principals.clone();
        while let Some(a) = frontier.pop() {
            for p in &principals {
                budget.charge(ring.size() as u64, "enumerate_ideals")?;
                let joined = ideal_sum(ring, &a, p);
                if found.insert(joined) {
                    frontier.push(joined);
                }
            }
        }
        let ideals: Vec<CarrierSet> = found.into_iter().collect();
        let k_ideals: Vec<CarrierSet> =
            ideals.iter().copied().filter(|i| is_k_ideal(ring, i)).collect();
        Ok(IdealLattice { ring, ideals, k_ideals })
    }

    pub fn is_proper(&self, i: &CarrierSet) -> bool {
        i.len() != self.ring.size()
    }

    pub fn unit_ideal(&self) -> CarrierSet {
        self.ring.carrier()
    }

    pub fn zero_ideal(&self) -> CarrierSet {
        generate_ideal(self.ring, &CarrierSet::EMPTY)
    }

    /// k-ideals strictly between enumeration and classification get asked
    /// for constantly; keep the membership test cheap.
    pub fn contains_k_ideal(&self, i: &CarrierSet) -> bool {
        self.k_ideals.binary_search(i).is_ok()
    }
}

/// Exhaustive `2^n` subset scan; the independance oracle for
/// [`IdealLattice::compute`]. Only sensible for small carriers.
pub fn enumerate_ideals_exhaustive(
    ring: &FiniteSemiring,
    budget: &Budget,
) -> Result<Vec<CarrierSet>> {
    let n = ring.size();
    if n > 20 {
        return Err(Error::Param(format!("exhaustive ideal scan limited to |S| <= 20, got {n}")));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        budget.charge(n as u64, "enumerate_ideals_exhaustive")?;
        let mut s = CarrierSet::EMPTY;
        for i in 0..n {
            if mask >> i & 1 == 1 {
                s.insert(i as Elem);
            }
        }
        if is_ideal(ring, &s) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Radical and Krull-style maximality
// ---------------------------------------------------------------------------

/// Ideal-quantified k-primeness: proper k-ideal with `AB ⊆ I` forcing
/// `A ⊆ I` or `B ⊆ I` over k-ideal pairs.
pub fn is_k_prime_quantified(lat: &IdealLattice, i: &CarrierSet) -> bool {
    if !lat.contains_k_ideal(i) || !lat.is_proper(i) {
        return false;
    }
    for a in &lat.k_ideals {
        for b in &lat.k_ideals {
            if ideal_product(lat.ring, a, b).is_subset(i) && !a.is_subset(i) && !b.is_subset(i) {
                return false;
            }
        }
    }
    true
}

/// k-radical: intersection of the k-prime ideals containing `I`; the empty
/// intersection is the whole semiring (an annotated convention).
pub fn k_radical(lat: &IdealLattice, i: &CarrierSet) -> CarrierSet {
    assert!(lat.contains_k_ideal(i), "k_radical requires a k-ideal");
    k_radical_of(lat, i)
}

/// Same intersection for an arbitrary ideal; the radical laws quantify
/// over products of k-ideals, which need not be k themselves.
pub fn k_radical_of(lat: &IdealLattice, i: &CarrierSet) -> CarrierSet {
    assert!(is_ideal(lat.ring, i), "k_radical_of requires an ideal");
    let mut out = lat.unit_ideal();
    for p in &lat.k_ideals {
        if i.is_subset(p) && is_k_prime_quantified(lat, p) {
            out = out.intersection(p);
        }
    }
    out
}

/// All k-ideals disjoint from `T` that are maximal with that property.
/// Rejects `0 ∈ T`, where every k-ideal would meet `T`.
pub fn maximal_k_ideals_disjoint_from(
    lat: &IdealLattice,
    t: &MultSet,
) -> Result<Vec<CarrierSet>> {
    assert_same_ambient(lat.ring, t.ring);
    if t.members.contains(lat.ring.zero()) {
        return Err(Error::Degenerate(
            "multiplicative set contains 0, which lies in every ideal".into(),
        ));
    }
    let disjoint: Vec<CarrierSet> =
        lat.k_ideals.iter().copied().filter(|i| i.is_disjoint(&t.members)).collect();
    Ok(disjoint
        .iter()
        .copied()
        .filter(|i| !disjoint.iter().any(|j| i.is_proper_subset(j)))
        .collect())
}

// ---------------------------------------------------------------------------
// Lattice profile
// ---------------------------------------------------------------------------

/// Shape of the ideal lattice `(Id(S), +, ∩)` of one semiring.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LatticeProfile {
    pub ideal_count: usize,
    pub k_ideal_count: usize,
    pub modular: bool,
    pub distributive: bool,
    pub subtractive: bool,
    pub strongly_subtractive: bool,
    pub arithmetic: bool,
}

/// Exhaustive triple checks over the enumerated ideal lattice, plus the
/// principal-triple criterion for arithmeticity.
pub fn lattice_analysis(lat: &IdealLattice, budget: &Budget) -> Result<LatticeProfile> {
    let ring = lat.ring;
    let ideals = &lat.ideals;
    let mut modular = true;
    let mut distributive = true;
    for a in ideals {
        for b in ideals {
            for c in ideals {
                budget.charge(ring.size() as u64, "lattice_analysis")?;
                let sum_bc = ideal_sum(ring, b, c);
                if a.intersection(&sum_bc)
                    != ideal_sum(ring, &a.intersection(b), &a.intersection(c))
                {
                    distributive = false;
                }
                // Modular law: A ⊆ C gives A + (B ∩ C) = (A + B) ∩ C.
                if a.is_subset(c)
                    && ideal_sum(ring, a, &b.intersection(c)) != ideal_sum(ring, a, b).intersection(c)
                {
                    modular = false;
                }
            }
        }
    }

    Ok(LatticeProfile {
        ideal_count: ideals.len(),
        k_ideal_count: lat.k_ideals.len(),
        modular,
        distributive,
        subtractive: ideals.iter().all(|i| lat.contains_k_ideal(i)),
        strongly_subtractive: ideals.iter().all(|i| is_strong_ideal(ring, i)),
        arithmetic: distributive,
    })
}

/// The identity `<a> ∩ (<b> + <c>) = (<a> ∩ <b>) + (<a> ∩ <c>)` over all
/// element triples; equivalent to arithmeticity of the ideal lattice and
/// computed independently of it.
pub fn arithmetic_principal_criterion(ring: &FiniteSemiring) -> bool {
    let principal: Vec<CarrierSet> =
        ring.elements().map(|x| generate_ideal(ring, &CarrierSet::singleton(x))).collect();
    for a in ring.elements() {
        for b in ring.elements() {
            for c in ring.elements() {
                let (pa, pb, pc) =
                    (&principal[a as usize], &principal[b as usize], &principal[c as usize]);
                let lhs = pa.intersection(&ideal_sum(ring, pb, pc));
                let rhs = ideal_sum(ring, &pa.intersection(pb), &pa.intersection(pc));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// k-ideals of an additively idempotent semiring are exactly the ideals
/// that are downward closed in the natural order.
pub fn is_downward_closed(ring: &FiniteSemiring, ord: &NaturalOrder, a: &CarrierSet) -> bool {
    a.iter().all(|x| ring.elements().all(|y| !ord.leq(y, x) || a.contains(y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{
        make_boolean, make_chain_lattice, make_product, make_truncated_nat, natural_order,
    };

    fn b1xb1() -> FiniteSemiring {
        let b1 = make_boolean();
        make_product(&b1, &b1).unwrap()
    }

    #[test]
    fn generate_ideal_examples() {
        let n2 = make_truncated_nat(2).unwrap();
        assert_eq!(generate_ideal(&n2, &CarrierSet::singleton(2)), CarrierSet::from_slice(&[0, 2]));
        assert_eq!(generate_ideal(&n2, &CarrierSet::EMPTY), CarrierSet::singleton(0));
        let c3 = make_chain_lattice(3).unwrap();
        assert_eq!(generate_ideal(&c3, &CarrierSet::singleton(1)), CarrierSet::from_slice(&[0, 1]));
    }

    #[test]
    fn k_ideal_examples() {
        let n2 = make_truncated_nat(2).unwrap();
        let a = CarrierSet::from_slice(&[0, 2]);
        assert!(is_ideal(&n2, &a));
        assert!(!is_k_ideal(&n2, &a), "1 + 2 = 2 with 2 in A but 1 outside");
        let c3 = make_chain_lattice(3).unwrap();
        assert!(is_strong_ideal(&c3, &CarrierSet::from_slice(&[0, 1])));
        // Zero ideal of a conic semiring is a k-ideal.
        assert!(is_k_ideal(&n2, &CarrierSet::singleton(0)));
    }

    #[test]
    fn k_closure_examples() {
        let n2 = make_truncated_nat(2).unwrap();
        let i = CarrierSet::from_slice(&[0, 2]);
        assert_eq!(k_closure(&n2, &i), n2.carrier());
        let c3 = make_chain_lattice(3).unwrap();
        let j = CarrierSet::from_slice(&[0, 1]);
        assert_eq!(k_closure(&c3, &j), j, "already a k-ideal");
        assert_eq!(k_closure(&c3, &k_closure(&c3, &j)), k_closure(&c3, &j));
    }

    #[test]
    fn saturation_examples() {
        let c3 = make_chain_lattice(3).unwrap();
        let j = CarrierSet::from_slice(&[0, 1]);
        assert_eq!(saturated_closure(&c3, &j).unwrap(), j);
        let b1 = make_boolean();
        assert_eq!(
            saturated_closure(&b1, &CarrierSet::singleton(0)).unwrap(),
            CarrierSet::singleton(0)
        );
        let p = b1xb1();
        let gen = generate_ideal(&p, &CarrierSet::singleton(2)); // (1,0) encodes to 2
        assert_eq!(saturated_closure(&p, &gen).unwrap(), CarrierSet::from_slice(&[0, 2]));
        let n2 = make_truncated_nat(2).unwrap();
        assert!(saturated_closure(&n2, &CarrierSet::singleton(0)).is_err());
    }

    #[test]
    fn product_of_coordinate_ideals_vanishes() {
        let p = b1xb1();
        let i = generate_ideal(&p, &CarrierSet::singleton(2)); // <(1,0)>
        let j = generate_ideal(&p, &CarrierSet::singleton(1)); // <(0,1)>
        assert_eq!(ideal_product(&p, &i, &j), CarrierSet::singleton(0));
    }

    #[test]
    fn intersection_matches_bruteforce_membership() {
        let n5 = make_truncated_nat(5).unwrap();
        let i2 = generate_ideal(&n5, &CarrierSet::singleton(2));
        let i3 = generate_ideal(&n5, &CarrierSet::singleton(3));
        let meet = ideal_intersection(&i2, &i3);
        for x in n5.elements() {
            assert_eq!(meet.contains(x), i2.contains(x) && i3.contains(x));
        }
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        let budget = Budget::default();
        for ring in [
            make_boolean(),
            make_truncated_nat(2).unwrap(),
            make_chain_lattice(3).unwrap(),
            b1xb1(),
        ] {
            let lat = IdealLattice::compute(&ring, &budget).unwrap();
            let brute = enumerate_ideals_exhaustive(&ring, &budget).unwrap();
            assert_eq!(lat.ideals, brute, "closure enumeration differs on {}", ring.name());
        }
    }

    #[test]
    fn ideal_counts() {
        let budget = Budget::default();
        let n2 = make_truncated_nat(2).unwrap();
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        assert_eq!(lat.ideals.len(), 3);
        assert_eq!(lat.k_ideals.len(), 2);

        let c3 = make_chain_lattice(3).unwrap();
        let lat = IdealLattice::compute(&c3, &budget).unwrap();
        assert_eq!(lat.ideals.len(), 3);
        assert_eq!(lat.k_ideals.len(), 3);

        let p = b1xb1();
        let lat = IdealLattice::compute(&p, &budget).unwrap();
        assert_eq!(lat.ideals.len(), 4, "zero, two coordinate ideals, unit");
    }

    #[test]
    fn radical_examples() {
        let budget = Budget::default();
        let c3 = make_chain_lattice(3).unwrap();
        let lat = IdealLattice::compute(&c3, &budget).unwrap();
        let zero = CarrierSet::singleton(0);
        assert_eq!(k_radical(&lat, &zero), zero, "zero is k-prime in a chain");
        let n2 = make_truncated_nat(2).unwrap();
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        assert_eq!(k_radical(&lat, &CarrierSet::singleton(0)), CarrierSet::singleton(0));
    }

    #[test]
    fn krull_maximal_disjoint() {
        let budget = Budget::default();
        let n2 = make_truncated_nat(2).unwrap();
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        let t = MultSet::new(&n2, CarrierSet::singleton(1)).unwrap();
        let maxes = maximal_k_ideals_disjoint_from(&lat, &t).unwrap();
        assert_eq!(maxes, vec![CarrierSet::singleton(0)]);
        assert!(is_k_prime_quantified(&lat, &maxes[0]));

        let c3 = make_chain_lattice(3).unwrap();
        let lat = IdealLattice::compute(&c3, &budget).unwrap();
        let t = MultSet::new(&c3, CarrierSet::singleton(2)).unwrap();
        let maxes = maximal_k_ideals_disjoint_from(&lat, &t).unwrap();
        assert_eq!(maxes, vec![CarrierSet::from_slice(&[0, 1])]);

        let p = b1xb1();
        let lat = IdealLattice::compute(&p, &budget).unwrap();
        let t = MultSet::new(&p, CarrierSet::singleton(3)).unwrap();
        let maxes = maximal_k_ideals_disjoint_from(&lat, &t).unwrap();
        assert_eq!(maxes.len(), 2, "the two coordinate ideals");
        for m in &maxes {
            assert!(is_k_prime_quantified(&lat, m));
        }

        let mut with_zero = CarrierSet::singleton(1);
        with_zero.insert(0);
        let t = MultSet::new(&n2, with_zero).unwrap();
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        assert!(matches!(maximal_k_ideals_disjoint_from(&lat, &t), Err(Error::Degenerate(_))));
    }

    #[test]
    fn lattice_profiles() {
        let budget = Budget::default();
        let c3 = make_chain_lattice(3).unwrap();
        let lat = IdealLattice::compute(&c3, &budget).unwrap();
        let profile = lattice_analysis(&lat, &budget).unwrap();
        assert!(profile.strongly_subtractive);
        assert!(profile.distributive);
        assert!(profile.modular);

        let p = b1xb1();
        let lat = IdealLattice::compute(&p, &budget).unwrap();
        let profile = lattice_analysis(&lat, &budget).unwrap();
        assert!(profile.distributive, "2x2 Boolean ideal lattice");

        let n2 = make_truncated_nat(2).unwrap();
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        let profile = lattice_analysis(&lat, &budget).unwrap();
        assert!(!profile.subtractive);
        assert_eq!(profile.arithmetic, profile.distributive);
    }

    #[test]
    fn principal_criterion_decides_arithmeticity() {
        let budget = Budget::default();
        for ring in [
            make_boolean(),
            make_truncated_nat(3).unwrap(),
            make_chain_lattice(4).unwrap(),
            b1xb1(),
            crate::semiring::make_zn_ring(6).unwrap(),
        ] {
            let lat = IdealLattice::compute(&ring, &budget).unwrap();
            let profile = lattice_analysis(&lat, &budget).unwrap();
            assert_eq!(
                profile.distributive,
                arithmetic_principal_criterion(&ring),
                "criterion diverges on {}",
                ring.name()
            );
        }
    }

    #[test]
    fn downward_closure_characterizes_k_ideals() {
        let budget = Budget::default();
        for ring in [make_boolean(), make_chain_lattice(4).unwrap(), b1xb1()] {
            let ord = natural_order(&ring).unwrap();
            let lat = IdealLattice::compute(&ring, &budget).unwrap();
            for i in &lat.ideals {
                assert_eq!(
                    is_k_ideal(&ring, i),
                    is_downward_closed(&ring, &ord, i),
                    "on {} at {i}",
                    ring.name()
                );
            }
        }
    }

    #[test]
    fn colon_is_k_when_numerator_is_k() {
        let budget = Budget::default();
        for ring in [make_chain_lattice(4).unwrap(), b1xb1(), make_truncated_nat(3).unwrap()] {
            let lat = IdealLattice::compute(&ring, &budget).unwrap();
            for i in &lat.k_ideals {
                for j in &lat.ideals {
                    let q = colon_ideal(&ring, i, j);
                    assert!(is_k_ideal(&ring, &q), "colon of k-ideal must be k");
                    assert!(i.is_subset(&q));
                }
            }
        }
    }
}
