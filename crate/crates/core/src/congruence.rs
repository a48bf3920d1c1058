//! Congruences on finite semirings: enumeration, Bourne and excellent
//! congruences, the k-congruence correspondence, and the congruence-side
//! predicates (prime, k-maximal, irreducible, excellent).
//!
//! A congruence is stored as a class-index array with canonical
//! minimum-representative numbering, so congruence equality is array
//! equality. Enumeration closes the principal congruences under joins;
//! every congruence of a finite algebra is a join of principal ones, so
//! the closure is exact. A brute-force partition scan doubles as the
//! cross-check oracle on small carriers.
//!
//! Unlike in rings, congruences carry strictly more data than ideals. On
//! the natural numbers, identifying `x` and `y` whenever both exceed some
//! bound and agree modulo a fixed `a` is a congruence whose zero class is
//! just `{0}` — the congruence cannot be recovered from an ideal. The
//! k-congruences are exactly the ones of the form `K_I` that an ideal does
//! determine, and they are what this module singles out.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, is_k_ideal, saturated_closure, IdealLattice};
use crate::semiring::FiniteSemiring;
use crate::set::{CarrierSet, Elem};

/// A partition of the carrier compatible with both operations.
#[derive(Clone)]
pub struct Congruence<'s> {
    pub ring: &'s FiniteSemiring,
    /// Canonical class index of each element (minimum-representative
    /// numbering: class labels appear in first-occurrence order).
    pub class_of: Vec<Elem>,
}

impl PartialEq for Congruence<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.class_of == other.class_of
    }
}

impl Eq for Congruence<'_> {}

impl PartialOrd for Congruence<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Congruence<'_> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.class_of.cmp(&other.class_of)
    }
}

fn canonicalize(raw: &[usize]) -> Vec<Elem> {
    let mut relabel: Vec<Option<Elem>> = vec![None; raw.len()];
    let mut next = 0u8;
    let mut out = Vec::with_capacity(raw.len());
    for &c in raw {
        let label = match relabel[c] {
            Some(l) => l,
            None => {
                let l = next;
                relabel[c] = Some(l);
                next += 1;
                l
            }
        };
        out.push(label);
    }
    out
}

impl<'s> Congruence<'s> {
    pub fn identity(ring: &'s FiniteSemiring) -> Self {
        Congruence { ring, class_of: ring.elements().collect() }
    }

    pub fn total(ring: &'s FiniteSemiring) -> Self {
        Congruence { ring, class_of: vec![0; ring.size()] }
    }

    fn from_raw(ring: &'s FiniteSemiring, raw: &[usize]) -> Self {
        Congruence { ring, class_of: canonicalize(raw) }
    }

    #[inline]
    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x as usize] == self.class_of[y as usize]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    pub fn is_total(&self) -> bool {
        self.num_classes() == 1
    }

    /// Compatibility with both operations, checked from the definition.
    pub fn is_congruence(&self) -> bool {
        let ring = self.ring;
        for x in ring.elements() {
            for y in ring.elements() {
                if !self.related(x, y) {
                    continue;
                }
                for z in ring.elements() {
                    if !self.related(ring.add(x, z), ring.add(y, z))
                        || !self.related(ring.mul(x, z), ring.mul(y, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.ring.size();
        (0..n).all(|x| {
            (0..n).all(|y| {
                !self.related(x as Elem, y as Elem) || other.related(x as Elem, y as Elem)
            })
        })
    }

    /// Meet: common refinement (intersection of the relations).
    pub fn meet(&self, other: &Congruence<'s>) -> Congruence<'s> {
        let n = self.ring.size();
        let raw: Vec<usize> = (0..n)
            .map(|x| self.class_of[x] as usize * n + other.class_of[x] as usize)
            .collect();
        // Compress the pair labels.
        let mut seen: Vec<usize> = Vec::new();
        let compressed: Vec<usize> = raw
            .iter()
            .map(|&p| match seen.iter().position(|&q| q == p) {
                Some(i) => i,
                None => {
                    seen.push(p);
                    seen.len() - 1
                }
            })
            .collect();
        Congruence::from_raw(self.ring, &compressed)
    }

    /// Join: transitive closure of the union, which is again compatible.
    pub fn join(&self, other: &Congruence<'s>) -> Congruence<'s> {
        let n = self.ring.size();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in 0..n {
                if self.class_of[x] == self.class_of[y] || other.class_of[x] == other.class_of[y] {
                    uf.union(x, y);
                }
            }
        }
        let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        let out = Congruence::from_raw(self.ring, &raw);
        assert!(out.is_congruence(), "join of congruences must be a congruence");
        out
    }

    /// The zero class `{ x | x ~ 0 }`.
    pub fn zero_class(&self) -> CarrierSet {
        let z = self.class_of[self.ring.zero() as usize];
        self.ring.elements().filter(|&x| self.class_of[x as usize] == z).collect()
    }
}

impl std::fmt::Debug for Congruence<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Congruence{:?}", self.class_of)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        // Attach the larger root to the smaller so representatives stay
        // minimal.
        let (lo, hi) = (rx.min(ry), rx.max(ry));
        self.parent[hi] = lo;
        true
    }
}

// ---------------------------------------------------------------------------
// Distinguished congruences
// ---------------------------------------------------------------------------

/// Bourne congruence `K_I`: `x ~ y` iff `x + i1 = y + i2` with both
/// witnesses in the ideal.
pub fn bourne_congruence<'s>(ring: &'s FiniteSemiring, ideal: &CarrierSet) -> Congruence<'s> {
    assert!(is_ideal(ring, ideal), "Bourne congruence requires an ideal");
    let n = ring.size();
    let mut uf = UnionFind::new(n);
    for x in ring.elements() {
        for y in ring.elements() {
            let related = ideal.iter().any(|i1| {
                let lhs = ring.add(x, i1);
                ideal.iter().any(|i2| lhs == ring.add(y, i2))
            });
            if related {
                uf.union(x as usize, y as usize);
            }
        }
    }
    let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let out = Congruence::from_raw(ring, &raw);
    assert!(out.is_congruence(), "Bourne relation must be a congruence");
    out
}

/// Excellent congruence `ρ_J`: `x ~ y` iff `x + z = y + z` for some `z` in
/// the ideal. Defined here in the additively idempotent setting.
pub fn excellent_congruence<'s>(
    ring: &'s FiniteSemiring,
    ideal: &CarrierSet,
) -> Result<Congruence<'s>> {
    if !ring.is_additively_idempotent() {
        return Err(Error::NotIdempotent { op: "excellent_congruence", name: ring.name().into() });
    }
    assert!(is_ideal(ring, ideal), "excellent congruence requires an ideal");
    let n = ring.size();
    let mut uf = UnionFind::new(n);
    for x in ring.elements() {
        for y in ring.elements() {
            if ideal.iter().any(|z| ring.add(x, z) == ring.add(y, z)) {
                uf.union(x as usize, y as usize);
            }
        }
    }
    let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let out = Congruence::from_raw(ring, &raw);
    assert!(out.is_congruence(), "excellent relation must be a congruence");
    Ok(out)
}

/// Principal congruence generated by identifying `a` and `b`: worklist
/// closure under the unary polynomials `_ + z` and `_ * z`.
pub fn principal_congruence<'s>(ring: &'s FiniteSemiring, a: Elem, b: Elem) -> Congruence<'s> {
    let n = ring.size();
    let mut uf = UnionFind::new(n);
    let mut work = vec![(a, b)];
    while let Some((x, y)) = work.pop() {
        if !uf.union(x as usize, y as usize) {
            continue;
        }
        for z in ring.elements() {
            work.push((ring.add(x, z), ring.add(y, z)));
            work.push((ring.mul(x, z), ring.mul(y, z)));
        }
    }
    let raw: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let out = Congruence::from_raw(ring, &raw);
    debug_assert!(out.is_congruence());
    out
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All congruences: the principal ones closed under joins, plus the
/// identity. Sorted by class-index array.
pub fn enumerate_congruences<'s>(
    ring: &'s FiniteSemiring,
    budget: &Budget,
) -> Result<Vec<Congruence<'s>>> {
    let mut principals: Vec<Congruence> = Vec::new();
    for a in ring.elements() {
        for b in ring.elements() {
            if a < b {
                budget.charge(ring.size() as u64, "enumerate_congruences")?;
                principals.push(principal_congruence(ring, a, b));
            }
        }
    }
    principals.push(Congruence::identity(ring));
    principals.sort();
    principals.dedup();

    let mut found: std::collections::BTreeSet<Vec<Elem>> =
        principals.iter().map(|c| c.class_of.clone()).collect();
    let mut frontier: Vec<Congruence> = principals.clone();
    while let Some(c) = frontier.pop() {
        for p in &principals {
            budget.charge(ring.size() as u64 * ring.size() as u64, "enumerate_congruences")?;
            let joined = c.join(p);
            if found.insert(joined.class_of.clone()) {
                frontier.push(joined);
            }
        }
    }
    Ok(found.into_iter().map(|class_of| Congruence { ring, class_of }).collect())
}

/// Brute-force oracle: every partition of the carrier (restricted growth
/// strings), filtered by compatibility. Exponential; for cross-checks on
/// small carriers only.
pub fn enumerate_congruences_bruteforce<'s>(
    ring: &'s FiniteSemiring,
    budget: &Budget,
) -> Result<Vec<Congruence<'s>>> {
    let n = ring.size();
    if n > 8 {
        return Err(Error::Param(format!("partition scan limited to |S| <= 8, got {n}")));
    }
    let mut out = Vec::new();
    let mut string = vec![0usize; n];
    fn rec<'s>(
        ring: &'s FiniteSemiring,
        string: &mut Vec<usize>,
        pos: usize,
        max_used: usize,
        out: &mut Vec<Congruence<'s>>,
        budget: &Budget,
    ) -> Result<()> {
        if pos == string.len() {
            budget.charge(string.len() as u64 * string.len() as u64, "congruence partition scan")?;
            let c = Congruence::from_raw(ring, string);
            if c.is_congruence() {
                out.push(c);
            }
            return Ok(());
        }
        for label in 0..=max_used + 1 {
            string[pos] = label;
            rec(ring, string, pos + 1, max_used.max(label), out, budget)?;
        }
        Ok(())
    }
    string[0] = 0;
    rec(ring, &mut string, 1, 0, &mut out, budget)?;
    out.sort();
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Profiles and predicates
// ---------------------------------------------------------------------------

/// Precomputed congruence universe of one semiring: the full congruence
/// list, the Bourne congruence of every ideal, and (when idempotent) the
/// excellent congruence of every ideal.
pub struct CongruenceWorld<'s> {
    pub ring: &'s FiniteSemiring,
    pub all: Vec<Congruence<'s>>,
    /// `(I, K_I)` for every enumerated ideal, in ideal order.
    pub bourne: Vec<(CarrierSet, Congruence<'s>)>,
    /// `(J, ρ_J)` for every enumerated ideal; empty if not idempotent.
    pub excellent: Vec<(CarrierSet, Congruence<'s>)>,
    /// The k-congruences among `all` (deduplicated, sorted).
    pub k_congruences: Vec<Congruence<'s>>,
}

impl<'s> CongruenceWorld<'s> {
    pub fn compute(lat: &IdealLattice<'s>, budget: &Budget) -> Result<Self> {
        let ring = lat.ring;
        let all = enumerate_congruences(ring, budget)?;
        let bourne: Vec<(CarrierSet, Congruence)> =
            lat.ideals.iter().map(|i| (*i, bourne_congruence(ring, i))).collect();
        let excellent: Vec<(CarrierSet, Congruence)> = if ring.is_additively_idempotent() {
            lat.ideals.iter().map(|j| (*j, excellent_congruence(ring, j).unwrap())).collect()
        } else {
            Vec::new()
        };
        let mut k_congruences: Vec<Congruence> =
            bourne.iter().map(|(_, c)| c.clone()).collect();
        k_congruences.sort();
        k_congruences.dedup();
        // Every K_I is a congruence, so it must appear in the full list.
        for c in &k_congruences {
            assert!(
                all.iter().any(|d| d.class_of == c.class_of),
                "Bourne congruence missing from the enumeration on {}",
                ring.name()
            );
        }
        Ok(CongruenceWorld { ring, all, bourne, excellent, k_congruences })
    }

    /// Least ideal (in bitset order) whose Bourne congruence is `theta`.
    pub fn bourne_witness(&self, theta: &Congruence) -> Option<CarrierSet> {
        self.bourne.iter().find(|(_, c)| c.class_of == theta.class_of).map(|(i, _)| *i)
    }

    pub fn excellent_witness(&self, theta: &Congruence) -> Option<CarrierSet> {
        self.excellent.iter().find(|(_, c)| c.class_of == theta.class_of).map(|(j, _)| *j)
    }

    pub fn is_k_congruence(&self, theta: &Congruence) -> bool {
        self.k_congruences.iter().any(|c| c.class_of == theta.class_of)
    }
}

/// Congruence-side classification.
#[derive(Clone, Debug)]
pub struct CongruenceProfile {
    /// `Some(I)` when the congruence equals `K_I`; the least such ideal in
    /// bitset order.
    pub k_congruence_witness: Option<CarrierSet>,
    pub is_k_congruence: bool,
    /// Proper and `(ab) ~ 0` forces `a ~ 0` or `b ~ 0`.
    pub is_prime: bool,
    pub is_k_maximal: bool,
    /// Irreducible among k-congruences.
    pub is_irreducible: bool,
    /// `Some(J)` when the congruence equals `ρ_J` (idempotent case only).
    pub excellent_witness: Option<CarrierSet>,
    pub is_excellent: bool,
}

/// Computes the profile of `theta` against a precomputed congruence world.
pub fn congruence_profile<'s>(
    theta: &Congruence<'s>,
    world: &CongruenceWorld<'s>,
) -> CongruenceProfile {
    let ring = theta.ring;
    let k_congruence_witness = world.bourne_witness(theta);
    let is_k_congruence = k_congruence_witness.is_some();

    let zero = ring.zero();
    let is_prime = !theta.is_total()
        && ring.elements().all(|a| {
            ring.elements().all(|b| {
                !theta.related(ring.mul(a, b), zero)
                    || theta.related(a, zero)
                    || theta.related(b, zero)
            })
        });

    let is_k_maximal = is_k_congruence
        && !theta.is_total()
        && world
            .k_congruences
            .iter()
            .all(|c| !theta.refines(c) || c.class_of == theta.class_of || c.is_total());

    let is_irreducible = is_k_congruence
        && world.k_congruences.iter().all(|r1| {
            world.k_congruences.iter().all(|r2| {
                r1.meet(r2).class_of != theta.class_of
                    || r1.class_of == theta.class_of
                    || r2.class_of == theta.class_of
            })
        });

    let excellent_witness = world.excellent_witness(theta);

    CongruenceProfile {
        k_congruence_witness,
        is_k_congruence,
        is_prime,
        is_k_maximal,
        is_irreducible,
        is_excellent: excellent_witness.is_some(),
        excellent_witness,
    }
}

// ---------------------------------------------------------------------------
// Saturation and absolute primeness
// ---------------------------------------------------------------------------

/// `J` equals its saturation.
pub fn is_saturated(ring: &FiniteSemiring, j: &CarrierSet) -> Result<bool> {
    Ok(saturated_closure(ring, j)? == *j)
}

/// Absolutely k-prime: proper k-ideal with `(ab) ρ_I (ac)` forcing
/// `a ∈ Ī` or `b ρ_I c`. Additively idempotent setting.
pub fn is_absolutely_k_prime(ring: &FiniteSemiring, i: &CarrierSet) -> Result<bool> {
    if !ring.is_additively_idempotent() {
        return Err(Error::NotIdempotent { op: "is_absolutely_k_prime", name: ring.name().into() });
    }
    assert!(i.len() != ring.size(), "absolute primeness is defined for proper ideals");
    assert!(is_k_ideal(ring, i), "absolute k-primeness requires a k-ideal");
    let rho = excellent_congruence(ring, i)?;
    let bar = saturated_closure(ring, i)?;
    for a in ring.elements() {
        for b in ring.elements() {
            for c in ring.elements() {
                if rho.related(ring.mul(a, b), ring.mul(a, c))
                    && !bar.contains(a)
                    && !rho.related(b, c)
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
