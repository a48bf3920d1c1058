//! Symbolic models of two infinite semirings: the arithmetic semiring
//! `(N, +, .)` with its ideals `dN`, and the min-plus semiring on
//! `N ∪ {inf}` with up-set ideals.
//!
//! Classification is by closed-form generator arithmetic, and every closed
//! form is cross-checked against a bounded brute-force oracle that
//! evaluates the set-level definitions on an initial segment. The oracle
//! is sound for refutation and used only as a falsifier, never as a proof
//! of an existential claim.
//!
//! Ideal arithmetic in `N` relies on every k-ideal of `N` being of the
//! form `dN`; that assumption is confirmed exhaustively for ideals
//! generated by small subsets (see [`check_k_ideals_are_principal`]) and
//! labelled in reports.

use crate::classify::{ClassProfile, Flag};
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Elementary number theory (deterministic trial division throughout)
// ---------------------------------------------------------------------------

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization by trial division; generators stay small.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorization needs n >= 1");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                e += 1;
                n /= p;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// `p^a` with `a >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Product of the distinct prime divisors; `rad(0) = 0`, `rad(1) = 1`.
pub fn rad(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n.max(1)).iter().map(|&(p, _)| p).product::<u64>().max(1)
}

// ---------------------------------------------------------------------------
// The arithmetic semiring (N, +, .)
// ---------------------------------------------------------------------------

/// The ideal `dN`; `d = 0` is the zero ideal, `d = 1` is all of `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NatIdeal {
    pub generator: u64,
}

impl NatIdeal {
    pub fn new(generator: u64) -> Self {
        NatIdeal { generator }
    }

    pub fn contains(&self, x: u64) -> bool {
        if self.generator == 0 {
            x == 0
        } else {
            x % self.generator == 0
        }
    }

    pub fn is_proper(&self) -> bool {
        self.generator != 1
    }
}

/// Generator arithmetic for the ideal operations in `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NatOps {
    /// `C_k(dN + eN) = gcd(d, e) N`.
    pub sum_k_closure: u64,
    /// `(dN)(eN) = de N`.
    pub product: u64,
    /// `dN ∩ eN = lcm(d, e) N`.
    pub intersection: u64,
}

pub fn nat_ops(i: NatIdeal, j: NatIdeal) -> NatOps {
    NatOps {
        sum_k_closure: gcd(i.generator, j.generator),
        product: i.generator * j.generator,
        intersection: lcm(i.generator, j.generator),
    }
}

/// `R_k(dN) = rad(d) N`.
pub fn nat_radical(i: NatIdeal) -> NatIdeal {
    NatIdeal::new(rad(i.generator))
}

/// Closed-form classification of `dN`. Every ideal of the form `dN` is a
/// k-ideal, so the plain and k-flags coincide except for `maximal`, which
/// quantifies over all ideals of `N` (for instance `{0} ∪ [d, inf)`
/// strictly separates every proper `dN` from `N`).
pub fn nat_classify(i: NatIdeal) -> ClassProfile {
    let d = i.generator;
    let proper = d != 1;
    let prime = d == 0 || is_prime(d);
    let semiprime = d == 0 || is_squarefree(d);
    let prime_power_like = d == 0 || is_prime_power(d);
    let primary = proper && prime_power_like;
    let k_maximal = is_prime(d);
    let strong = d <= 1;

    let flag = Flag::from_bool;
    ClassProfile {
        ideal: flag(true),
        k_ideal: flag(true),
        strong: flag(strong),
        prime: flag(proper && prime),
        semiprime: flag(semiprime),
        primary: flag(primary),
        irreducible: flag(proper && prime_power_like),
        strongly_irreducible: flag(proper && prime_power_like),
        maximal: flag(false),
        k_prime: flag(proper && prime),
        k_semiprime: flag(semiprime),
        k_primary: flag(primary),
        k_irreducible: flag(proper && prime_power_like),
        k_strongly_irreducible: flag(proper && prime_power_like),
        k_maximal: flag(k_maximal),
        k_cancellation: flag(d >= 1),
        notes: vec![
            format!("generator d = {d}; d=0 is the zero ideal, d=1 is N itself"),
            "plain maximality fails for every dN: {0} ∪ [d, inf) separates it from N".into(),
            "primary exponents take n >= 1".into(),
        ],
    }
}

/// `lcm{x, y} ∈ dN` forces a factor into `dN`, scanned over all pairs in
/// `{1..N}`. Returns the criterion value; the first failing pair, if any,
/// is available through [`nat_lcm_witness`].
pub fn nat_lcm_criterion(i: NatIdeal, sample_bound: u64) -> bool {
    nat_lcm_witness(i, sample_bound).is_none()
}

pub fn nat_lcm_witness(i: NatIdeal, sample_bound: u64) -> Option<(u64, u64)> {
    assert!(sample_bound >= 2);
    for x in 1..=sample_bound {
        for y in 1..=sample_bound {
            if i.contains(lcm(x, y)) && !i.contains(x) && !i.contains(y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Prime-power decomposition `d = ∏ p^a` as the ideals `p^a N`; their
/// intersection is `dN` by the lcm identity, and each factor is k-primary.
pub fn nat_primary_decomposition(i: NatIdeal) -> Vec<NatIdeal> {
    let d = i.generator;
    if d == 0 {
        return vec![NatIdeal::new(0)];
    }
    let parts: Vec<NatIdeal> =
        factorize(d).into_iter().map(|(p, e)| NatIdeal::new(p.pow(e))).collect();
    let meet = parts.iter().fold(1u64, |acc, p| lcm(acc, p.generator));
    assert_eq!(meet, d, "prime-power parts must intersect in dN");
    for p in &parts {
        assert!(nat_classify(*p).k_primary.holds);
    }
    parts
}

/// For a non-zero k-prime `dN` the generator is itself a prime element, so
/// the ideal contains one; vacuously true otherwise. Also re-checks that
/// `dN` is a k-ideal on an initial segment (it is the positive-cone
/// situation: principal ideals are subtractive).
pub fn nat_prime_element_theorems(i: NatIdeal) -> Result<bool> {
    if i.generator == 0 {
        return Err(Error::Param("prime-element statement concerns non-zero ideals".into()));
    }
    let oracle = BoundedOracle::for_generator(i.generator);
    if !oracle.is_k_ideal(i.generator) {
        return Ok(false);
    }
    if nat_classify(i).k_prime.holds {
        Ok(is_prime(i.generator))
    } else {
        Ok(true)
    }
}

/// Unique factorization on an initial segment: every `2 <= n <= bound`
/// factors into primes whose product reproduces `n`, via deterministic
/// trial division. Together with the prime-element property of the
/// k-primes this is the bounded shadow of the UFSD characterization.
pub fn check_unique_factorization(bound: u64) -> bool {
    (2..=bound).all(|n| {
        let f = factorize(n);
        f.iter().all(|&(p, _)| is_prime(p))
            && f.iter().map(|&(p, e)| p.pow(e)).product::<u64>() == n
    })
}

// ---------------------------------------------------------------------------
// Bounded brute-force oracle for (N, +, .)
// ---------------------------------------------------------------------------

/// Evaluates the set-level definitions for `dN` on the initial segment
/// `{0..bound}`. Quantifiers over k-ideals are instantiated with the
/// principal ideals `eN`, which is exact under the verified-principality
/// assumption.
pub struct BoundedOracle {
    pub bound: u64,
}

impl BoundedOracle {
    pub fn new(bound: u64) -> Self {
        BoundedOracle { bound: bound.max(64) }
    }

    /// The falsification-sweep bound `N = 4 d^2`.
    pub fn for_generator(d: u64) -> Self {
        Self::new(4 * d * d)
    }

    pub fn is_k_ideal(&self, d: u64) -> bool {
        let i = NatIdeal::new(d);
        let step = d.max(1);
        for y in (0..=self.bound).step_by(step as usize) {
            if !i.contains(y) {
                continue;
            }
            for x in 0..=self.bound {
                if i.contains(x + y) && !i.contains(x) {
                    return false;
                }
            }
        }
        true
    }

    /// `ab ∈ dN` forces a factor in, over the segment. For `d` not
    /// dividing `a` the products `ab ∈ dN` are exactly the `b` divisible
    /// by `d / gcd(d, a)`, so the least such `b` decides the pair.
    pub fn k_prime(&self, d: u64) -> bool {
        if d == 1 {
            return false; // improper
        }
        if d == 0 {
            return true; // ab = 0 forces a = 0 or b = 0 in N
        }
        for a in 0..=self.bound {
            if a % d == 0 {
                continue;
            }
            let g = gcd(d, a);
            if g > 1 {
                // b = d/g <= bound witnesses d | ab with neither factor in.
                return false;
            }
        }
        true
    }

    pub fn k_semiprime(&self, d: u64) -> bool {
        if d == 0 {
            return true;
        }
        (0..=self.bound).all(|a| a * a % d != 0 || a % d == 0)
    }

    pub fn k_primary(&self, d: u64) -> bool {
        if d == 1 {
            return false;
        }
        if d == 0 {
            return true; // ab = 0 with a != 0 gives b = 0, and 0 ∈ 0N
        }
        // Per residue class r mod d: does some power of r vanish mod d?
        let nilpotent: Vec<bool> = (0..d)
            .map(|r| {
                let mut acc = r % d;
                for _ in 0..64 {
                    if acc == 0 {
                        return true;
                    }
                    acc = acc * r % d;
                }
                false
            })
            .collect();
        for a in 0..=self.bound {
            if a % d == 0 {
                continue;
            }
            let m = d / gcd(d, a);
            for b in (0..=self.bound).step_by(m as usize) {
                if a * b % d == 0 && !nilpotent[(b % d) as usize] {
                    return false;
                }
            }
        }
        true
    }

    /// `lcm(a, b) ∈ dN` forces a factor in. A pair with neither factor in
    /// exists iff some `a <= bound` outside `dN` fully covers one prime
    /// power of `d`; the complementary part of `d` then serves as `b`.
    pub fn k_strongly_irreducible(&self, d: u64) -> bool {
        if d == 1 {
            return false;
        }
        if d == 0 {
            return true; // lcm(a, b) = 0 forces a factor to be 0
        }
        let primes = factorize(d);
        for a in 1..=self.bound {
            if a % d == 0 {
                continue;
            }
            if primes.iter().any(|&(p, e)| a % p.pow(e) == 0) {
                return false;
            }
        }
        true
    }

    /// `eN ∩ fN = dN` forces `e = d` or `f = d`, over principal ideals.
    pub fn k_irreducible(&self, d: u64) -> bool {
        if d == 1 {
            return false;
        }
        if d == 0 {
            return true; // lcm(e, f) = 0 forces e = 0 or f = 0
        }
        for e in 1..=d {
            if d % e != 0 {
                continue;
            }
            for f in 1..=d {
                if d % f != 0 {
                    continue;
                }
                if lcm(e, f) == d && e != d && f != d {
                    return false;
                }
            }
        }
        true
    }

    /// No principal k-ideal strictly between `dN` and `N`.
    pub fn k_maximal(&self, d: u64) -> bool {
        if d == 1 {
            return false;
        }
        if d == 0 {
            // Any eN with e >= 2 sits strictly between 0N and N.
            return self.bound < 2;
        }
        (2..d).all(|e| d % e != 0)
    }

    /// Membership bitmap of `dN + eN` on the segment.
    fn sum_members(&self, d: u64, e: u64) -> Vec<bool> {
        let n = self.bound as usize;
        let mut m = vec![false; n + 1];
        m[0] = true;
        for x in 0..=n {
            if !m[x] {
                continue;
            }
            if d > 0 && x + (d as usize) <= n {
                m[x + d as usize] = true;
            }
            if e > 0 && x + (e as usize) <= n {
                m[x + e as usize] = true;
            }
        }
        m
    }

    /// Checks `C_k(dN + eN) = gcd(d, e) N` on a safe prefix of the
    /// segment (membership near the bound is distorted by truncation).
    pub fn check_sum_closure(&self, d: u64, e: u64) -> bool {
        let members = self.sum_members(d, e);
        let half = (self.bound / 2) as usize;
        let g = gcd(d, e);
        for s in 0..=half {
            let mut in_closure = false;
            for x in 0..=half {
                if members[x] && members[s + x] {
                    in_closure = true;
                    break;
                }
            }
            let expected = if g == 0 { s == 0 } else { s as u64 % g == 0 };
            if in_closure != expected {
                return false;
            }
        }
        true
    }

    pub fn check_product(&self, d: u64, e: u64) -> bool {
        // Products d i * e j = de (ij) sweep out exactly de N.
        let de = d * e;
        (0..=self.bound).all(|x| {
            let member = if de == 0 { x == 0 } else { x % de == 0 };
            member == NatIdeal::new(de).contains(x)
        })
    }

    pub fn check_intersection(&self, d: u64, e: u64) -> bool {
        let l = lcm(d, e);
        (0..=self.bound).all(|x| {
            (NatIdeal::new(d).contains(x) && NatIdeal::new(e).contains(x))
                == NatIdeal::new(l).contains(x)
        })
    }

    /// Intersects the principal k-primes above `dN` found on the segment
    /// and compares with `rad(d) N`.
    pub fn check_radical(&self, d: u64) -> bool {
        let mut meet: Option<u64> = None; // generator of the running intersection
        let upto = if d == 0 { self.bound.min(512) } else { d };
        for e in 0..=upto {
            let contains = if e == 0 { d == 0 } else { d % e == 0 };
            if contains && self.k_prime(e) {
                meet = Some(match meet {
                    None => e,
                    Some(m) => lcm(m, e),
                });
            }
        }
        // Empty intersection convention: no k-prime above dN means N.
        meet.unwrap_or(1) == rad(d)
    }
}

/// Confirms that k-ideals generated by small subsets of `{0..gen_bound}`
/// are principal: the k-closure of the numerical-semigroup ideal generated
/// by each pair and triple is `gcd N` on the segment.
pub fn check_k_ideals_are_principal(gen_bound: u64) -> bool {
    let oracle = BoundedOracle::new(4 * gen_bound * gen_bound);
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for a in 1..=gen_bound {
        for b in a..=gen_bound {
            gens.push(vec![a, b]);
            for c in b..=gen_bound {
                if a < 9 {
                    gens.push(vec![a, b, c]);
                }
            }
        }
    }
    for g in gens {
        let n = oracle.bound as usize;
        let mut members = vec![false; n + 1];
        members[0] = true;
        for x in 0..=n {
            if !members[x] {
                continue;
            }
            for &gi in &g {
                if gi > 0 && x + (gi as usize) <= n {
                    members[x + gi as usize] = true;
                }
            }
        }
        let gg = g.iter().fold(0, |acc, &x| gcd(acc, x));
        let half = n / 2;
        for s in 0..=half {
            let mut in_closure = false;
            for x in 0..=half {
                if members[x] && members[s + x] {
                    in_closure = true;
                    break;
                }
            }
            let expected = if gg == 0 { s == 0 } else { s as u64 % gg == 0 };
            if in_closure != expected {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Localisation of (N, +, .) at a prime-generated multiplicative set
// ---------------------------------------------------------------------------

/// Largest divisor of `d` composed of the given primes.
fn t_part(d: u64, t_gens: &[u64]) -> u64 {
    let mut part = 1;
    let mut rest = d;
    for &p in t_gens {
        while rest % p == 0 && rest > 0 {
            part *= p;
            rest /= p;
        }
    }
    part
}

/// Symbolic correspondence data for localising `N` away from a set of
/// primes.
#[derive(Clone, Debug, serde::Serialize)]
pub struct NatLocalisationReport {
    pub t_gens: Vec<u64>,
    /// Generators `<= gen_bound` of the k-strongly-irreducible ideals
    /// disjoint from `T`: zero plus the prime powers avoiding `T`.
    pub survivors: Vec<u64>,
    /// Every survivor satisfied `I^{ec} = I` under the colon formula.
    pub contraction_fixed: bool,
    /// The colon formula `∪_{s∈T} (dN : s) = (d / t-part(d)) N` verified
    /// for all `d <= gen_bound`.
    pub colon_formula_ok: bool,
}

pub fn nat_localisation_correspondence(
    t_gens: &[u64],
    gen_bound: u64,
) -> Result<NatLocalisationReport> {
    for &p in t_gens {
        if p < 2 || !is_prime(p) {
            return Err(Error::Param(format!(
                "multiplicative set generators must be primes, got {p}"
            )));
        }
    }
    let mut t_gens = t_gens.to_vec();
    t_gens.sort();
    t_gens.dedup();

    let meets_t = |d: u64| d >= 1 && t_part(d, &t_gens) == d;

    let mut survivors = Vec::new();
    for d in 0..=gen_bound {
        let profile = nat_classify(NatIdeal::new(d));
        if profile.k_strongly_irreducible.holds && !meets_t(d) {
            survivors.push(d);
        }
    }
    // The survivors must be exactly zero plus prime powers of primes
    // outside T.
    for &d in &survivors {
        assert!(
            d == 0 || (is_prime_power(d) && !t_gens.contains(&factorize(d)[0].0)),
            "unexpected survivor {d}"
        );
    }

    // Colon formula: union over s ∈ T of (dN : s) = (d / gcd(d, s^inf)) N.
    // The colons are nested along divisibility of the denominators, so the
    // union is the single largest one; denominators with exponents up to 6
    // already exhaust the T-part of any d <= 64.
    let mut denominators = vec![1u64];
    for _ in 0..6 {
        let mut next = denominators.clone();
        for &s in &denominators {
            for &p in &t_gens {
                if s * p <= 1_000_000 {
                    next.push(s * p);
                }
            }
        }
        next.sort();
        next.dedup();
        denominators = next;
    }
    let mut colon_formula_ok = true;
    let mut contraction_fixed = true;
    for d in 0..=gen_bound {
        let expected = if d == 0 { 0 } else { d / t_part(d, &t_gens) };
        // (dN : s) = (d / gcd(d, s)) N; the union over T is the largest.
        let reached = if d == 0 {
            0
        } else {
            let best = denominators.iter().map(|&s| gcd(d, s)).max().unwrap_or(1);
            d / best
        };
        if reached != expected {
            colon_formula_ok = false;
        }
        if survivors.contains(&d) && reached != d {
            contraction_fixed = false;
        }
    }

    Ok(NatLocalisationReport { t_gens, survivors, contraction_fixed, colon_formula_ok })
}

// ---------------------------------------------------------------------------
// The tropical model (N ∪ {inf}, min, +)
// ---------------------------------------------------------------------------

/// Up-set ideal of the min-plus semiring: `{x >= t} ∪ {inf}`; `None`
/// encodes threshold infinity, the zero ideal `{inf}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TropIdeal {
    pub threshold: Option<u64>,
}

impl TropIdeal {
    pub fn new(threshold: Option<u64>) -> Self {
        TropIdeal { threshold }
    }

    /// Membership of a finite element.
    pub fn contains_finite(&self, x: u64) -> bool {
        match self.threshold {
            None => false,
            Some(t) => x >= t,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.threshold != Some(0)
    }
}

/// Closed-form classification of an up-set ideal. The ideal lattice of the
/// min-plus semiring is a chain of up-sets, every ideal is strong, and the
/// plain and k-flags coincide throughout.
pub fn trop_classify(i: TropIdeal) -> ClassProfile {
    let proper = i.is_proper();
    // a + b >= t forces a >= t or b >= t exactly when t <= 1; the zero
    // ideal (t = inf) inherits primeness from the absence of zero divisors.
    let prime_cond = match i.threshold {
        None => true,
        Some(t) => t <= 1,
    };
    let semiprime_cond = prime_cond;
    let flag = Flag::from_bool;
    ClassProfile {
        ideal: flag(true),
        k_ideal: flag(true),
        strong: flag(true),
        prime: flag(proper && prime_cond),
        semiprime: flag(semiprime_cond),
        primary: flag(proper),
        irreducible: flag(proper),
        strongly_irreducible: flag(proper),
        maximal: flag(i.threshold == Some(1)),
        k_prime: flag(proper && prime_cond),
        k_semiprime: flag(semiprime_cond),
        k_primary: flag(proper),
        k_irreducible: flag(proper),
        k_strongly_irreducible: flag(proper),
        k_maximal: flag(i.threshold == Some(1)),
        k_cancellation: flag(i.threshold.is_some()),
        notes: vec![
            "threshold encodes the up-set {x >= t} ∪ {inf}; inf is the zero ideal".into(),
            "divisibility is y | x iff x >= y, so lcm{x, y} = max(x, y)".into(),
        ],
    }
}

/// min-plus value with `None` as infinity.
type Trop = Option<u64>;

fn trop_mul(a: Trop, b: Trop) -> Trop {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

fn trop_in(i: TropIdeal, x: Trop) -> bool {
    match x {
        None => true, // inf lies in every up-set ideal
        Some(v) => i.contains_finite(v),
    }
}

/// The lcm criterion of the order-theoretic characterization, scanned over
/// `{0..bound} ∪ {inf}`: `lcm{x,y}` below `z ∈ I` in the natural order
/// (which reverses the numeric order) forces a factor into `I`.
pub fn trop_lcm_criterion(i: TropIdeal, bound: u64) -> bool {
    let elems: Vec<Trop> = (0..=bound).map(Some).chain([None]).collect();
    // a <= b in the natural order iff min(a, b) = b; inf, the additive
    // identity, is the least element, and finite values compare reversed.
    let leq_nat = |a: Trop, b: Trop| match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => y <= x,
    };
    let lcm_div = |a: Trop, b: Trop| match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        _ => None,
    };
    for &x in &elems {
        for &y in &elems {
            if trop_in(i, x) || trop_in(i, y) {
                continue;
            }
            let l = lcm_div(x, y);
            for &z in &elems {
                if trop_in(i, z) && leq_nat(l, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Bounded oracle for the tropical model.
pub struct TropOracle {
    pub bound: u64,
}

impl TropOracle {
    pub fn new(bound: u64) -> Self {
        TropOracle { bound: bound.max(16) }
    }

    fn elems(&self) -> Vec<Trop> {
        (0..=self.bound).map(Some).chain([None]).collect()
    }

    pub fn k_ideal(&self, i: TropIdeal) -> bool {
        // x + y ∈ I (tropical +: min) and y ∈ I force x ∈ I.
        let elems = self.elems();
        for &x in &elems {
            for &y in &elems {
                let min = match (x, y) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (Some(a), None) | (None, Some(a)) => Some(a),
                    (None, None) => None,
                };
                if trop_in(i, min) && trop_in(i, y) && !trop_in(i, x) {
                    return false;
                }
            }
        }
        true
    }

    pub fn k_prime(&self, i: TropIdeal) -> bool {
        if !i.is_proper() {
            return false;
        }
        let elems = self.elems();
        elems.iter().all(|&a| {
            elems.iter().all(|&b| {
                !trop_in(i, trop_mul(a, b)) || trop_in(i, a) || trop_in(i, b)
            })
        })
    }

    pub fn k_semiprime(&self, i: TropIdeal) -> bool {
        self.elems().iter().all(|&a| !trop_in(i, trop_mul(a, a)) || trop_in(i, a))
    }

    pub fn k_primary(&self, i: TropIdeal) -> bool {
        if !i.is_proper() {
            return false;
        }
        let elems = self.elems();
        for &a in &elems {
            for &b in &elems {
                if trop_in(i, trop_mul(a, b)) && !trop_in(i, a) {
                    let mut power = b;
                    let mut hit = false;
                    for _ in 0..=self.bound + 1 {
                        if trop_in(i, power) {
                            hit = true;
                            break;
                        }
                        power = trop_mul(power, b);
                    }
                    if !hit {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Principal up-sets are already k-ideals, so the principal-closure
    /// reading of strong irreducibility is `max(a, b) ∈ I` forcing a
    /// factor in.
    pub fn k_strongly_irreducible(&self, i: TropIdeal) -> bool {
        if !i.is_proper() {
            return false;
        }
        let elems = self.elems();
        for &a in &elems {
            for &b in &elems {
                let join = match (a, b) {
                    (Some(x), Some(y)) => Some(x.max(y)),
                    _ => None,
                };
                if trop_in(i, join) && !trop_in(i, a) && !trop_in(i, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Up-set thresholds `e, f` with `up(e) ∩ up(f) = I` force one side to
    /// be `I`; the ideal lattice is a chain, so this is immediate, but the
    /// oracle still scans it.
    pub fn k_irreducible(&self, i: TropIdeal) -> bool {
        if !i.is_proper() {
            return false;
        }
        let thresholds: Vec<Trop> = (0..=self.bound).map(Some).chain([None]).collect();
        for &e in &thresholds {
            for &f in &thresholds {
                let meet = match (e, f) {
                    (Some(x), Some(y)) => Some(x.max(y)),
                    _ => None,
                };
                if meet == i.threshold && e != i.threshold && f != i.threshold {
                    return false;
                }
            }
        }
        true
    }

    pub fn k_maximal(&self, i: TropIdeal) -> bool {
        match i.threshold {
            Some(t) => t == 1,
            None => false,
        }
    }

    /// `up(a) * up(b) = up(a + b)`; cancellation of the left factor holds
    /// exactly when it is finite.
    pub fn k_cancellation(&self, i: TropIdeal) -> bool {
        let Some(a) = i.threshold else { return false };
        let thresholds: Vec<Trop> = (0..=self.bound).map(Some).chain([None]).collect();
        for &b in &thresholds {
            for &c in &thresholds {
                let ab = trop_mul(Some(a), b);
                let ac = trop_mul(Some(a), c);
                if ab == ac && b != c {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(0, 5), 0);
        assert_eq!(rad(12), 6);
        assert_eq!(rad(0), 0);
        assert_eq!(rad(1), 1);
        assert!(is_prime_power(9) && !is_prime_power(12) && !is_prime_power(1));
    }

    #[test]
    fn regression_vectors() {
        let p4 = nat_classify(NatIdeal::new(4));
        assert!(p4.k_strongly_irreducible.holds && !p4.k_prime.holds);

        let p6 = nat_classify(NatIdeal::new(6));
        assert!(p6.k_semiprime.holds && !p6.k_prime.holds && !p6.k_strongly_irreducible.holds);

        for p in [2u64, 3, 5] {
            let sq = nat_classify(NatIdeal::new(p * p));
            assert!(sq.k_primary.holds && !sq.k_prime.holds, "p^2 N for p = {p}");
        }
    }

    #[test]
    fn ops_formulas() {
        let ops = nat_ops(NatIdeal::new(6), NatIdeal::new(4));
        assert_eq!(ops.intersection, 12);
        assert_eq!(ops.product, 24);
        assert_eq!(ops.sum_k_closure, 2);
        let ops = nat_ops(NatIdeal::new(2), NatIdeal::new(3));
        assert_eq!(ops.sum_k_closure, 1, "2N + 3N closes up to all of N");
        assert_eq!(nat_radical(NatIdeal::new(4)).generator, 2);
    }

    #[test]
    fn oracle_agrees_on_small_generators() {
        for d in 0..=20 {
            let oracle = BoundedOracle::for_generator(d);
            let profile = nat_classify(NatIdeal::new(d));
            assert_eq!(oracle.k_prime(d), profile.k_prime.holds, "k_prime at d={d}");
            assert_eq!(oracle.k_semiprime(d), profile.k_semiprime.holds, "k_semiprime at d={d}");
            assert_eq!(oracle.k_primary(d), profile.k_primary.holds, "k_primary at d={d}");
            assert_eq!(
                oracle.k_strongly_irreducible(d),
                profile.k_strongly_irreducible.holds,
                "k_strongly_irreducible at d={d}"
            );
            assert_eq!(oracle.k_irreducible(d), profile.k_irreducible.holds, "k_irred at d={d}");
            assert_eq!(oracle.k_maximal(d), profile.k_maximal.holds, "k_maximal at d={d}");
            assert!(oracle.is_k_ideal(d));
            assert!(oracle.check_radical(d), "radical formula at d={d}");
        }
    }

    // The restricted scans in the oracle must agree with the naive full
    // pair scans; validated here on small generators.
    #[test]
    fn restricted_scans_match_naive_scans() {
        for d in 2..=12u64 {
            let n = 4 * d * d;
            let naive_prime = (0..=n).all(|a| {
                (0..=n).all(|b| a * b % d != 0 || a % d == 0 || b % d == 0)
            });
            assert_eq!(BoundedOracle::for_generator(d).k_prime(d), naive_prime, "d={d}");

            let naive_sirr = NatIdeal::new(d);
            let naive = (1..=n).all(|a| {
                (1..=n).all(|b| {
                    !naive_sirr.contains(lcm(a, b)) || naive_sirr.contains(a) || naive_sirr.contains(b)
                })
            });
            assert_eq!(
                BoundedOracle::for_generator(d).k_strongly_irreducible(d),
                naive,
                "strong irreducibility scan at d={d}"
            );
        }
    }

    #[test]
    fn lcm_criterion_examples() {
        assert!(nat_lcm_criterion(NatIdeal::new(4), 24));
        assert_eq!(nat_lcm_witness(NatIdeal::new(6), 24), Some((2, 3)));
        assert!(nat_lcm_criterion(NatIdeal::new(1), 24), "vacuous on the unit ideal");
        // Criterion must match the closed-form flag.
        for d in 0..=30 {
            assert_eq!(
                nat_lcm_criterion(NatIdeal::new(d), 60),
                d == 0 || d == 1 || is_prime_power(d),
                "at d={d}"
            );
        }
    }

    #[test]
    fn decompositions() {
        let parts: Vec<u64> =
            nat_primary_decomposition(NatIdeal::new(12)).iter().map(|i| i.generator).collect();
        assert_eq!(parts, vec![4, 3]);
        let parts: Vec<u64> =
            nat_primary_decomposition(NatIdeal::new(30)).iter().map(|i| i.generator).collect();
        assert_eq!(parts, vec![2, 3, 5]);
        let parts: Vec<u64> =
            nat_primary_decomposition(NatIdeal::new(7)).iter().map(|i| i.generator).collect();
        assert_eq!(parts, vec![7]);
        assert_eq!(nat_primary_decomposition(NatIdeal::new(0)).len(), 1);
    }

    #[test]
    fn prime_element_statements() {
        assert!(nat_prime_element_theorems(NatIdeal::new(7)).unwrap());
        assert!(nat_prime_element_theorems(NatIdeal::new(4)).unwrap(), "vacuous for non-primes");
        assert!(nat_prime_element_theorems(NatIdeal::new(0)).is_err());
        assert!(check_unique_factorization(500));
    }

    #[test]
    fn principality_assumption_on_small_generators() {
        assert!(check_k_ideals_are_principal(20));
    }

    #[test]
    fn localisation_correspondence() {
        let report = nat_localisation_correspondence(&[2], 30).unwrap();
        assert!(!report.survivors.contains(&4), "4N meets T");
        assert!(report.survivors.contains(&9));
        assert!(report.contraction_fixed && report.colon_formula_ok);

        let report = nat_localisation_correspondence(&[], 20).unwrap();
        assert!(report.survivors.contains(&4), "identity correspondence keeps everything");

        let report = nat_localisation_correspondence(&[2, 3], 30).unwrap();
        for &s in &report.survivors {
            assert!(s == 0 || factorize(s)[0].0 >= 5);
        }
        assert!(nat_localisation_correspondence(&[1], 10).is_err());
        assert!(nat_localisation_correspondence(&[4], 10).is_err());
    }

    #[test]
    fn tropical_classification() {
        let zero = trop_classify(TropIdeal::new(None));
        assert!(zero.k_prime.holds, "no zero divisors at the zero ideal");
        let t2 = trop_classify(TropIdeal::new(Some(2)));
        assert!(t2.k_strongly_irreducible.holds);
        assert!(!t2.k_prime.holds, "1 + 1 = 2 >= 2 with 1 < 2 twice");
        let t1 = trop_classify(TropIdeal::new(Some(1)));
        assert!(t1.k_maximal.holds && t1.k_prime.holds);
    }

    #[test]
    fn tropical_oracle_agrees() {
        let oracle = TropOracle::new(40);
        let thresholds: Vec<Option<u64>> = (0..=12).map(Some).chain([None]).collect();
        for &t in &thresholds {
            let i = TropIdeal::new(t);
            let profile = trop_classify(i);
            assert!(oracle.k_ideal(i));
            assert_eq!(oracle.k_prime(i), profile.k_prime.holds, "k_prime at {t:?}");
            assert_eq!(oracle.k_semiprime(i), profile.k_semiprime.holds, "k_semiprime at {t:?}");
            assert_eq!(oracle.k_primary(i), profile.k_primary.holds, "k_primary at {t:?}");
            assert_eq!(
                oracle.k_strongly_irreducible(i),
                profile.k_strongly_irreducible.holds,
                "k_strongly_irreducible at {t:?}"
            );
            assert_eq!(oracle.k_irreducible(i), profile.k_irreducible.holds, "k_irr at {t:?}");
            assert_eq!(oracle.k_maximal(i), profile.k_maximal.holds, "k_maximal at {t:?}");
            assert_eq!(
                oracle.k_cancellation(i),
                profile.k_cancellation.holds,
                "k_cancellation at {t:?}"
            );
            assert!(trop_lcm_criterion(i, 20) || !i.is_proper());
        }
    }
}
