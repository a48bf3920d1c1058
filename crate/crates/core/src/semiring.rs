//! Finite commutative semirings as dense operation tables.
//!
//! A carrier is `{0, .., n-1}` with `n <= 256`; both operations are stored
//! row-major, one byte per entry, so the exhaustive axiom scans stay
//! cache-friendly. Every constructor exposed here runs the full axiom
//! validation before handing out a value, so a `FiniteSemiring` in scope is
//! always a genuine commutative semiring with absorbing zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{CarrierSet, Elem};

/// A finite commutative semiring `(S, +, 0, ., 1)` with absorbing zero.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    zero: Elem,
    one: Elem,
    name: String,
}

/// One violated axiom together with the lexicographically least witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<Elem>,
}

/// Outcome of the axiom scan. `valid` iff `violations` is empty.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// JSON interchange form of a semiring table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemiringTable {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    pub name: String,
}

fn check_shape(add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize, one: usize) -> Result<usize> {
    let n = add.len();
    if n == 0 {
        return Err(Error::Malformed("empty addition table".into()));
    }
    if n > 256 {
        return Err(Error::Malformed(format!("carrier size {n} exceeds 256")));
    }
    if mul.len() != n {
        return Err(Error::Malformed(format!(
            "addition table is {n}x{n} but multiplication table has {} rows",
            mul.len()
        )));
    }
    for (label, table) in [("add", add), ("mul", mul)] {
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "{label} row {i} has length {} in a table of size {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Malformed(format!(
                        "{label}[{i}][{j}] = {v} is out of range for size {n}"
                    )));
                }
            }
        }
    }
    if zero >= n || one >= n {
        return Err(Error::Malformed(format!(
            "constants zero={zero}, one={one} must lie in [0, {n})"
        )));
    }
    Ok(n)
}

/// Scans the axioms of a commutative semiring with absorbing zero.
///
/// Malformed input (ragged rows, out-of-range entries) is an error distinct
/// from an axiom violation. Every violated axiom is reported once, with the
/// least witness in scan order.
pub fn validate_semiring(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<ValidationReport> {
    let n = check_shape(add, mul, zero, one)?;
    let a = |x: usize, y: usize| add[x][y];
    let m = |x: usize, y: usize| mul[x][y];
    let mut violations: Vec<Violation> = Vec::new();
    let mut record = |axiom: &'static str, witness: Vec<Elem>, hit: &mut bool| {
        if !*hit {
            violations.push(Violation { axiom, witness });
            *hit = true;
        }
    };

    let (mut ac, mut mc) = (false, false);
    for x in 0..n {
        for y in 0..n {
            if a(x, y) != a(y, x) {
                record("add-commutativity", vec![x as Elem, y as Elem], &mut ac);
            }
            if m(x, y) != m(y, x) {
                record("mul-commutativity", vec![x as Elem, y as Elem], &mut mc);
            }
        }
    }

    let (mut ai, mut mi, mut za) = (false, false, false);
    for x in 0..n {
        if a(zero, x) != x {
            record("add-identity", vec![x as Elem], &mut ai);
        }
        if m(one, x) != x {
            record("mul-identity", vec![x as Elem], &mut mi);
        }
        if m(zero, x) != zero {
            record("zero-absorbing", vec![x as Elem], &mut za);
        }
    }

    let (mut aa, mut ma, mut di) = (false, false, false);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    record("add-associativity", vec![x as Elem, y as Elem, z as Elem], &mut aa);
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    record("mul-associativity", vec![x as Elem, y as Elem, z as Elem], &mut ma);
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    record("distributivity", vec![x as Elem, y as Elem, z as Elem], &mut di);
                }
            }
        }
    }

    violations.sort_by_key(|v| v.axiom);
    Ok(ValidationReport { valid: violations.is_empty(), violations })
}

impl FiniteSemiring {
    /// Builds a semiring from nested tables, refusing malformed or
    /// axiom-violating input.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let report = validate_semiring(&add, &mul, zero, one)?;
        if !report.valid {
            let summary = report
                .violations
                .iter()
                .map(|v| format!("{} at {:?}", v.axiom, v.witness))
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::Invalid(summary));
        }
        let n = add.len();
        let flatten = |t: Vec<Vec<usize>>| {
            let mut out = Vec::with_capacity(n * n);
            for row in t {
                out.extend(row.into_iter().map(|v| v as Elem));
            }
            out
        };
        Ok(FiniteSemiring {
            size: n,
            add: flatten(add),
            mul: flatten(mul),
            zero: zero as Elem,
            one: one as Elem,
            name: name.into(),
        })
    }

    pub fn from_table(t: &SemiringTable) -> Result<Self> {
        if t.add.len() != t.size {
            return Err(Error::Malformed(format!(
                "declared size {} does not match table with {} rows",
                t.size,
                t.add.len()
            )));
        }
        Self::from_tables(t.name.clone(), t.add.clone(), t.mul.clone(), t.zero, t.one)
    }

    pub fn to_table(&self) -> SemiringTable {
        let unflatten = |t: &[Elem]| {
            (0..self.size)
                .map(|i| t[i * self.size..(i + 1) * self.size].iter().map(|&v| v as usize).collect())
                .collect()
        };
        SemiringTable {
            size: self.size,
            add: unflatten(&self.add),
            mul: unflatten(&self.mul),
            zero: self.zero as usize,
            one: self.one as usize,
            name: self.name.clone(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x as usize * self.size + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.size + y as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(|i| i as Elem)
    }

    pub fn carrier(&self) -> CarrierSet {
        CarrierSet::full(self.size)
    }

    /// `x^n` for `n >= 1`.
    pub fn pow(&self, x: Elem, n: usize) -> Elem {
        let mut acc = x;
        for _ in 1..n {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn is_additively_idempotent(&self) -> bool {
        self.elements().all(|x| self.add(x, x) == x)
    }

    /// Every `a` admits an `x` with `a = a^2 x`.
    pub fn is_von_neumann_regular(&self) -> bool {
        self.elements().all(|a| {
            let aa = self.mul(a, a);
            self.elements().any(|x| self.mul(aa, x) == a)
        })
    }

    /// Additive cancellation: `a + b = a + c` forces `b = c`.
    pub fn is_cancellative(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                self.elements().all(|c| self.add(a, b) != self.add(a, c) || b == c)
            })
        })
    }

    /// Zero-sum free: `a + b = 0` forces `a = b = 0`.
    pub fn is_conic(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| self.add(a, b) != self.zero || (a == self.zero && b == self.zero))
        })
    }
}

impl std::fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSemiring({}, |S|={})", self.name, self.size)
    }
}

/// Pointer identity of the ambient semiring; ideals and congruences from
/// different carriers must never be mixed.
pub fn same_ring(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    std::ptr::eq(a, b)
}

// ---------------------------------------------------------------------------
// Generator families
// ---------------------------------------------------------------------------

fn build(name: String, n: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize, zero: usize, one: usize) -> Result<FiniteSemiring> {
    let add_t: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect();
    let mul_t: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
    FiniteSemiring::from_tables(name, add_t, mul_t, zero, one)
}

/// The Boolean semifield `B1 = {0, 1}` with `1 + 1 = 1`.
pub fn make_boolean() -> FiniteSemiring {
    build("B1".into(), 2, |x, y| x | y, |x, y| x & y, 0, 1).expect("B1 is a semiring")
}

/// Truncated natural numbers `{0, .., cap}` with both operations clamped at
/// `cap`. `cap = 0` is rejected: the multiplicative identity would collapse
/// onto zero.
pub fn make_truncated_nat(cap: usize) -> Result<FiniteSemiring> {
    if cap == 0 {
        return Err(Error::Param("truncated-nat cap must be >= 1 (one would equal zero)".into()));
    }
    if cap > 255 {
        return Err(Error::Param(format!("truncated-nat cap {cap} exceeds carrier limit")));
    }
    build(
        format!("N{cap}"),
        cap + 1,
        move |x, y| (x + y).min(cap),
        move |x, y| (x * y).min(cap),
        0,
        1,
    )
}

/// Chain lattice `0 < 1 < .. < n-1` viewed as a semiring: join is addition,
/// meet is multiplication, the top element is the multiplicative identity.
pub fn make_chain_lattice(n: usize) -> Result<FiniteSemiring> {
    if n < 2 {
        return Err(Error::Param("chain lattice needs at least 2 elements".into()));
    }
    if n > 256 {
        return Err(Error::Param(format!("chain length {n} exceeds carrier limit")));
    }
    build(format!("C{n}"), n, |x, y| x.max(y), |x, y| x.min(y), 0, n - 1)
}

/// Min-plus semiring on `{0, .., cap}`: addition is `min` with identity
/// `cap` (the infinity surrogate, recorded in the name), multiplication is
/// ordinary addition saturated at `cap`, and `0` is the unit.
pub fn make_tropical(cap: usize) -> Result<FiniteSemiring> {
    if cap == 0 {
        return Err(Error::Param("tropical cap must be >= 1".into()));
    }
    if cap > 255 {
        return Err(Error::Param(format!("tropical cap {cap} exceeds carrier limit")));
    }
    build(
        format!("T{cap}[inf={cap}]"),
        cap + 1,
        |x, y| x.min(y),
        move |x, y| (x + y).min(cap),
        cap,
        0,
    )
}

/// `Z/nZ` with its ring structure, viewed as a semiring.
pub fn make_zn_ring(n: usize) -> Result<FiniteSemiring> {
    if n < 2 {
        return Err(Error::Param("Z/nZ needs n >= 2".into()));
    }
    if n > 256 {
        return Err(Error::Param(format!("modulus {n} exceeds carrier limit")));
    }
    build(format!("Z{n}"), n, move |x, y| (x + y) % n, move |x, y| (x * y) % n, 0, 1)
}

/// Componentwise product semiring; element `a * n2 + b` encodes the pair
/// `(a, b)`.
pub fn make_product(s1: &FiniteSemiring, s2: &FiniteSemiring) -> Result<FiniteSemiring> {
    let (n1, n2) = (s1.size(), s2.size());
    if n1 * n2 > 256 {
        return Err(Error::Param(format!("product carrier {} exceeds limit", n1 * n2)));
    }
    let pair = |x: usize, f: &dyn Fn(Elem, Elem) -> Elem, g: &dyn Fn(Elem, Elem) -> Elem, y: usize| {
        let (a1, b1) = ((x / n2) as Elem, (x % n2) as Elem);
        let (a2, b2) = ((y / n2) as Elem, (y % n2) as Elem);
        f(a1, a2) as usize * n2 + g(b1, b2) as usize
    };
    build(
        format!("{}x{}", s1.name(), s2.name()),
        n1 * n2,
        |x, y| pair(x, &|a, b| s1.add(a, b), &|a, b| s2.add(a, b), y),
        |x, y| pair(x, &|a, b| s1.mul(a, b), &|a, b| s2.mul(a, b), y),
        s1.zero() as usize * n2 + s2.zero() as usize,
        s1.one() as usize * n2 + s2.one() as usize,
    )
}

// ---------------------------------------------------------------------------
// Natural partial order
// ---------------------------------------------------------------------------

/// The order `x <= y iff x + y = y` of an additively idempotent semiring.
#[derive(Clone, Debug)]
pub struct NaturalOrder {
    size: usize,
    leq: Vec<bool>,
}

impl NaturalOrder {
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x as usize * self.size + y as usize]
    }
}

/// Computes the natural partial order; defined only when addition is
/// idempotent, and checked to be reflexive, antisymmetric and transitive.
pub fn natural_order(ring: &FiniteSemiring) -> Result<NaturalOrder> {
    if !ring.is_additively_idempotent() {
        return Err(Error::NotIdempotent { op: "natural_order", name: ring.name().into() });
    }
    let n = ring.size();
    let mut leq = vec![false; n * n];
    for x in ring.elements() {
        for y in ring.elements() {
            leq[x as usize * n + y as usize] = ring.add(x, y) == y;
        }
    }
    let ord = NaturalOrder { size: n, leq };
    for x in ring.elements() {
        assert!(ord.leq(x, x), "natural order must be reflexive");
        for y in ring.elements() {
            if ord.leq(x, y) && ord.leq(y, x) {
                assert_eq!(x, y, "natural order must be antisymmetric");
            }
            for z in ring.elements() {
                if ord.leq(x, y) && ord.leq(y, z) {
                    assert!(ord.leq(x, z), "natural order must be transitive");
                }
            }
        }
    }
    Ok(ord)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_semifield_is_valid() {
        let table = make_boolean().to_table();
        let report = validate_semiring(&table.add, &table.mul, 0, 1).unwrap();
        assert!(report.valid);
    }

    // Flipping 1+1 from 1 to 0 in the B1 tables turns addition into xor;
    // together with the untouched multiplication that is the field F2, so
    // the axiom scan finds nothing to report.
    #[test]
    fn xor_variant_of_b1_is_the_field_f2() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let report = validate_semiring(&add, &mul, 0, 1).unwrap();
        assert!(report.valid, "unexpected violations: {:?}", report.violations);
    }

    #[test]
    fn noncommutative_addition_is_reported_with_least_witness() {
        // add(1,2) = 2 but add(2,1) = 1.
        let add = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        let report = validate_semiring(&add, &mul, 0, 1).unwrap();
        assert!(!report.valid);
        let v = report.violations.iter().find(|v| v.axiom == "add-commutativity").unwrap();
        assert_eq!(v.witness, vec![1, 2]);
    }

    #[test]
    fn ragged_table_is_malformed_not_invalid() {
        let add = vec![vec![0, 1], vec![1]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(validate_semiring(&add, &mul, 0, 1), Err(Error::Malformed(_))));
        let add = vec![vec![0, 7], vec![1, 1]];
        assert!(matches!(validate_semiring(&add, &mul, 0, 1), Err(Error::Malformed(_))));
    }

    #[test]
    fn truncated_nat_tables() {
        let n2 = make_truncated_nat(2).unwrap();
        assert_eq!(n2.add(1, 1), 2);
        assert_eq!(n2.mul(2, 2), 2);
        let n5 = make_truncated_nat(5).unwrap();
        assert_eq!(n5.mul(2, 3), 5);
        assert!(matches!(make_truncated_nat(0), Err(Error::Param(_))));
        // cap = 1 is B1 up to relabeling: same tables on {0, 1}.
        let n1 = make_truncated_nat(1).unwrap();
        let b1 = make_boolean();
        assert_eq!(n1.to_table().add, b1.to_table().add);
        assert_eq!(n1.to_table().mul, b1.to_table().mul);
    }

    #[test]
    fn chain_lattice_is_idempotent() {
        let c3 = make_chain_lattice(3).unwrap();
        assert!(c3.is_additively_idempotent());
        assert_eq!(c3.one(), 2);
        assert_eq!(c3.add(1, 2), 2);
        assert_eq!(c3.mul(1, 2), 1);
    }

    #[test]
    fn tropical_identities() {
        let t4 = make_tropical(4).unwrap();
        assert_eq!(t4.zero(), 4, "additive identity is the cap");
        assert_eq!(t4.one(), 0, "multiplicative identity is 0");
        assert_eq!(t4.add(1, 3), 1);
        assert_eq!(t4.mul(3, 3), 4);
    }

    #[test]
    fn natural_order_on_b1_and_chain() {
        let b1 = make_boolean();
        let ord = natural_order(&b1).unwrap();
        assert!(ord.leq(0, 1));
        assert!(!ord.leq(1, 0));

        let c3 = make_chain_lattice(3).unwrap();
        let ord = natural_order(&c3).unwrap();
        for x in c3.elements() {
            for y in c3.elements() {
                assert_eq!(ord.leq(x, y), x <= y, "chain order is the numeric order");
            }
        }

        let n2 = make_truncated_nat(2).unwrap();
        assert!(natural_order(&n2).is_err(), "N2 is not additively idempotent");
    }

    #[test]
    fn tropical_natural_order_reverses_numbers() {
        let t4 = make_tropical(4).unwrap();
        let ord = natural_order(&t4).unwrap();
        for x in t4.elements() {
            for y in t4.elements() {
                assert_eq!(ord.leq(x, y), y <= x);
            }
        }
    }

    #[test]
    fn predicate_examples() {
        let c3 = make_chain_lattice(3).unwrap();
        assert!(c3.is_von_neumann_regular());
        let n2 = make_truncated_nat(2).unwrap();
        assert!(!n2.is_additively_idempotent());
        let z4 = make_zn_ring(4).unwrap();
        assert!(z4.is_cancellative(), "additive cancellation holds in a ring");
        assert!(!z4.is_conic(), "1 + 3 = 0 in Z/4Z");
        assert!(!z4.is_von_neumann_regular());
    }

    #[test]
    fn product_carrier_and_constants() {
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.zero(), 0);
        assert_eq!(p.one(), 3);
        assert!(p.is_additively_idempotent());
    }
}
