//! Bourne quotient semirings `S/I`.
//!
//! Two elements are identified when `x + i1 = y + i2` for some `i1, i2`
//! in the ideal; this relation is already transitive (the witnesses add),
//! so the classes come straight out of a pairwise scan. Class indices are
//! assigned by least base representative, making the construction
//! reproducible bit for bit. Well-definedness of both induced operations is
//! re-verified on every pair of class members rather than trusted.

use crate::hom::Hom;
use crate::ideal::{is_ideal, k_closure};
use crate::semiring::FiniteSemiring;
use crate::set::{CarrierSet, Elem};

/// A quotient `S/I` with its projection data.
pub struct Quotient<'s> {
    pub base: &'s FiniteSemiring,
    pub ideal: CarrierSet,
    /// Base element -> quotient element.
    pub class_of: Vec<Elem>,
    pub ring: FiniteSemiring,
}

/// Builds `S/I`. Panics if `ideal` is not an ideal of `base`.
pub fn bourne_quotient<'s>(base: &'s FiniteSemiring, ideal: &CarrierSet) -> Quotient<'s> {
    assert!(is_ideal(base, ideal), "bourne_quotient requires an ideal");
    let n = base.size();

    // x ~ y iff x + i1 = y + i2 for some i1, i2 in I.
    let related = |x: Elem, y: Elem| {
        ideal.iter().any(|i1| {
            let lhs = base.add(x, i1);
            ideal.iter().any(|i2| lhs == base.add(y, i2))
        })
    };

    let mut class_of: Vec<Elem> = vec![0; n];
    let mut reps: Vec<Elem> = Vec::new();
    for x in base.elements() {
        match reps.iter().position(|&r| related(r, x)) {
            Some(c) => class_of[x as usize] = c as Elem,
            None => {
                class_of[x as usize] = reps.len() as Elem;
                reps.push(x);
            }
        }
    }
    let m = reps.len();

    // The relation is an equivalence; make sure the scan agreed with itself.
    for x in base.elements() {
        for y in base.elements() {
            assert_eq!(
                related(x, y),
                class_of[x as usize] == class_of[y as usize],
                "Bourne relation failed to partition {} at ({x},{y})",
                base.name()
            );
        }
    }

    let add_t: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| class_of[base.add(a, b) as usize] as usize).collect())
        .collect();
    let mul_t: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| class_of[base.mul(a, b) as usize] as usize).collect())
        .collect();

    // Well-definedness on all members, not just representatives.
    for x in base.elements() {
        for y in base.elements() {
            let (cx, cy) = (class_of[x as usize] as usize, class_of[y as usize] as usize);
            assert_eq!(
                add_t[cx][cy], class_of[base.add(x, y) as usize] as usize,
                "quotient addition ill-defined on {}",
                base.name()
            );
            assert_eq!(
                mul_t[cx][cy], class_of[base.mul(x, y) as usize] as usize,
                "quotient multiplication ill-defined on {}",
                base.name()
            );
        }
    }

    let ring = FiniteSemiring::from_tables(
        format!("{}/{}", base.name(), ideal),
        add_t,
        mul_t,
        class_of[base.zero() as usize] as usize,
        class_of[base.one() as usize] as usize,
    )
    .expect("Bourne quotient of a semiring is a semiring");
    assert_eq!(ring.size(), m);

    let q = Quotient { base, ideal: *ideal, class_of, ring };
    let proj = q.projection();
    assert!(proj.is_valid(), "projection must be a homomorphism");
    // The zero class is exactly the k-closure of the ideal.
    assert_eq!(
        proj.preimage_of(&CarrierSet::singleton(q.ring.zero())),
        k_closure(base, ideal),
        "zero class of {} differs from the k-closure",
        base.name()
    );
    q
}

impl<'s> Quotient<'s> {
    pub fn projection(&self) -> Hom<'_> {
        Hom { source: self.base, target: &self.ring, map: self.class_of.clone() }
    }

    pub fn class_of(&self, x: Elem) -> Elem {
        self.class_of[x as usize]
    }

    /// Image `J/I` of an ideal `J ⊇ I` under the projection.
    pub fn lift_ideal(&self, j: &CarrierSet) -> CarrierSet {
        assert!(
            self.ideal.is_subset(j),
            "lift_ideal requires the quotient ideal to be contained in J"
        );
        assert!(is_ideal(self.base, j), "lift_ideal requires an ideal");
        j.iter().map(|x| self.class_of(x)).collect()
    }

    /// The zero ideal `<0̄>` of the quotient.
    pub fn zero_ideal(&self) -> CarrierSet {
        CarrierSet::singleton(self.ring.zero())
    }

    pub fn is_trivial(&self) -> bool {
        self.ring.size() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{is_k_ideal, IdealLattice};
    use crate::semiring::{make_boolean, make_chain_lattice, make_product, make_truncated_nat};
    use crate::Budget;

    #[test]
    fn chain_quotient_by_lower_ideal_is_boolean() {
        let c3 = make_chain_lattice(3).unwrap();
        let q = bourne_quotient(&c3, &CarrierSet::from_slice(&[0, 1]));
        assert_eq!(q.ring.size(), 2, "classes {{0,m}} and {{1}}");
        assert_eq!(q.class_of(0), q.class_of(1));
        assert_ne!(q.class_of(0), q.class_of(2));
        let b1 = make_boolean();
        assert_eq!(q.ring.to_table().add, b1.to_table().add);
        assert_eq!(q.ring.to_table().mul, b1.to_table().mul);
    }

    // In N2 the class of 0 modulo {0, 2} already swallows 1: 0 + 2 = 2 and
    // 1 + 2 = 2, so the quotient collapses to a point (the zero class is
    // the k-closure of {0, 2}, which is all of N2).
    #[test]
    fn n2_quotient_by_non_k_ideal_is_trivial() {
        let n2 = make_truncated_nat(2).unwrap();
        let q = bourne_quotient(&n2, &CarrierSet::from_slice(&[0, 2]));
        assert!(q.is_trivial());
    }

    #[test]
    fn quotient_by_zero_of_conic_semiring_is_the_base() {
        let n2 = make_truncated_nat(2).unwrap();
        let q = bourne_quotient(&n2, &CarrierSet::singleton(0));
        assert_eq!(q.ring.size(), n2.size());
        assert_eq!(q.class_of, vec![0, 1, 2]);
    }

    #[test]
    fn lift_examples() {
        let c3 = make_chain_lattice(3).unwrap();
        let q = bourne_quotient(&c3, &CarrierSet::singleton(0));
        let lifted = q.lift_ideal(&CarrierSet::from_slice(&[0, 1]));
        assert_eq!(lifted.len(), 2, "singleton classes");

        // Unit ideal lifts to the whole quotient.
        let q = bourne_quotient(&c3, &CarrierSet::from_slice(&[0, 1]));
        assert_eq!(q.lift_ideal(&c3.carrier()), q.ring.carrier());

        // Lifting a k-ideal along a k-ideal quotient gives a k-ideal; the
        // image of a non-k ideal mirrors the base.
        let n2 = make_truncated_nat(2).unwrap();
        let q = bourne_quotient(&n2, &CarrierSet::singleton(0));
        let image = q.lift_ideal(&CarrierSet::from_slice(&[0, 2]));
        assert!(!is_k_ideal(&q.ring, &image));
    }

    #[test]
    fn k_ideals_lift_to_k_ideals() {
        let budget = Budget::default();
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        let lat = IdealLattice::compute(&p, &budget).unwrap();
        for i in &lat.ideals {
            let q = bourne_quotient(&p, i);
            for j in &lat.k_ideals {
                if i.is_subset(j) {
                    assert!(is_k_ideal(&q.ring, &q.lift_ideal(j)));
                }
            }
        }
    }
}
