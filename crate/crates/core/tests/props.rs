//! Property tests for the algebraic invariants that quantify over
//! arbitrary subsets and instance choices.

use proptest::prelude::*;

use kideal::budget::Budget;
use kideal::congruence::enumerate_congruences;
use kideal::corpus::default_corpus;
use kideal::ideal::{
    generate_ideal, is_downward_closed, is_ideal, is_k_ideal, k_closure, IdealLattice,
};
use kideal::semiring::{make_product, make_truncated_nat, natural_order, FiniteSemiring};
use kideal::set::CarrierSet;

fn instance(idx: usize) -> FiniteSemiring {
    let corpus = default_corpus();
    let n = corpus.instances.len();
    corpus.instances[idx % n].ring.clone()
}

fn subset_of(ring: &FiniteSemiring, mask: u32) -> CarrierSet {
    ring.elements().filter(|&x| mask >> x & 1 == 1).collect()
}

proptest! {
    // The generated ideal is the least ideal containing the generators,
    // measured against the (independently cross-checked) full enumeration.
    #[test]
    fn generated_ideal_is_least(idx in 0usize..25, mask in 0u32..512) {
        let ring = instance(idx);
        let gens = subset_of(&ring, mask);
        let generated = generate_ideal(&ring, &gens);
        prop_assert!(is_ideal(&ring, &generated));
        prop_assert!(gens.is_subset(&generated));
        let lat = IdealLattice::compute(&ring, &Budget::default()).unwrap();
        for i in &lat.ideals {
            if gens.is_subset(i) {
                prop_assert!(generated.is_subset(i));
            }
        }
    }

    // k-closure is monotone, inflationary and idempotent, and lands on
    // the least k-ideal above its input.
    #[test]
    fn k_closure_is_a_closure_operator(idx in 0usize..25, a in 0u32..512, b in 0u32..512) {
        let ring = instance(idx);
        let i = generate_ideal(&ring, &subset_of(&ring, a));
        let j = generate_ideal(&ring, &subset_of(&ring, a | b));
        let ci = k_closure(&ring, &i);
        prop_assert!(i.is_subset(&ci));
        prop_assert!(is_k_ideal(&ring, &ci));
        prop_assert_eq!(k_closure(&ring, &ci), ci);
        prop_assert!(ci.is_subset(&k_closure(&ring, &j)), "monotonicity");
        let lat = IdealLattice::compute(&ring, &Budget::default()).unwrap();
        for k in &lat.k_ideals {
            if i.is_subset(k) {
                prop_assert!(ci.is_subset(k), "least k-ideal above the input");
            }
        }
    }

    // Products are additively idempotent exactly when both factors are.
    #[test]
    fn product_idempotence(left in 0usize..25, right in 0usize..25) {
        let l = instance(left);
        let r = instance(right);
        if l.size() * r.size() <= 256 {
            let p = make_product(&l, &r).unwrap();
            prop_assert_eq!(
                p.is_additively_idempotent(),
                l.is_additively_idempotent() && r.is_additively_idempotent()
            );
        }
    }

    // On additively idempotent instances, k-ideals are exactly the
    // downward closed ideals of the natural order.
    #[test]
    fn downward_closure_characterization(idx in 0usize..25, mask in 0u32..512) {
        let ring = instance(idx);
        if ring.is_additively_idempotent() {
            let ord = natural_order(&ring).unwrap();
            let i = generate_ideal(&ring, &subset_of(&ring, mask));
            prop_assert_eq!(is_k_ideal(&ring, &i), is_downward_closed(&ring, &ord, &i));
        }
    }

    // Congruence meet and join satisfy the lattice absorption laws.
    #[test]
    fn congruence_lattice_absorption(idx in 0usize..25, a in 0usize..64, b in 0usize..64) {
        let ring = instance(idx);
        let all = enumerate_congruences(&ring, &Budget::default()).unwrap();
        let x = &all[a % all.len()];
        let y = &all[b % all.len()];
        prop_assert_eq!(x.meet(&x.join(y)).class_of, x.class_of.clone());
        prop_assert_eq!(x.join(&x.meet(y)).class_of, x.class_of.clone());
    }

    // Truncated naturals clamp both operations at the cap.
    #[test]
    fn truncation_clamps(cap in 1usize..30, x in 0usize..30, y in 0usize..30) {
        let ring = make_truncated_nat(cap).unwrap();
        let (x, y) = (x.min(cap), y.min(cap));
        prop_assert_eq!(ring.add(x as u8, y as u8) as usize, (x + y).min(cap));
        prop_assert_eq!(ring.mul(x as u8, y as u8) as usize, (x * y).min(cap));
    }

    // Set algebra sanity: union and intersection against membership.
    #[test]
    fn carrier_set_algebra(a in 0u64..4096, b in 0u64..4096) {
        let sa: CarrierSet = (0..12u8).filter(|&i| a >> i & 1 == 1).collect();
        let sb: CarrierSet = (0..12u8).filter(|&i| b >> i & 1 == 1).collect();
        for i in 0..12u8 {
            prop_assert_eq!(sa.union(&sb).contains(i), sa.contains(i) || sb.contains(i));
            prop_assert_eq!(sa.intersection(&sb).contains(i), sa.contains(i) && sb.contains(i));
            prop_assert_eq!(sa.difference(&sb).contains(i), sa.contains(i) && !sb.contains(i));
        }
        prop_assert_eq!(sa.is_subset(&sb), sa.union(&sb) == sb);
    }
}
