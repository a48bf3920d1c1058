//! Localisation of a finite semiring at a multiplicative set, plus
//! extension/contraction of k-ideals along homomorphisms and the induced
//! map on k-spectra.
//!
//! Fractions `(a, s)` with `s` in `T` are identified when
//! `u*a*t = u*b*s` for some `u` in `T`; the partition is rebuilt from the
//! raw relation on every pair, so reflexivity, symmetry and transitivity
//! are re-checked at construction instead of trusted. Classes are numbered
//! by their least `(numerator, denominator)` pair.

use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::ideal::{
    generate_ideal, is_k_ideal, k_closure, IdealLattice, MultSet,
};
use crate::semiring::FiniteSemiring;
use crate::set::{CarrierSet, Elem};

/// A localisation `T^{-1} S` together with its canonical homomorphism data.
pub struct Localization<'s> {
    pub base: &'s FiniteSemiring,
    pub denominators: CarrierSet,
    pub ring: FiniteSemiring,
    /// Sorted denominator list; pair `(a, s)` lives at `a * |T| + index(s)`.
    t_list: Vec<Elem>,
    class_of_pair: Vec<Elem>,
    /// `r -> class of r/1`.
    pub canonical: Vec<Elem>,
}

/// Builds `T^{-1} S`. Requires `1 ∈ T`; rejects `0 ∈ T`, which collapses
/// the localisation to a point.
pub fn localize<'s>(base: &'s FiniteSemiring, t: &MultSet) -> Result<Localization<'s>> {
    assert!(
        std::ptr::eq(base, t.ring),
        "multiplicative set belongs to a different semiring"
    );
    if t.members.contains(base.zero()) {
        return Err(Error::Degenerate(
            "denominator set contains 0; the localisation would be trivial".into(),
        ));
    }
    let t_list: Vec<Elem> = t.members.to_vec();
    let nt = t_list.len();
    let pairs: Vec<(Elem, Elem)> =
        base.elements().flat_map(|a| t_list.iter().map(move |&s| (a, s))).collect();

    let related = |&(a, s): &(Elem, Elem), &(b, tt): &(Elem, Elem)| {
        t_list.iter().any(|&u| {
            base.mul(base.mul(u, a), tt) == base.mul(base.mul(u, b), s)
        })
    };

    let mut class_of_pair: Vec<Elem> = vec![0; pairs.len()];
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    for (idx, p) in pairs.iter().enumerate() {
        match reps.iter().position(|r| related(r, p)) {
            Some(c) => class_of_pair[idx] = c as Elem,
            None => {
                class_of_pair[idx] = reps.len() as Elem;
                reps.push(*p);
            }
        }
    }
    // Equivalence check: the partition must coincide with the relation.
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate() {
            assert_eq!(
                related(p, q),
                class_of_pair[i] == class_of_pair[j],
                "fraction relation on {} is not an equivalence at {p:?},{q:?}",
                base.name()
            );
        }
    }

    let pair_index = |a: Elem, s: Elem| {
        let si = t_list.binary_search(&s).expect("denominator not in T");
        a as usize * nt + si
    };
    let class = |a: Elem, s: Elem| class_of_pair[pair_index(a, s)];

    // (a,s) + (b,t) = (at + bs, st);  (a,s)(b,t) = (ab, st).
    let add_pair = |(a, s): (Elem, Elem), (b, tt): (Elem, Elem)| {
        (base.add(base.mul(a, tt), base.mul(b, s)), base.mul(s, tt))
    };
    let mul_pair = |(a, s): (Elem, Elem), (b, tt): (Elem, Elem)| (base.mul(a, b), base.mul(s, tt));

    let m = reps.len();
    let add_t: Vec<Vec<usize>> = reps
        .iter()
        .map(|&p| {
            reps.iter()
                .map(|&q| {
                    let (x, y) = add_pair(p, q);
                    class(x, y) as usize
                })
                .collect()
        })
        .collect();
    let mul_t: Vec<Vec<usize>> = reps
        .iter()
        .map(|&p| {
            reps.iter()
                .map(|&q| {
                    let (x, y) = mul_pair(p, q);
                    class(x, y) as usize
                })
                .collect()
        })
        .collect();

    // Well-definedness across all members of all classes.
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate() {
            let (ci, cj) = (class_of_pair[i] as usize, class_of_pair[j] as usize);
            let (sa, sb) = add_pair(*p, *q);
            let (ma, mb) = mul_pair(*p, *q);
            assert_eq!(add_t[ci][cj], class(sa, sb) as usize, "localised addition ill-defined");
            assert_eq!(
                mul_t[ci][cj],
                class(ma, mb) as usize,
                "localised multiplication ill-defined"
            );
        }
    }

    let one = base.one();
    let ring = FiniteSemiring::from_tables(
        format!("{}@{}", base.name(), t.members),
        add_t,
        mul_t,
        class(base.zero(), one) as usize,
        class(one, one) as usize,
    )
    .expect("localisation of a semiring is a semiring");
    assert_eq!(ring.size(), m);

    let canonical: Vec<Elem> = base.elements().map(|r| class(r, one)).collect();
    let loc = Localization {
        base,
        denominators: t.members,
        ring,
        t_list,
        class_of_pair,
        canonical,
    };

    let hom = loc.canonical_hom();
    assert!(hom.is_valid(), "canonical localisation map must be a homomorphism");
    // Every denominator must become a unit.
    for &s in &loc.t_list {
        let cs = loc.canonical[s as usize];
        let inverse_exists =
            loc.ring.elements().any(|y| loc.ring.mul(cs, y) == loc.ring.one());
        assert!(inverse_exists, "denominator {s} is not invertible in the localisation");
    }
    Ok(loc)
}

impl<'s> Localization<'s> {
    pub fn canonical_hom(&self) -> Hom<'_> {
        Hom { source: self.base, target: &self.ring, map: self.canonical.clone() }
    }

    pub fn class_of(&self, a: Elem, s: Elem) -> Elem {
        let si = self.t_list.binary_search(&s).expect("denominator not in T");
        self.class_of_pair[a as usize * self.t_list.len() + si]
    }

    /// `T^{-1} I`: all fractions with numerator in `I`.
    pub fn fraction_ideal(&self, i: &CarrierSet) -> CarrierSet {
        let mut out = CarrierSet::EMPTY;
        for a in i.iter() {
            for &s in &self.t_list {
                out.insert(self.class_of(a, s));
            }
        }
        out
    }

    /// Contraction `J ∩ S`, the preimage under the canonical map.
    pub fn contract(&self, j: &CarrierSet) -> CarrierSet {
        self.base.elements().filter(|&r| j.contains(self.canonical[r as usize])).collect()
    }

    /// The contracted set `C`: contractions of all ideals of the
    /// localisation, as explicit bitsets.
    pub fn contracted_set(&self, loc_lattice: &IdealLattice) -> Vec<CarrierSet> {
        assert!(std::ptr::eq(loc_lattice.ring, &self.ring));
        let mut out: Vec<CarrierSet> =
            loc_lattice.ideals.iter().map(|j| self.contract(j)).collect();
        out.sort();
        out.dedup();
        out
    }
}

// ---------------------------------------------------------------------------
// Extension and contraction along arbitrary homomorphisms
// ---------------------------------------------------------------------------

/// k-contraction: the preimage of a k-ideal, itself a k-ideal (checked).
pub fn contract_along(h: &Hom, j: &CarrierSet) -> CarrierSet {
    assert!(is_k_ideal(h.target, j), "contraction is defined for k-ideals of the target");
    let out = h.preimage_of(j);
    assert!(is_k_ideal(h.source, &out), "preimage of a k-ideal must be a k-ideal");
    out
}

/// k-extension: the k-closure of the ideal generated by the image.
pub fn extend_along(h: &Hom, i: &CarrierSet) -> CarrierSet {
    assert!(is_k_ideal(h.source, i), "extension is defined for k-ideals of the source");
    let image = h.image_of(i);
    k_closure(h.target, &generate_ideal(h.target, &image))
}

// ---------------------------------------------------------------------------
// Spectral map
// ---------------------------------------------------------------------------

/// The contraction map `Spec_k(S') -> Spec_k(S)` of a homomorphism, with
/// its surjectivity/injectivity flags.
pub struct SpectralMap {
    pub source_spectrum: Vec<CarrierSet>,
    pub target_spectrum: Vec<CarrierSet>,
    /// `(Q, Q^c)` for every k-prime `Q` of the target.
    pub table: Vec<(CarrierSet, CarrierSet)>,
    pub surjective: bool,
    pub injective: bool,
}

/// Builds the spectral map of `h`, checking that every contraction of a
/// k-prime ideal is k-prime.
pub fn spectral_map(
    h: &Hom,
    source_lat: &IdealLattice,
    target_lat: &IdealLattice,
) -> SpectralMap {
    use crate::ideal::is_k_prime_quantified;
    assert!(std::ptr::eq(source_lat.ring, h.source) && std::ptr::eq(target_lat.ring, h.target));
    let source_spectrum: Vec<CarrierSet> = source_lat
        .k_ideals
        .iter()
        .copied()
        .filter(|p| is_k_prime_quantified(source_lat, p))
        .collect();
    let target_spectrum: Vec<CarrierSet> = target_lat
        .k_ideals
        .iter()
        .copied()
        .filter(|q| is_k_prime_quantified(target_lat, q))
        .collect();
    let table: Vec<(CarrierSet, CarrierSet)> =
        target_spectrum.iter().map(|q| (*q, contract_along(h, q))).collect();
    for (q, qc) in &table {
        assert!(
            is_k_prime_quantified(source_lat, qc),
            "contraction of k-prime {q} is not k-prime"
        );
    }
    let mut image: Vec<CarrierSet> = table.iter().map(|(_, qc)| *qc).collect();
    image.sort();
    image.dedup();
    let surjective = image.len() == source_spectrum.len();
    let injective = image.len() == target_spectrum.len();
    SpectralMap { source_spectrum, target_spectrum, table, surjective, injective }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_mult_sets;
    use crate::semiring::{make_boolean, make_product, make_truncated_nat};
    use crate::Budget;

    #[test]
    fn trivial_denominators_reproduce_the_base() {
        let n2 = make_truncated_nat(2).unwrap();
        let t = MultSet::new(&n2, CarrierSet::singleton(1)).unwrap();
        let loc = localize(&n2, &t).unwrap();
        assert_eq!(loc.ring.size(), n2.size());
        let canonical: CarrierSet = loc.canonical.iter().copied().collect();
        assert_eq!(canonical.len(), n2.size(), "canonical map is a bijection");
    }

    #[test]
    fn inverting_the_top_of_n2_gives_b1() {
        let n2 = make_truncated_nat(2).unwrap();
        let t = MultSet::new(&n2, CarrierSet::from_slice(&[1, 2])).unwrap();
        let loc = localize(&n2, &t).unwrap();
        assert_eq!(loc.ring.size(), 2, "1/1 = 2/1 = 1/2, zero stays apart");
        assert_eq!(loc.class_of(1, 1), loc.class_of(2, 1));
        assert_eq!(loc.class_of(1, 1), loc.class_of(1, 2));
        assert_ne!(loc.class_of(0, 1), loc.class_of(1, 1));
        let b1 = make_boolean();
        assert_eq!(loc.ring.to_table().add, b1.to_table().add);
        assert_eq!(loc.ring.to_table().mul, b1.to_table().mul);
    }

    #[test]
    fn unit_denominator_on_product() {
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        let t = MultSet::new(&p, CarrierSet::singleton(3)).unwrap();
        let loc = localize(&p, &t).unwrap();
        assert_eq!(loc.ring.size(), p.size());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let n2 = make_truncated_nat(2).unwrap();
        let t = MultSet { ring: &n2, members: CarrierSet::from_slice(&[0, 1]) };
        assert!(matches!(localize(&n2, &t), Err(Error::Degenerate(_))));
    }

    #[test]
    fn extension_contraction_examples() {
        let budget = Budget::default();
        let n2 = make_truncated_nat(2).unwrap();
        let t = MultSet::new(&n2, CarrierSet::from_slice(&[1, 2])).unwrap();
        let loc = localize(&n2, &t).unwrap();
        let hom = loc.canonical_hom();
        let zero = CarrierSet::singleton(0);
        let extended = extend_along(&hom, &zero);
        assert_eq!(extended, CarrierSet::singleton(loc.ring.zero()));
        let back = contract_along(&hom, &extended);
        assert_eq!(back, zero, "x with xs = 0 for some s in T is only 0");

        // Identity hom: contract and extend are the identity on k-ideals.
        let id = Hom::identity(&n2);
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        for i in &lat.k_ideals {
            assert_eq!(contract_along(&id, i), *i);
            assert_eq!(extend_along(&id, i), *i);
        }
    }

    #[test]
    fn spectral_map_of_identity_is_bijective() {
        let budget = Budget::default();
        let n2 = make_truncated_nat(2).unwrap();
        let id = Hom::identity(&n2);
        let lat = IdealLattice::compute(&n2, &budget).unwrap();
        let sm = spectral_map(&id, &lat, &lat);
        assert!(sm.surjective && sm.injective);
    }

    #[test]
    fn spectral_map_n2_to_b1() {
        let budget = Budget::default();
        let n2 = make_truncated_nat(2).unwrap();
        let b1 = make_boolean();
        let homs = crate::hom::enumerate_homs(&n2, &b1, &budget).unwrap();
        let src = IdealLattice::compute(&n2, &budget).unwrap();
        let tgt = IdealLattice::compute(&b1, &budget).unwrap();
        let sm = spectral_map(&homs[0], &src, &tgt);
        assert_eq!(sm.target_spectrum, vec![CarrierSet::singleton(0)]);
        assert_eq!(sm.table[0].1, CarrierSet::singleton(0));
        assert!(sm.surjective);
    }

    #[test]
    fn embedding_into_product_contracts_coordinate_ideal_to_zero() {
        let budget = Budget::default();
        let b1 = make_boolean();
        let p = make_product(&b1, &b1).unwrap();
        let homs = crate::hom::enumerate_homs(&b1, &p, &budget).unwrap();
        let diagonal = homs.iter().find(|h| h.map == vec![0, 3]).expect("x -> (x,x)");
        let coord = CarrierSet::from_slice(&[0, 2]);
        assert_eq!(contract_along(diagonal, &coord), CarrierSet::singleton(0));
    }

    #[test]
    fn mult_set_sweep_is_deterministic() {
        let n2 = make_truncated_nat(2).unwrap();
        let a = enumerate_mult_sets(&n2);
        let b = enumerate_mult_sets(&n2);
        assert_eq!(a, b);
        assert!(a.contains(&CarrierSet::singleton(1)));
    }
}
