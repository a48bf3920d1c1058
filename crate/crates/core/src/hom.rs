//! Semiring homomorphisms and their exhaustive enumeration.

use crate::budget::Budget;
use crate::error::Result;
use crate::semiring::FiniteSemiring;
use crate::set::{CarrierSet, Elem};

/// A total map preserving both operations and both constants.
#[derive(Clone)]
pub struct Hom<'s> {
    pub source: &'s FiniteSemiring,
    pub target: &'s FiniteSemiring,
    pub map: Vec<Elem>,
}

impl<'s> Hom<'s> {
    pub fn identity(ring: &'s FiniteSemiring) -> Self {
        Hom { source: ring, target: ring, map: ring.elements().collect() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    /// Re-verifies all four preservation equations, independently of however
    /// the map was produced.
    pub fn is_valid(&self) -> bool {
        if self.map.len() != self.source.size() {
            return false;
        }
        if self.apply(self.source.zero()) != self.target.zero()
            || self.apply(self.source.one()) != self.target.one()
        {
            return false;
        }
        self.source.elements().all(|x| {
            self.source.elements().all(|y| {
                self.apply(self.source.add(x, y)) == self.target.add(self.apply(x), self.apply(y))
                    && self.apply(self.source.mul(x, y))
                        == self.target.mul(self.apply(x), self.apply(y))
            })
        })
    }

    pub fn is_surjective(&self) -> bool {
        let image: CarrierSet = self.map.iter().copied().collect();
        image.len() == self.target.size()
    }

    pub fn image_of(&self, s: &CarrierSet) -> CarrierSet {
        s.iter().map(|x| self.apply(x)).collect()
    }

    pub fn preimage_of(&self, t: &CarrierSet) -> CarrierSet {
        self.source.elements().filter(|&x| t.contains(self.apply(x))).collect()
    }
}

impl std::fmt::Debug for Hom<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hom({} -> {}, {:?})", self.source.name(), self.target.name(), self.map)
    }
}

/// All homomorphisms from `source` to `target`, by backtracking with
/// constraint propagation.
///
/// Zero and one are pinned first; whenever both arguments of a table cell
/// have images, the cell's image is forced, so the additive closure of `1`
/// never branches. Results are sorted by map array, so the order is
/// independent of the search.
pub fn enumerate_homs<'s>(
    source: &'s FiniteSemiring,
    target: &'s FiniteSemiring,
    budget: &Budget,
) -> Result<Vec<Hom<'s>>> {
    const UNSET: i16 = -1;
    let n = source.size();
    let mut assignment: Vec<i16> = vec![UNSET; n];
    assignment[source.zero() as usize] = target.zero() as i16;
    assignment[source.one() as usize] = target.one() as i16;
    let mut out: Vec<Vec<Elem>> = Vec::new();

    // Propagates forced images; returns false on conflict. `trail` records
    // cells set here so the caller can undo them.
    fn propagate(
        source: &FiniteSemiring,
        target: &FiniteSemiring,
        assignment: &mut Vec<i16>,
        trail: &mut Vec<usize>,
        budget: &Budget,
    ) -> Result<bool> {
        loop {
            budget.charge(source.size() as u64 * source.size() as u64, "enumerate_homs")?;
            let mut changed = false;
            for x in source.elements() {
                let fx = assignment[x as usize];
                if fx < 0 {
                    continue;
                }
                for y in source.elements() {
                    let fy = assignment[y as usize];
                    if fy < 0 {
                        continue;
                    }
                    for (cell, forced) in [
                        (source.add(x, y), target.add(fx as Elem, fy as Elem)),
                        (source.mul(x, y), target.mul(fx as Elem, fy as Elem)),
                    ] {
                        let slot = &mut assignment[cell as usize];
                        if *slot < 0 {
                            *slot = forced as i16;
                            trail.push(cell as usize);
                            changed = true;
                        } else if *slot != forced as i16 {
                            return Ok(false);
                        }
                    }
                }
            }
            if !changed {
                return Ok(true);
            }
        }
    }

    fn search(
        source: &FiniteSemiring,
        target: &FiniteSemiring,
        assignment: &mut Vec<i16>,
        out: &mut Vec<Vec<Elem>>,
        budget: &Budget,
    ) -> Result<()> {
        let mut trail = Vec::new();
        let consistent = propagate(source, target, assignment, &mut trail, budget)?;
        if consistent {
            match assignment.iter().position(|&v| v < 0) {
                None => out.push(assignment.iter().map(|&v| v as Elem).collect()),
                Some(free) => {
                    for candidate in target.elements() {
                        assignment[free] = candidate as i16;
                        search(source, target, assignment, out, budget)?;
                    }
                    assignment[free] = -1;
                }
            }
        }
        for cell in trail {
            assignment[cell] = -1;
        }
        Ok(())
    }

    search(source, target, &mut assignment, &mut out, budget)?;
    out.sort();
    out.dedup();
    let homs: Vec<Hom<'s>> =
        out.into_iter().map(|map| Hom { source, target, map }).collect();
    for h in &homs {
        assert!(h.is_valid(), "enumerated hom failed independent re-verification");
    }
    Ok(homs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{make_boolean, make_chain_lattice, make_truncated_nat};

    #[test]
    fn b1_endomorphisms() {
        let b1 = make_boolean();
        let homs = enumerate_homs(&b1, &b1, &Budget::default()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map, vec![0, 1]);
    }

    #[test]
    fn n2_to_b1_is_forced() {
        let n2 = make_truncated_nat(2).unwrap();
        let b1 = make_boolean();
        let homs = enumerate_homs(&n2, &b1, &Budget::default()).unwrap();
        assert_eq!(homs.len(), 1, "2 = 1 + 1 forces 2 -> 1");
        assert_eq!(homs[0].map, vec![0, 1, 1]);
    }

    #[test]
    fn chain_to_b1_has_two_homs() {
        let c3 = make_chain_lattice(3).unwrap();
        let b1 = make_boolean();
        let homs = enumerate_homs(&c3, &b1, &Budget::default()).unwrap();
        let maps: Vec<_> = homs.iter().map(|h| h.map.clone()).collect();
        assert_eq!(maps, vec![vec![0, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn budget_error_is_explicit() {
        let c3 = make_chain_lattice(3).unwrap();
        let b1 = make_boolean();
        let tiny = Budget::new(1);
        assert!(enumerate_homs(&c3, &b1, &tiny).is_err());
    }
}
