//! Bitset over a carrier of at most 256 elements.

use std::fmt;

/// Index of a carrier element. Carriers are capped at 256 elements, so one
/// byte per entry suffices everywhere.
pub type Elem = u8;

const LIMBS: usize = 4;

/// Subset of a semiring carrier, bit `i` standing for element `i`.
///
/// Ordering compares the sets as 256-bit integers (most significant limb
/// first), which is the canonical "bitset value" order used to make every
/// enumeration and report deterministic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CarrierSet {
    limbs: [u64; LIMBS],
}

impl CarrierSet {
    pub const EMPTY: CarrierSet = CarrierSet { limbs: [0; LIMBS] };

    pub fn singleton(x: Elem) -> Self {
        let mut s = Self::EMPTY;
        s.insert(x);
        s
    }

    /// The full carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 256, "carrier too large");
        let mut s = Self::EMPTY;
        for i in 0..n {
            s.insert(i as Elem);
        }
        s
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.limbs[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// Returns `true` when `x` was not already present.
    #[inline]
    pub fn insert(&mut self, x: Elem) -> bool {
        let limb = &mut self.limbs[(x >> 6) as usize];
        let bit = 1u64 << (x & 63);
        let fresh = *limb & bit == 0;
        *limb |= bit;
        fresh
    }

    pub fn remove(&mut self, x: Elem) {
        self.limbs[(x >> 6) as usize] &= !(1u64 << (x & 63));
    }

    pub fn union(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..LIMBS {
            r.limbs[i] |= o.limbs[i];
        }
        r
    }

    pub fn intersection(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..LIMBS {
            r.limbs[i] &= o.limbs[i];
        }
        r
    }

    pub fn difference(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..LIMBS {
            r.limbs[i] &= !o.limbs[i];
        }
        r
    }

    pub fn is_empty(&self) -> bool {
        self.limbs == [0; LIMBS]
    }

    pub fn len(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        (0..LIMBS).all(|i| self.limbs[i] & !o.limbs[i] == 0)
    }

    pub fn is_proper_subset(&self, o: &Self) -> bool {
        self != o && self.is_subset(o)
    }

    pub fn is_disjoint(&self, o: &Self) -> bool {
        (0..LIMBS).all(|i| self.limbs[i] & o.limbs[i] == 0)
    }

    pub fn min_elem(&self) -> Option<Elem> {
        self.iter().next()
    }

    pub fn iter(&self) -> CarrierIter {
        CarrierIter { set: *self, limb: 0 }
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn from_slice(xs: &[Elem]) -> Self {
        xs.iter().copied().collect()
    }
}

impl Ord for CarrierSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for i in (0..LIMBS).rev() {
            match self.limbs[i].cmp(&other.limbs[i]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for CarrierSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Elem> for CarrierSet {
    fn from_iter<T: IntoIterator<Item = Elem>>(iter: T) -> Self {
        let mut s = Self::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for CarrierSet {
    type Item = Elem;
    type IntoIter = CarrierIter;
    fn into_iter(self) -> CarrierIter {
        self.iter()
    }
}

pub struct CarrierIter {
    set: CarrierSet,
    limb: usize,
}

impl Iterator for CarrierIter {
    type Item = Elem;
    fn next(&mut self) -> Option<Elem> {
        while self.limb < LIMBS {
            let l = self.set.limbs[self.limb];
            if l == 0 {
                self.limb += 1;
                continue;
            }
            let bit = l.trailing_zeros();
            self.set.limbs[self.limb] &= l - 1;
            return Some((self.limb as u32 * 64 + bit) as Elem);
        }
        None
    }
}

impl fmt::Display for CarrierSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CarrierSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let s = CarrierSet::from_slice(&[3, 0, 200, 65]);
        assert_eq!(s.to_vec(), vec![0, 3, 65, 200]);
        assert_eq!(s.len(), 4);
        assert!(s.contains(200));
        assert!(!s.contains(199));
    }

    #[test]
    fn numeric_order_uses_high_bits_first() {
        let lo = CarrierSet::from_slice(&[0, 1, 2, 3]);
        let hi = CarrierSet::singleton(64);
        assert!(lo < hi);
        assert!(CarrierSet::EMPTY < lo);
    }

    #[test]
    fn subset_relations() {
        let a = CarrierSet::from_slice(&[0, 2]);
        let b = CarrierSet::from_slice(&[0, 1, 2]);
        assert!(a.is_subset(&b));
        assert!(a.is_proper_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(a.is_disjoint(&CarrierSet::singleton(5)));
    }
}
