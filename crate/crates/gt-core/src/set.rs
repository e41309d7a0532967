//! Fixed-width subset arithmetic over a small ground set.
//!
//! Every subset of an `n`-point ground set is a bit pattern in the low `n`
//! bits of a machine word. All operator arithmetic in the crate reduces to
//! bitwise operations on these patterns.

use std::fmt;

/// Hard cap on ground-set size so subset patterns fit a `u16`-sized range.
pub const MAX_POINTS: usize = 16;

/// A subset of an `n`-point ground set, stored as a bit pattern.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubSet {
    bits: u32,
    n: u8,
}

impl SubSet {
    pub fn new(bits: u32, n: usize) -> Self {
        assert!(n <= MAX_POINTS, "ground set larger than {MAX_POINTS}");
        debug_assert_eq!(bits & !Self::mask(n), 0, "bits outside ground set");
        SubSet {
            bits: bits & Self::mask(n),
            n: n as u8,
        }
    }

    fn mask(n: usize) -> u32 {
        if n == 0 {
            0
        } else {
            (1u32 << n) - 1
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::new(0, n)
    }

    pub fn full(n: usize) -> Self {
        Self::new(Self::mask(n), n)
    }

    pub fn singleton(point: usize, n: usize) -> Self {
        assert!(point < n);
        Self::new(1 << point, n)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Ground-set size this subset lives in.
    pub fn width(self) -> usize {
        self.n as usize
    }

    pub fn contains(self, point: usize) -> bool {
        point < self.n as usize && self.bits >> point & 1 == 1
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == Self::mask(self.n as usize)
    }

    pub fn union(self, other: SubSet) -> SubSet {
        debug_assert_eq!(self.n, other.n);
        SubSet {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersect(self, other: SubSet) -> SubSet {
        debug_assert_eq!(self.n, other.n);
        SubSet {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    /// Set difference `self - other`.
    pub fn minus(self, other: SubSet) -> SubSet {
        debug_assert_eq!(self.n, other.n);
        SubSet {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn complement(self) -> SubSet {
        SubSet {
            bits: !self.bits & Self::mask(self.n as usize),
            n: self.n,
        }
    }

    pub fn is_subset_of(self, other: SubSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    pub fn remove(self, point: usize) -> SubSet {
        SubSet {
            bits: self.bits & !(1 << point),
            n: self.n,
        }
    }

    /// Iterate the member points in ascending index order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.n as usize).filter(move |i| bits >> i & 1 == 1)
    }

    /// All `2^n` subsets of an `n`-point ground set, ascending bit pattern.
    pub fn all(n: usize) -> impl Iterator<Item = SubSet> {
        assert!(n <= MAX_POINTS);
        (0..=Self::mask(n)).map(move |bits| SubSet::new(bits, n))
    }
}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in self.points() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A duplicate-free collection of subsets in canonical (ascending bit
/// pattern) order. Represents a generalized topology μ, a trace family μ_x,
/// or an enumeration frontier.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetFamily {
    members: Vec<SubSet>,
    n: u8,
}

impl SetFamily {
    /// Build from any member order; sorts canonically and drops duplicates.
    /// All members must share the same width `n`.
    pub fn new(n: usize, members: impl IntoIterator<Item = SubSet>) -> Self {
        let mut members: Vec<SubSet> = members.into_iter().collect();
        for m in &members {
            assert_eq!(m.width(), n, "family member width mismatch");
        }
        members.sort_unstable();
        members.dedup();
        SetFamily {
            members,
            n: n as u8,
        }
    }

    pub fn width(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: SubSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = SubSet> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[SubSet] {
        &self.members
    }

    /// Union of all members (the empty set for an empty family).
    pub fn union_all(&self) -> SubSet {
        self.iter()
            .fold(SubSet::empty(self.width()), SubSet::union)
    }

    /// Intersection of all members (the full set for an empty family).
    pub fn intersect_all(&self) -> SubSet {
        self.iter()
            .fold(SubSet::full(self.width()), SubSet::intersect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_algebra() {
        let a = SubSet::new(0b011, 3);
        let b = SubSet::new(0b110, 3);
        assert_eq!(a.union(b), SubSet::full(3));
        assert_eq!(a.intersect(b), SubSet::new(0b010, 3));
        assert_eq!(a.minus(b), SubSet::new(0b001, 3));
        assert_eq!(a.complement(), SubSet::new(0b100, 3));
        assert!(SubSet::empty(3).is_subset_of(a));
        assert!(a.is_subset_of(SubSet::full(3)));
        assert!(!a.is_subset_of(b));
    }

    #[test]
    fn subset_points_roundtrip() {
        let s = SubSet::new(0b101, 3);
        assert_eq!(s.points().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn all_subsets_count() {
        assert_eq!(SubSet::all(4).count(), 16);
        assert_eq!(SubSet::all(0).count(), 1);
    }

    #[test]
    fn family_canonical_order_and_dedup() {
        let f = SetFamily::new(
            2,
            [
                SubSet::full(2),
                SubSet::empty(2),
                SubSet::full(2),
                SubSet::new(0b01, 2),
            ],
        );
        assert_eq!(f.len(), 3);
        let bits: Vec<u32> = f.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b00, 0b01, 0b11]);
    }

    #[test]
    fn family_fold_identities() {
        let f = SetFamily::new(3, []);
        assert!(f.union_all().is_empty());
        assert!(f.intersect_all().is_full());
    }
}
