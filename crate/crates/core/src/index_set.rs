use std::fmt;

/// A set of simple-root indices (0-based) stored as a bitmask.
///
/// Ranks are capped at [`IndexSet::CAPACITY`], which is far beyond anything
/// the exhaustive searches in this crate can handle anyway.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        IndexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < Self::CAPACITY);
        IndexSet(1u64 << i)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < Self::CAPACITY);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < Self::CAPACITY {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration over the members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self` (including the empty set and `self`), ordered by
    /// increasing size and, within one size, by increasing bitmask.
    pub fn subsets_by_size(self) -> Vec<IndexSet> {
        let mut subs = Vec::with_capacity(1usize << self.len().min(20));
        let mut sub = 0u64;
        loop {
            subs.push(IndexSet(sub));
            if sub == self.0 {
                break;
            }
            // next subset of self in increasing numeric order
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        subs.sort_by_key(|s| (s.len(), s.0));
        subs
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = IndexSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
