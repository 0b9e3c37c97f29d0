//! Edge subsets as machine-word bitsets.

use std::fmt;

/// Largest edge count representable by an [`EdgeSubset`].
pub const MAX_EDGES: usize = 64;

/// A set of edge indices `0..m` with `m <= 64`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub const fn from_bits(bits: u64) -> Self {
        EdgeSubset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..m`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_EDGES);
        if m == MAX_EDGES {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << m) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        EdgeSubset(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_EDGES && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        EdgeSubset(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        EdgeSubset(self.0 & !(1u64 << e))
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    /// Complement within `0..m`.
    pub fn complement(self, m: usize) -> Self {
        EdgeSubset(!self.0 & Self::full(m).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest index, i.e. the minimum under the edge-list order.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Indices `< e`.
    pub fn below(self, e: usize) -> Self {
        EdgeSubset(self.0 & ((1u64 << e) - 1))
    }

    /// Indices `> e`.
    pub fn above(self, e: usize) -> Self {
        if e + 1 >= MAX_EDGES {
            EdgeSubset::EMPTY
        } else {
            EdgeSubset(self.0 & !((1u64 << (e + 1)) - 1))
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every subset of `0..m`, in increasing bit order.
    pub fn all(m: usize) -> impl Iterator<Item = EdgeSubset> {
        let end = 1u64 << m;
        (0..end).map(EdgeSubset)
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSubset::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for EdgeSubset {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Submask enumeration of a fixed mask.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = EdgeSubset;
    fn next(&mut self) -> Option<EdgeSubset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(EdgeSubset(cur))
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{e}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for EdgeSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
