//! Subsets of a ground set `[n]`, `n <= 62`, packed into a machine word.
//!
//! Elements are 0-based internally; [`core::fmt::Display`] prints them
//! 1-based to match the usual `[n] = {1, ..., n}` notation.

use core::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole ground set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 63);
        if n == 0 {
            Subset(0)
        } else {
            Subset(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        elems.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement inside `[n]`.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    /// Number of elements of `self` strictly below `i`; the exponent of the
    /// alternating signs used by every differential in the crate.
    #[inline]
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    #[inline]
    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, starting from the empty set, in increasing
    /// bitmask order.
    pub fn subsets(self) -> Submasks {
        Submasks { mask: self.0, next: Some(0) }
    }

    /// Relabels the elements of `self` (which must lie in `ground`) by their
    /// rank inside `ground`.
    pub fn compress(self, ground: Subset) -> Subset {
        debug_assert!(self.is_subset_of(ground));
        let mut out = 0u64;
        for (rank, e) in ground.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << rank;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, ground: Subset) -> Subset {
        let mut out = 0u64;
        for (rank, e) in ground.iter().enumerate() {
            if self.contains(rank) {
                out |= 1 << e;
            }
        }
        Subset(out)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(Subset(cur))
    }
}

/// All subsets of `[n]` ordered by size, then by bitmask.
pub fn subsets_by_size(n: usize) -> alloc::vec::Vec<Subset> {
    let mut all: alloc::vec::Vec<Subset> = Subset::full(n).subsets().collect();
    all.sort_by_key(|s| (s.len(), s.0));
    all
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn submasks_enumerate_every_subset_once() {
        let s = Subset::from_elements([0, 2, 5]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        let mut sorted = subs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let ground = Subset::from_elements([1, 3, 4, 7]);
        let s = Subset::from_elements([3, 7]);
        assert_eq!(s.compress(ground), Subset::from_elements([1, 3]));
        assert_eq!(s.compress(ground).expand(ground), s);
    }

    #[test]
    fn count_below_and_display() {
        let s = Subset::from_elements([0, 2, 3]);
        assert_eq!(s.count_below(3), 2);
        assert_eq!(s.count_below(0), 0);
        assert_eq!(alloc::format!("{s}"), "{1,3,4}");
        assert_eq!(Subset::full(3), Subset(7));
        assert_eq!(Subset::full(0), Subset::EMPTY);
    }

    #[test]
    fn size_order() {
        let all = subsets_by_size(3);
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0].len() <= w[1].len()));
    }
}
