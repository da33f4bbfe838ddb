use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of the generators, stored as a bitmask over generator indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);
    pub const MAX_RANK: usize = 32;

    pub fn full(rank: usize) -> Self {
        if rank >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        GenSet(indices.into_iter().fold(0, |acc, s| acc | (1 << s)))
    }

    pub fn contains(self, s: usize) -> bool {
        s < 32 && self.0 & (1 << s) != 0
    }

    pub fn insert(self, s: usize) -> Self {
        GenSet(self.0 | (1 << s))
    }

    pub fn remove(self, s: usize) -> Self {
        GenSet(self.0 & !(1 << s))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn difference(self, other: GenSet) -> Self {
        GenSet(self.0 & !other.0)
    }

    /// Generator indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&s| self.contains(s))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let mask = self.0 as u64;
        let mut sub: u64 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let current = GenSet(sub as u32);
            sub = (sub.wrapping_sub(mask)) & mask;
            if sub == 0 {
                done = true;
            }
            Some(current)
        })
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_three() {
        let all: Vec<_> = GenSet::full(3).subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], GenSet::EMPTY);
        assert_eq!(*all.last().unwrap(), GenSet::full(3));
        assert_eq!(GenSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn membership() {
        let s = GenSet::from_indices([0, 2]);
        assert!(s.contains(0) && !s.contains(1) && s.contains(2));
        assert_eq!(s.len(), 2);
        assert!(GenSet::singleton(2).is_subset(s));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(s.remove(0), GenSet::singleton(2));
    }
}
