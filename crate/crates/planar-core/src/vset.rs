use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of host vertices over a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VSet(FixedBitSet);

impl VSet {
    pub fn empty(universe: usize) -> Self {
        VSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VSet(bits)
    }

    pub fn from_iter_in(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for v in items {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.0.len() && self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    pub fn union(&self, other: &VSet) -> VSet {
        let mut out = self.0.clone();
        out.union_with(&other.0);
        VSet(out)
    }

    pub fn intersection(&self, other: &VSet) -> VSet {
        let mut out = self.0.clone();
        out.intersect_with(&other.0);
        VSet(out)
    }

    pub fn difference(&self, other: &VSet) -> VSet {
        let mut out = self.0.clone();
        out.difference_with(&other.0);
        VSet(out)
    }

    pub fn union_with(&mut self, other: &VSet) {
        self.0.union_with(&other.0);
    }

    pub fn is_subset(&self, other: &VSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersection_count(&self, other: &VSet) -> usize {
        self.0.intersection_count(&other.0)
    }
}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
