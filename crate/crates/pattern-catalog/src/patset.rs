use std::fmt;

/// A set of pattern vertices (at most 64).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatSet(pub u64);

impl PatSet {
    pub const EMPTY: PatSet = PatSet(0);

    pub fn full(k: usize) -> PatSet {
        if k >= 64 {
            PatSet(u64::MAX)
        } else {
            PatSet((1u64 << k) - 1)
        }
    }

    pub fn single(v: usize) -> PatSet {
        PatSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> PatSet {
        PatSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> PatSet {
        PatSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: PatSet) -> PatSet {
        PatSet(self.0 | o.0)
    }

    pub fn inter(self, o: PatSet) -> PatSet {
        PatSet(self.0 & o.0)
    }

    pub fn minus(self, o: PatSet) -> PatSet {
        PatSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: PatSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                v
            })
        })
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = PatSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(PatSet(cur))
        })
    }

    /// Position of `v` among the members (members below `v`).
    pub fn rank(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }
}

impl FromIterator<usize> for PatSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(PatSet::EMPTY, PatSet::with)
    }
}

impl fmt::Debug for PatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
