use std::collections::{BTreeSet, VecDeque};

use planar_core::Graph;

use crate::SeparatorError;

/// Vertices reachable from `from` in `g` minus `removed` (`from` itself excluded when removed).
pub fn reach(g: &Graph, from: usize, removed: &BTreeSet<usize>) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    if removed.contains(&from) {
        return seen;
    }
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] && !removed.contains(&w) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Ordered `(source, sink)`-separators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorChain {
    pub source: usize,
    pub sink: usize,
    pub sets: Vec<BTreeSet<usize>>,
}

impl SeparatorChain {
    pub fn new(source: usize, sink: usize, sets: Vec<BTreeSet<usize>>) -> Self {
        SeparatorChain { source, sink, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    fn others(&self, i: usize) -> BTreeSet<usize> {
        self.sets.iter().enumerate().filter(|&(j, _)| j != i).flat_map(|(_, s)| s.iter().copied()).collect()
    }

    /// Vertices of set `i` in no other set.
    pub fn private(&self, i: usize) -> BTreeSet<usize> {
        self.sets[i].difference(&self.others(i)).copied().collect()
    }

    /// Vertices of set `i` shared with some other set.
    pub fn public(&self, i: usize) -> BTreeSet<usize> {
        self.sets[i].intersection(&self.others(i)).copied().collect()
    }

    pub fn is_disjoint(&self) -> bool {
        (0..self.len()).all(|i| self.public(i).is_empty())
    }

    /// Each set separates source from sink in `g` (neither endpoint inside), and for `i < j`
    /// the part of `S_i` outside `S_j` lies on the source side of `S_j` while the part of
    /// `S_j` outside `S_i` lies on the sink side of `S_i`.
    pub fn validate(&self, g: &Graph) -> Result<(), SeparatorError> {
        let from_source: Vec<Vec<bool>> = self.sets.iter().map(|s| reach(g, self.source, s)).collect();
        let from_sink: Vec<Vec<bool>> = self.sets.iter().map(|s| reach(g, self.sink, s)).collect();
        for (i, s) in self.sets.iter().enumerate() {
            if s.contains(&self.source) || s.contains(&self.sink) {
                return Err(SeparatorError::ChainViolation(format!("set {i} contains an endpoint")));
            }
            if from_source[i][self.sink] {
                return Err(SeparatorError::ChainViolation(format!("set {i} does not separate")));
            }
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.sets[i].difference(&self.sets[j]).any(|&v| !from_source[j][v]) {
                    return Err(SeparatorError::ChainViolation(format!("set {i} is not before set {j}")));
                }
                if self.sets[j].difference(&self.sets[i]).any(|&v| !from_sink[i][v]) {
                    return Err(SeparatorError::ChainViolation(format!("set {j} is not after set {i}")));
                }
            }
        }
        Ok(())
    }
}
