use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::plane::PlaneGraph;

/// Tree decomposition: bags plus parent links (node 0 is the root).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("edge {0}-{1} is in no bag")]
    UncoveredEdge(usize, usize),
    #[error("vertex {0} is in no bag")]
    UncoveredVertex(usize),
    #[error("bags holding vertex {0} are not connected")]
    BrokenTrace(usize),
    #[error("parent links do not form a tree rooted at node 0")]
    NotATree,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.bags.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(i);
            }
        }
        ch
    }

    /// Checks edge coverage, vertex coverage and connectivity of every vertex trace.
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        let nodes = self.bags.len();
        if nodes == 0 {
            return if g.n() == 0 { Ok(()) } else { Err(DecompositionError::UncoveredVertex(0)) };
        }
        if self.parent[0].is_some() || (1..nodes).any(|i| self.parent[i].is_none()) {
            return Err(DecompositionError::NotATree);
        }
        // every node must reach the root without cycling
        for start in 0..nodes {
            let (mut cur, mut steps) = (start, 0);
            while let Some(p) = self.parent[cur] {
                cur = p;
                steps += 1;
                if steps > nodes {
                    return Err(DecompositionError::NotATree);
                }
            }
        }
        let sets: Vec<BTreeSet<usize>> = self.bags.iter().map(|b| b.iter().copied().collect()).collect();
        for (u, v) in g.edges() {
            if !sets.iter().any(|s| s.contains(&u) && s.contains(&v)) {
                return Err(DecompositionError::UncoveredEdge(u, v));
            }
        }
        for v in 0..g.n() {
            let holders: Vec<usize> = (0..nodes).filter(|&i| sets[i].contains(&v)).collect();
            if holders.is_empty() {
                return Err(DecompositionError::UncoveredVertex(v));
            }
            // a vertex trace is connected iff exactly one holder has its parent outside the trace
            let tops = holders
                .iter()
                .filter(|&&i| self.parent[i].is_none_or(|p| !sets[p].contains(&v)))
                .count();
            if tops != 1 {
                return Err(DecompositionError::BrokenTrace(v));
            }
        }
        Ok(())
    }
}

/// Greedy min-fill elimination (ties: min degree, then smallest vertex).
pub fn min_fill_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { bags: vec![Vec::new()], parent: vec![None] };
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut bag_of = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill_in(&adj, v), adj[v].len(), v))
            .expect("a vertex remains");
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nbrs {
            adj[a].remove(&v);
        }
        alive[v] = false;
        let mut bag = nbrs;
        bag.push(v);
        bag.sort_unstable();
        bag_of[v] = bag;
        order.push(v);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // node i holds the bag of the i-th eliminated vertex; reverse so the root is node 0
    let node_of = |v: usize| n - 1 - pos[v];
    let mut bags = vec![Vec::new(); n];
    let mut parent = vec![None; n];
    for &v in &order {
        let node = node_of(v);
        bags[node] = bag_of[v].clone();
        let next = bag_of[v].iter().copied().filter(|&w| w != v).min_by_key(|&w| pos[w]);
        parent[node] = next.map(node_of);
    }
    // tie the roots of an elimination forest together
    for p in parent.iter_mut().skip(1) {
        if p.is_none() {
            *p = Some(0);
        }
    }
    TreeDecomposition { bags, parent }
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nbrs: Vec<usize> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Tree decomposition of an embedded graph (min-fill; width certified by the validator).
pub fn tree_decomposition_kouterplanar(g: &PlaneGraph) -> TreeDecomposition {
    min_fill_decomposition(&g.graph())
}
