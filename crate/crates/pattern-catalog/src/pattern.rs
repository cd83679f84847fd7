use planar_core::Graph;

use crate::patset::PatSet;
use crate::CatalogError;

/// Pattern graph on at most 64 vertices, adjacency as bit masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    adj: Vec<u64>,
}

impl Pattern {
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self, CatalogError> {
        if k > 64 {
            return Err(CatalogError::TooLarge(k));
        }
        let mut adj = vec![0u64; k];
        for &(u, v) in edges {
            if u >= k || v >= k || u == v {
                return Err(CatalogError::BadEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Pattern { adj })
    }

    pub fn from_graph(g: &Graph) -> Result<Self, CatalogError> {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        Self::from_edges(g.n(), &edges)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.k(), &self.edges()).expect("pattern is simple")
    }

    pub fn k(&self) -> usize {
        self.adj.len()
    }

    pub fn all(&self) -> PatSet {
        PatSet::full(self.k())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> PatSet {
        PatSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.k())
            .flat_map(|u| PatSet(self.adj[u]).iter().filter(move |&v| u < v).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Neighbors of any vertex of `set`, outside `set`.
    pub fn boundary_of(&self, set: PatSet) -> PatSet {
        let mut out = 0u64;
        for v in set.iter() {
            out |= self.adj[v];
        }
        PatSet(out).minus(set)
    }

    /// Connected components of the subgraph induced by `within`, ordered by smallest vertex.
    pub fn components(&self, within: PatSet) -> Vec<PatSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = PatSet::single(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut grow = 0u64;
                for v in frontier.iter() {
                    grow |= self.adj[v];
                }
                let new = PatSet(grow).inter(within).minus(comp);
                comp = comp.union(new);
                frontier = new;
            }
            left = left.minus(comp);
            out.push(comp);
        }
        out
    }

    /// `(X, Y)` with `X ∩ Y = sep` is a separation iff `X \ sep` has no neighbor outside `X`.
    pub fn is_separation(&self, x: PatSet, sep: PatSet) -> bool {
        sep.is_subset(x) && self.boundary_of(x.minus(sep)).is_subset(x)
    }

    /// Vertices with no neighbors.
    pub fn isolated(&self) -> PatSet {
        (0..self.k()).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Induced subpattern on `keep`, vertices renumbered in increasing order.
    pub fn induced(&self, keep: PatSet) -> Pattern {
        let verts: Vec<usize> = keep.iter().collect();
        let adj = verts
            .iter()
            .map(|&v| verts.iter().enumerate().filter(|&(_, &w)| self.has_edge(v, w)).fold(0u64, |m, (i, _)| m | 1 << i))
            .collect();
        Pattern { adj }
    }
}
