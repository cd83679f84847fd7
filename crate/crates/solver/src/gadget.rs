use num_bigint::BigUint;
use num_traits::One;
use planar_core::Graph;

use crate::SolverError;

/// Simple directed graph; antiparallel arcs are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self, SolverError> {
        let mut sorted = arcs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != arcs.len() {
            return Err(SolverError::BadInput("repeated arc".into()));
        }
        if let Some(&(v, w)) = arcs.iter().find(|&&(v, w)| v == w || v >= n || w >= n) {
            return Err(SolverError::BadInput(format!("bad arc ({v}, {w}) on {n} vertices")));
        }
        Ok(Digraph { n, arcs: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, v: usize, w: usize) -> bool {
        self.arcs.binary_search(&(v, w)).is_ok()
    }

    /// Vertices with no incident arc.
    pub fn isolated(&self) -> Vec<usize> {
        let mut touched = vec![false; self.n];
        for &(v, w) in &self.arcs {
            touched[v] = true;
            touched[w] = true;
        }
        (0..self.n).filter(|&v| !touched[v]).collect()
    }

    /// Underlying simple graph.
    pub fn underlying(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.arcs.iter().map(|&(v, w)| (v.min(w), v.max(w))).collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(self.n, &edges).expect("arcs are valid edges")
    }

    /// Same digraph on the vertices of `keep`, renumbered in order.
    pub fn induced(&self, keep: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(v, w)| pos[v] != usize::MAX && pos[w] != usize::MAX)
            .map(|&(v, w)| (pos[v], pos[w]))
            .collect();
        Digraph::new(keep.len(), &arcs).expect("restriction of a valid digraph")
    }
}

/// Every edge `xy` becomes a vertex `u` adjacent to `x` and `y` that lies on a triangle `u v w`;
/// the edge itself is dropped. Induced maps between such graphs send originals to originals
/// and gadgets to gadgets, up to swapping `v` and `w`.
pub fn edge_gadget(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    let mut next = g.n();
    for (x, y) in g.edges() {
        let (u, v, w) = (next, next + 1, next + 2);
        next += 3;
        edges.extend([(x, u), (y, u), (u, v), (u, w), (v, w)]);
    }
    Graph::from_edges(next, &edges).expect("gadget edges are simple")
}

/// Every arc `(v, w)` becomes a path `v a c w` with a pendant `b` at `a`, and every original
/// vertex gets a K4 marker, so that maps cannot confuse originals with path vertices.
pub fn arc_gadget(d: &Digraph) -> Graph {
    let mut edges = Vec::new();
    let mut next = d.n();
    for v in 0..d.n() {
        let marker = [v, next, next + 1, next + 2];
        next += 3;
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((marker[i], marker[j]));
            }
        }
    }
    for &(v, w) in d.arcs() {
        let (a, b, c) = (next, next + 1, next + 2);
        next += 3;
        edges.extend([(v, a), (a, b), (a, c), (c, w)]);
    }
    Graph::from_edges(next, &edges).expect("gadget edges are simple")
}

/// `n (n-1) ... (n-len+1)`.
pub fn falling_factorial(n: usize, len: usize) -> BigUint {
    if len > n {
        return BigUint::default();
    }
    (n - len + 1..=n).fold(BigUint::one(), |acc, f| acc * f)
}
