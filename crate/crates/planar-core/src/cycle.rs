use std::collections::{HashSet, VecDeque};

use crate::plane::PlaneGraph;
use crate::EmbedError;

/// A simple closed walk `v1 .. vl` (local ids of some [`PlaneGraph`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &PlaneGraph, verts: Vec<usize>) -> Result<Self, EmbedError> {
        if verts.len() < 3 {
            return Err(EmbedError::NotACycle("fewer than three vertices".into()));
        }
        let distinct: HashSet<usize> = verts.iter().copied().collect();
        if distinct.len() != verts.len() {
            return Err(EmbedError::NotACycle("repeated vertex".into()));
        }
        for i in 0..verts.len() {
            let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
            if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
                return Err(EmbedError::NotACycle(format!("{a}-{b} is not an edge")));
            }
        }
        Ok(Cycle { verts })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.verts.len();
        (0..l).map(move |i| (self.verts[i], self.verts[(i + 1) % l]))
    }

    /// Same cycle, starting at position `start` and traversed in the given direction.
    pub fn rotated(&self, start: usize, forward: bool) -> Cycle {
        let l = self.verts.len();
        let verts = (0..l)
            .map(|t| if forward { self.verts[(start + t) % l] } else { self.verts[(start + l - t) % l] })
            .collect();
        Cycle { verts }
    }
}

/// Rooted spanning forest given by parent links.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl SpanningTree {
    pub fn bfs(g: &PlaneGraph, root: usize) -> Self {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.rotation(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        SpanningTree { root, parent, depth }
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().filter(|&d| d != usize::MAX).max().unwrap_or(0)
    }
}

/// The cycle closed by `edge` in `tree`.
pub fn fundamental_cycle(g: &PlaneGraph, tree: &SpanningTree, edge: (usize, usize)) -> Result<Cycle, EmbedError> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(EmbedError::NotACycle(format!("{u}-{v} is not an edge")));
    }
    if tree.contains_edge(u, v) {
        return Err(EmbedError::TreeEdge(u, v));
    }
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        if tree.depth[a] >= tree.depth[b] {
            a = tree.parent[a].ok_or_else(|| EmbedError::NotACycle("endpoints in different trees".into()))?;
            left.push(a);
        } else {
            b = tree.parent[b].ok_or_else(|| EmbedError::NotACycle("endpoints in different trees".into()))?;
            right.push(b);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    Cycle::new(g, left)
}

/// Vertex sets on both sides of a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSides {
    /// Vertices of the closed interior (the side without the outer face).
    pub interior: Vec<usize>,
    /// Vertices of the closed exterior; vertices of other components count as exterior.
    pub exterior: Vec<usize>,
}

impl CycleSides {
    pub fn strict_interior(&self, c: &Cycle) -> Vec<usize> {
        self.interior.iter().copied().filter(|&v| !c.contains(v)).collect()
    }

    pub fn strict_exterior(&self, c: &Cycle) -> Vec<usize> {
        self.exterior.iter().copied().filter(|&v| !c.contains(v)).collect()
    }
}

/// Interior and exterior of `c`, by flooding faces without crossing cycle edges.
pub fn cycle_sides(g: &PlaneGraph, c: &Cycle) -> Result<CycleSides, EmbedError> {
    let faces = g.faces();
    let cyc_edges: HashSet<(usize, usize)> = c.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let flood = |seeds: Vec<usize>| -> Vec<bool> {
        let mut inside = vec![false; faces.len()];
        let mut queue = VecDeque::new();
        for s in seeds {
            if !inside[s] {
                inside[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(f) = queue.pop_front() {
            for &(u, v) in &faces.faces[f] {
                if cyc_edges.contains(&(u.min(v), u.max(v))) {
                    continue;
                }
                let other = faces.face_of((v, u)).expect("reverse dart");
                if !inside[other] {
                    inside[other] = true;
                    queue.push_back(other);
                }
            }
        }
        inside
    };
    let left = flood(c.edges().map(|d| faces.face_of(d).expect("cycle dart")).collect());
    let right = flood(c.edges().map(|(a, b)| faces.face_of((b, a)).expect("cycle dart")).collect());
    if left.iter().zip(&right).any(|(l, r)| *l && *r) {
        return Err(EmbedError::NotACycle("cycle does not separate the faces".into()));
    }
    let outer = g.outer_dart_of(c.vertices()[0]).and_then(|d| faces.face_of(d));
    let interior_faces = match outer {
        Some(id) if left[id] => right,
        _ => left,
    };
    let mut in_int = vec![false; g.n()];
    for (id, f) in faces.faces.iter().enumerate() {
        if interior_faces[id] {
            for &(u, _) in f {
                in_int[u] = true;
            }
        }
    }
    let mut in_ext = vec![true; g.n()];
    for v in 0..g.n() {
        if in_int[v] && !c.contains(v) {
            in_ext[v] = false;
        }
    }
    Ok(CycleSides {
        interior: (0..g.n()).filter(|&v| in_int[v]).collect(),
        exterior: (0..g.n()).filter(|&v| in_ext[v]).collect(),
    })
}
