use std::collections::VecDeque;

use crate::plane::PlaneGraph;
use crate::EmbedError;

/// Peeling depth of every vertex: 1 on the outer face, `i + 1` on a face shared with a
/// depth-`i` vertex. Components are peeled independently.
pub fn peel_levels(g: &PlaneGraph) -> Vec<usize> {
    let n = g.n();
    let faces = g.faces();
    let mut vertex_faces: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (id, f) in faces.faces.iter().enumerate() {
        for &(u, _) in f {
            if vertex_faces[u].last() != Some(&id) {
                vertex_faces[u].push(id);
            }
        }
    }
    let mut level = vec![usize::MAX; n];
    let mut face_done = vec![false; faces.len()];
    let mut queue = VecDeque::new();
    for id in g.outer_face_ids(&faces) {
        face_done[id] = true;
        for &(u, _) in &faces.faces[id] {
            if level[u] == usize::MAX {
                level[u] = 1;
                queue.push_back(u);
            }
        }
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            level[v] = 1;
        }
    }
    while let Some(u) = queue.pop_front() {
        for &id in &vertex_faces[u] {
            if face_done[id] {
                continue;
            }
            face_done[id] = true;
            for &(w, _) in &faces.faces[id] {
                if level[w] == usize::MAX {
                    level[w] = level[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    level
}

/// Number of peeling rounds that empty the graph (0 for the empty graph).
pub fn outerplanarity_index(g: &PlaneGraph) -> usize {
    peel_levels(g).into_iter().max().unwrap_or(0)
}

/// `dist(root, v) mod modulus` with one root per component: `v0` for its own component,
/// the smallest outer-face vertex for the others.
pub fn bfs_layers(g: &PlaneGraph, v0: usize, modulus: usize) -> Result<Vec<usize>, EmbedError> {
    if modulus == 0 {
        return Err(EmbedError::InvalidParameter("modulus must be positive".into()));
    }
    if v0 >= g.n() {
        return Err(EmbedError::InvalidParameter(format!("root {v0} out of range")));
    }
    Ok(bfs_distances_rooted(g, v0).into_iter().map(|d| d % modulus).collect())
}

/// BFS distances from per-component roots (see [`bfs_layers`]).
pub fn bfs_distances_rooted(g: &PlaneGraph, v0: usize) -> Vec<usize> {
    let n = g.n();
    let outer = g.outer_vertices();
    let mut dist = vec![usize::MAX; n];
    let mut roots = vec![v0];
    for comp in g.components() {
        if comp.binary_search(&v0).is_err() {
            let root = comp.iter().copied().find(|v| outer.binary_search(v).is_ok()).unwrap_or(comp[0]);
            roots.push(root);
        }
    }
    for root in roots {
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.rotation(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// Smallest vertex on the outer face of the component of vertex 0 (or 0 if isolated).
pub fn default_root(g: &PlaneGraph) -> usize {
    let outer = g.outer_vertices();
    let comp0 = g.components().into_iter().next().unwrap_or_default();
    comp0.into_iter().find(|v| outer.binary_search(v).is_ok()).unwrap_or(0)
}

/// Baker slices: `A_i` = vertices whose BFS residue modulo `k + 1` differs from `i`.
pub fn baker_slices(g: &PlaneGraph, k: usize) -> Result<Vec<Vec<usize>>, EmbedError> {
    if k == 0 {
        return Err(EmbedError::InvalidParameter("k must be positive".into()));
    }
    if g.n() == 0 {
        return Ok(vec![Vec::new(); k + 1]);
    }
    let layer = bfs_layers(g, default_root(g), k + 1)?;
    Ok((0..=k).map(|i| (0..g.n()).filter(|&v| layer[v] != i).collect()).collect())
}
