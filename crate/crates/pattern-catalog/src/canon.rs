//! Canonical forms of vertex-colored graphs: color refinement plus individualization,
//! keeping the lexicographically smallest leaf certificate.

use std::fmt::Write as _;

use planar_core::embed;

use crate::pattern::Pattern;
use crate::CatalogError;

/// Graph on at most 64 vertices with a color per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    adj: Vec<u64>,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(pattern: &Pattern, colors: Vec<u32>) -> Self {
        assert_eq!(pattern.k(), colors.len());
        let adj = (0..pattern.k()).map(|v| pattern.neighbors(v).0).collect();
        ColoredGraph { adj, colors }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> ColoredGraph {
        let n = self.n();
        let mut adj = vec![0u64; n];
        let mut colors = vec![0; n];
        for v in 0..n {
            colors[perm[v]] = self.colors[v];
            for w in 0..n {
                if self.has_edge(v, w) {
                    adj[perm[v]] |= 1 << perm[w];
                }
            }
        }
        ColoredGraph { adj, colors }
    }
}

/// Canonical string of a colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub String);

/// Canonical form; equal iff the colored graphs are isomorphic. Rejects non-planar input.
pub fn canonize(cg: &ColoredGraph) -> Result<CanonicalForm, CatalogError> {
    let edges: Vec<(usize, usize)> =
        (0..cg.n()).flat_map(|u| (u + 1..cg.n()).filter(move |&v| cg.has_edge(u, v)).map(move |v| (u, v))).collect();
    let g = planar_core::Graph::from_edges(cg.n(), &edges).expect("simple by construction");
    embed(&g).map_err(|_| CatalogError::NonPlanar)?;
    Ok(canonical_form(cg))
}

/// Canonical form without the planarity check.
pub fn canonical_form(cg: &ColoredGraph) -> CanonicalForm {
    let n = cg.n();
    let mut palette: Vec<u32> = cg.colors.clone();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<Vec<usize>> =
        palette.iter().map(|&c| (0..n).filter(|&v| cg.colors[v] == c).collect()).collect();
    let start = refine(cg, cells);
    let mut best: Option<Vec<u64>> = None;
    search(cg, start, &mut best);
    let cert = best.unwrap_or_default();
    let mut out = String::new();
    let _ = write!(out, "{n}|");
    for (i, c) in palette.iter().enumerate() {
        let size = cg.colors.iter().filter(|&&x| x == *c).count();
        let _ = write!(out, "{}{c}x{size}", if i > 0 { "," } else { "" });
    }
    out.push('|');
    for word in cert {
        let _ = write!(out, "{word:x}.");
    }
    CanonicalForm(out)
}

/// Equitable refinement; cells are split by neighbor counts into every cell, and the
/// pieces ordered by those counts, so the result depends only on structure.
fn refine(cg: &ColoredGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (cg.adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                    split = true;
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn search(cg: &ColoredGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(cg, &order);
        if best.as_ref().is_none_or(|b| cert < *b) {
            *best = Some(cert);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    let mut sorted = cells[t].clone();
    sorted.sort_unstable();
    for &v in &sorted {
        if tried.iter().any(|&u| twins(cg, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = next[t].iter().copied().filter(|&x| x != v).collect();
        next[t] = vec![v];
        next.insert(t + 1, rest);
        search(cg, refine(cg, next), best);
    }
}

/// Swapping `u` and `v` is an automorphism (same color, same other neighbors).
fn twins(cg: &ColoredGraph, u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    cg.colors[u] == cg.colors[v] && cg.adj[u] & mask == cg.adj[v] & mask
}

/// Adjacency of the graph relabelled by `order` (row-major upper triangle, packed).
fn certificate(cg: &ColoredGraph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut words = Vec::with_capacity(n * n / 64 + 1);
    let mut cur = 0u64;
    let mut bits = 0;
    for i in 0..n {
        for j in i + 1..n {
            cur = cur << 1 | cg.has_edge(order[i], order[j]) as u64;
            bits += 1;
            if bits == 64 {
                words.push(cur);
                cur = 0;
                bits = 0;
            }
        }
    }
    words.push(cur);
    words
}
