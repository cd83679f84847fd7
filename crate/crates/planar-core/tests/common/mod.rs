#![allow(dead_code)]

use planar_core::{embed, Graph, PlaneGraph};

pub fn grid_edges(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    edges
}

pub fn grid(rows: usize, cols: usize) -> PlaneGraph {
    let g = Graph::from_edges(rows * cols, &grid_edges(rows, cols)).unwrap();
    embed(&g).unwrap()
}

pub fn cycle_graph(n: usize) -> PlaneGraph {
    let edges: Vec<_> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    embed(&Graph::from_edges(n, &edges).unwrap()).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Stacked triangulation grown from a seed by splitting faces, then thinned.
/// `choices` drives every random decision.
pub fn random_planar(n: usize, choices: &[usize], keep_permille: usize) -> Graph {
    let n = n.max(3);
    let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut pick = choices.iter().cycle();
    for v in 3..n {
        let f = pick.next().copied().unwrap_or(0) % faces.len();
        let [a, b, c] = faces.swap_remove(f);
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        edges.extend([(a.min(v), a.max(v)), (b.min(v), b.max(v)), (c.min(v), c.max(v))]);
    }
    let kept: Vec<_> = edges
        .into_iter()
        .filter(|_| pick.next().copied().unwrap_or(0) % 1000 < keep_permille)
        .collect();
    Graph::from_edges(n, &kept).unwrap()
}

/// Literal peeling: remove outer-face vertices round by round.
pub fn peel_rounds(g: &PlaneGraph) -> usize {
    let mut current = g.clone();
    let mut rounds = 0;
    while current.n() > 0 {
        let outer = current.outer_vertices();
        let keep: Vec<usize> = (0..current.n()).filter(|v| outer.binary_search(v).is_err()).collect();
        current = current.induced(&keep);
        rounds += 1;
    }
    rounds
}
