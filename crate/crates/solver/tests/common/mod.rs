#![allow(dead_code)]

use num_bigint::BigUint;
use pattern_catalog::Pattern;
use planar_core::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use solver::Digraph;

pub fn grid(rows: usize, cols: usize) -> Graph {
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
    Graph::from_edges(rows * cols, &edges).unwrap()
}

/// Stacked triangulation on `n` vertices with each edge kept with probability `keep`.
pub fn random_planar(rng: &mut StdRng, n: usize, keep: f64) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let [a, b, c] = faces.swap_remove(rng.gen_range(0..faces.len()));
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    let kept: Vec<_> = edges.into_iter().filter(|&(a, b)| a < n && b < n && rng.gen_bool(keep)).collect();
    Graph::from_edges(n, &kept).unwrap()
}

pub fn pattern(k: usize, edges: &[(usize, usize)]) -> Pattern {
    Pattern::from_edges(k, edges).unwrap()
}

pub fn path(k: usize) -> Pattern {
    let edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
    pattern(k, &edges)
}

pub fn cycle(k: usize) -> Pattern {
    let edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    pattern(k, &edges)
}

/// A random pattern from a fixed menu of shapes with at most `k` vertices.
pub fn random_pattern(rng: &mut StdRng, k: usize) -> Pattern {
    match rng.gen_range(0..5) {
        0 => path(k),
        1 if k >= 3 => cycle(k),
        2 => pattern(k, &(0..k / 2).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>()),
        3 => pattern(k, &[]),
        _ => {
            let mut edges: Vec<_> = (1..k).map(|v| (rng.gen_range(0..v), v)).collect();
            if k >= 3 && rng.gen_bool(0.5) {
                edges.push((0, 2));
                edges.sort();
                edges.dedup();
            }
            pattern(k, &edges)
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Plain enumeration of injective tuples, checking every pair.
pub fn oracle(p: &Pattern, g: &Graph, induced: bool) -> BigUint {
    let mut image = Vec::new();
    let mut total = 0u64;
    tuples(p.k(), g.n(), &mut image, &mut |img| {
        (0..img.len()).all(|a| {
            (a + 1..img.len()).all(|b| {
                let pe = p.has_edge(a, b);
                let he = g.has_edge(img[a], img[b]);
                if induced { pe == he } else { !pe || he }
            })
        })
    }, &mut total);
    BigUint::from(total)
}

pub fn directed_oracle(p: &Digraph, g: &Digraph) -> BigUint {
    let mut image = Vec::new();
    let mut total = 0u64;
    tuples(p.n(), g.n(), &mut image, &mut |img| p.arcs().iter().all(|&(v, w)| g.has_arc(img[v], img[w])), &mut total);
    BigUint::from(total)
}

fn tuples(k: usize, n: usize, image: &mut Vec<usize>, ok: &mut dyn FnMut(&[usize]) -> bool, total: &mut u64) {
    if image.len() == k {
        if ok(image) {
            *total += 1;
        }
        return;
    }
    for h in 0..n {
        if !image.contains(&h) {
            image.push(h);
            tuples(k, n, image, ok, total);
            image.pop();
        }
    }
}
