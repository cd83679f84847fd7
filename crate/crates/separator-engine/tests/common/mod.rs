#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use planar_core::{embed, triangulate, Cycle, FaceScope, Graph, PlaneGraph};
use separator_engine::WeightAssignment;

pub fn plane(n: usize, edges: &[(usize, usize)]) -> PlaneGraph {
    embed(&Graph::from_edges(n, edges).unwrap()).unwrap()
}

pub fn complete(n: usize) -> PlaneGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    plane(n, &edges)
}

pub fn octahedron() -> PlaneGraph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if (v != u + 3 || u >= 3)
                && !(u < 3 && v == u + 3) {
                    edges.push((u, v));
                }
        }
    }
    plane(6, &edges)
}

pub fn cycle_graph(n: usize) -> PlaneGraph {
    let edges: Vec<_> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    plane(n, &edges)
}

/// Grid with one diagonal per cell; `diag` picks the direction of each cell's diagonal.
pub fn diagonal_grid(rows: usize, cols: usize, diag: &[bool]) -> PlaneGraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    let mut cell = 0;
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
            if r + 1 < rows && c + 1 < cols {
                let flip = diag.get(cell % diag.len().max(1)).copied().unwrap_or(false);
                cell += 1;
                if flip {
                    edges.push((id(r, c + 1), id(r + 1, c)));
                } else {
                    edges.push((id(r, c), id(r + 1, c + 1)));
                }
            }
        }
    }
    plane(rows * cols, &edges)
}

/// Stacked triangulation on `n ≥ 3` vertices: every new vertex splits a chosen face.
pub fn stacked(n: usize, choices: &[usize]) -> PlaneGraph {
    let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut pick = choices.iter().cycle();
    for v in 3..n {
        let f = pick.next().copied().unwrap_or(0) % faces.len();
        let [a, b, c] = faces.swap_remove(f);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    plane(n, &edges)
}

/// Boundary cycle of a disk: the outer face walk.
pub fn outer_cycle(g: &PlaneGraph) -> Cycle {
    let faces = g.faces();
    let id = faces.face_of(g.outer_darts()[0]).unwrap();
    Cycle::new(g, faces.vertices(id)).unwrap()
}

pub fn all_triangulated(g: &PlaneGraph) -> PlaneGraph {
    triangulate(g, FaceScope::All).unwrap()
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer weights `raw` normalised to sum one; shifted up until every weight is at most 1/4.
pub fn proper_weights(raw: &[u32]) -> WeightAssignment {
    let mut ints: Vec<i64> = raw.iter().map(|&x| x as i64).collect();
    let max = *ints.iter().max().unwrap();
    let sum: i64 = ints.iter().sum();
    if sum == 0 || 4 * max > sum {
        let shift = max.max(1);
        for x in ints.iter_mut() {
            *x += shift;
        }
    }
    let total: i64 = ints.iter().sum();
    WeightAssignment::new(ints.iter().enumerate().map(|(v, &x)| (v, rational(x, total)))).unwrap()
}
