#![allow(dead_code)]

use pattern_catalog::{Pattern, PatSet};

pub fn path(k: usize) -> Pattern {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Pattern::from_edges(k, &edges).unwrap()
}

pub fn cycle(k: usize) -> Pattern {
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Pattern::from_edges(k, &edges).unwrap()
}

pub fn star(leaves: usize) -> Pattern {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Pattern::from_edges(leaves + 1, &edges).unwrap()
}

pub fn independent(k: usize) -> Pattern {
    Pattern::from_edges(k, &[]).unwrap()
}

pub fn matching(pairs: usize) -> Pattern {
    let edges: Vec<_> = (0..pairs).map(|i| (2 * i, 2 * i + 1)).collect();
    Pattern::from_edges(2 * pairs, &edges).unwrap()
}

pub fn triangles(count: usize) -> Pattern {
    let edges: Vec<_> =
        (0..count).flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2), (3 * i, 3 * i + 2)]).collect();
    Pattern::from_edges(3 * count, &edges).unwrap()
}

pub fn wheel(rim: usize) -> Pattern {
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
    Pattern::from_edges(rim + 1, &edges).unwrap()
}

pub fn cube() -> Pattern {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|v| [1usize, 2, 4].into_iter().map(move |b| (v, v ^ b)))
        .filter(|&(u, v)| u < v)
        .collect();
    Pattern::from_edges(8, &edges).unwrap()
}

/// Patterns with at most 8 vertices used across the catalog tests.
pub fn zoo() -> Vec<(&'static str, Pattern)> {
    vec![
        ("edge", path(2)),
        ("two isolated", independent(2)),
        ("path3", path(3)),
        ("triangle", cycle(3)),
        ("independent4", independent(4)),
        ("path5", path(5)),
        ("star3", star(3)),
        ("cycle4", cycle(4)),
        ("k4", Pattern::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()),
        ("matching3", matching(3)),
        ("two triangles", triangles(2)),
        ("wheel5", wheel(5)),
        ("cycle7", cycle(7)),
        ("path8", path(8)),
        ("star7", star(7)),
        ("cube", cube()),
        ("matching4", matching(4)),
    ]
}

/// Searches a bijection `pi` of pattern vertices with `pi(a_color) = b_color` on every vertex
/// and edges preserved. `colors_*` are arbitrary labels that must match pointwise.
pub fn isomorphic(a: &Pattern, ca: &[u32], b: &Pattern, cb: &[u32]) -> bool {
    let k = a.k();
    if k != b.k() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut sa = ca.to_vec();
    let mut sb = cb.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; k];
    extend(a, ca, b, cb, 0, &mut image, &mut used)
}

fn extend(
    a: &Pattern,
    ca: &[u32],
    b: &Pattern,
    cb: &[u32],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if v == a.k() {
        return true;
    }
    for w in 0..b.k() {
        if used[w] || ca[v] != cb[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(a, ca, b, cb, v + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

/// Colors making an isomorphism of `P` fix `sep` pointwise and map `X \ S` onto `X' \ S`.
pub fn separation_colors(k: usize, x: PatSet, sep: PatSet) -> Vec<u32> {
    (0..k)
        .map(|v| if sep.contains(v) { 10 + v as u32 } else if x.contains(v) { 1 } else { 2 })
        .collect()
}

/// Every separation (X, Y) of order at most `order` with X inside `within`, as (X, S).
pub fn all_separations(p: &Pattern, order: usize, within: PatSet) -> Vec<(PatSet, PatSet)> {
    let mut out = Vec::new();
    for x in within.inter(p.all()).subsets() {
        for sep in x.subsets().filter(|s| s.len() <= order) {
            if p.is_separation(x, sep) {
                out.push((x, sep));
            }
        }
    }
    out
}

/// Brute-force classes: groups of separations related by a separator-fixing automorphism.
pub fn brute_classes(p: &Pattern, order: usize, within: PatSet) -> Vec<Vec<(PatSet, PatSet)>> {
    let mut classes: Vec<Vec<(PatSet, PatSet)>> = Vec::new();
    for (x, sep) in all_separations(p, order, within) {
        let cx = separation_colors(p.k(), x, sep);
        let home = classes.iter().position(|cls| {
            let (x0, s0) = cls[0];
            s0 == sep && isomorphic(p, &cx, p, &separation_colors(p.k(), x0, s0))
        });
        match home {
            Some(i) => classes[i].push((x, sep)),
            None => classes.push(vec![(x, sep)]),
        }
    }
    classes
}
