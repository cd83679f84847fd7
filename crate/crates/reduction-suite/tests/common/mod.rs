#![allow(dead_code)]

use counting_kernel::{brute_table, AnswerTable, EdgeRule, Host, Monitor, MonitorRole, PatternContext, Subproblem};
use pattern_catalog::Pattern;
use planar_core::{embed, Graph, VSet};
use reduction_suite::Plan;

/// `rows × cols` grid; `diag[i]` adds the down-right diagonal of cell `i` (cyclically).
pub fn grid(rows: usize, cols: usize, diag: &[bool]) -> Graph {
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
            if r + 1 < rows && c + 1 < cols && !diag.is_empty() && diag[(r * cols + c) % diag.len()] {
                edges.push((id(r, c), id(r + 1, c + 1)));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges).unwrap()
}

/// Stacked triangulation grown by splitting faces, then thinned.
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
    let kept: Vec<_> = edges.into_iter().filter(|_| pick.next().copied().unwrap_or(0) % 1000 < keep_permille).collect();
    Graph::from_edges(n, &kept).unwrap()
}

pub fn path_pattern(k: usize) -> Pattern {
    let edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
    Pattern::from_edges(k, &edges).unwrap()
}

pub fn pattern(k: usize, edges: &[(usize, usize)]) -> Pattern {
    Pattern::from_edges(k, edges).unwrap()
}

pub fn top(g: &Graph, p: Pattern, rule: EdgeRule) -> Subproblem {
    Subproblem::top(Host::new(embed(g).unwrap()), PatternContext::new(p, rule))
}

pub fn with_monitor(sub: &Subproblem, set: VSet, low: usize, upp: usize) -> Subproblem {
    let mut monitors = sub.monitors.clone();
    monitors.push(Monitor::new(set, low, upp, MonitorRole::Small));
    sub.on(sub.verts.clone(), sub.boundary.clone(), monitors)
}

pub fn vset(sub: &Subproblem, items: impl IntoIterator<Item = usize>) -> VSet {
    VSet::from_iter_in(sub.universe(), items)
}

/// The plan evaluated over brute-force leaf tables.
pub fn evaluated(plan: &Plan) -> AnswerTable {
    plan.eval(&brute_table)
}

pub fn assert_golden(plan: &Plan) {
    let expected = brute_table(plan.sub());
    assert_eq!(evaluated(plan), expected, "plan {} disagrees with the direct table", plan.shape());
}

