use planar_core::{min_fill_decomposition, TreeDecomposition, VSet};

use crate::brute::brute_table;
use crate::join::{forget, join};
use crate::monitor::{Monitor, MonitorSet};
use crate::subproblem::Subproblem;
use crate::table::AnswerTable;

/// Decomposition of `G[verts]` with bags as global vertex sets.
pub fn decomposition(sub: &Subproblem) -> (TreeDecomposition, Vec<VSet>) {
    let verts = sub.verts.to_vec();
    let local = sub.host.graph.induced(&verts);
    let td = min_fill_decomposition(&local);
    let bags = td.bags.iter().map(|b| VSet::from_iter_in(sub.universe(), b.iter().map(|&i| verts[i]))).collect();
    (td, bags)
}

/// Exact answer table by dynamic programming over a tree decomposition.
///
/// Node `t` answers `G[U_t]` with boundary `bag_t ∪ (B ∩ U_t)`, where `U_t` is the union of
/// the bags below `t`: a brute-force table of the bag alone is joined with every child table
/// after the child forgets what is not shared with the bag or on `B`.
pub fn base_case_solve(sub: &Subproblem) -> AnswerTable {
    let (td, bags) = decomposition(sub);
    let children = td.children();
    let relaxed = MonitorSet::new(sub.monitors.iter().map(|m| Monitor::new(m.set.clone(), 0, m.upp, m.role)).collect());
    let n = sub.universe();
    let mut below: Vec<Option<(VSet, AnswerTable)>> = vec![None; bags.len()];
    for t in (0..bags.len()).rev() {
        let bag = &bags[t];
        let leaf = sub.on(bag.clone(), bag.clone(), relaxed.clone());
        let mut table = brute_table(&leaf);
        let mut covered = bag.clone();
        let mut boundary = bag.clone();
        for &c in &children[t] {
            let (u_c, t_c) = below[c].take().expect("children are finished first");
            let on_b = sub.boundary.intersection(&u_c);
            let shared = bags[c].intersection(bag);
            let t_c = forget(&sub.ctx, &t_c, &shared.union(&on_b));
            boundary.union_with(&on_b);
            table = join(&sub.ctx, &table, &t_c, &shared, &boundary, &relaxed);
            covered.union_with(&u_c);
        }
        below[t] = Some((covered, table));
    }
    let (_, root) = below[0].take().unwrap_or_else(|| (VSet::empty(n), AnswerTable::new()));
    forget(&sub.ctx, &root, &sub.boundary).filtered(|k| sub.monitors.admits(&k.r))
}
