use counting_kernel::{Monitor, MonitorRole, Subproblem};
use planar_core::VSet;

use crate::families::{extended, infeasible};
use crate::plan::Plan;
use crate::ReductionError;

/// Child `i` asks separators `0..i` for more than `⌊k/p⌋` pattern vertices each and
/// separator `i` for at most that many. Disjoint sets cannot all exceed `k/p`, so the
/// children partition the maps. Infeasible children are dropped; indices are kept.
pub(crate) fn separator_children(sub: &Subproblem, sets: &[VSet]) -> Result<Vec<(usize, Subproblem)>, ReductionError> {
    let sets: Vec<VSet> = sets.iter().map(|s| s.intersection(&sub.verts)).collect();
    for (i, a) in sets.iter().enumerate() {
        if sets[i + 1..].iter().any(|b| !a.is_disjoint(b)) {
            return Err(ReductionError::NotDisjoint);
        }
    }
    if sets.is_empty() {
        return Err(ReductionError::NotApplicable("no separators".into()));
    }
    let k = sub.k();
    let cut = k / sets.len();
    Ok((0..sets.len())
        .map(|i| {
            let mut fam: Vec<Monitor> =
                sets[..i].iter().map(|s| Monitor::new(s.clone(), cut + 1, k, MonitorRole::Small)).collect();
            fam.push(Monitor::new(sets[i].clone(), 0, cut, MonitorRole::Small));
            (i, extended(sub, fam))
        })
        .filter(|(_, child)| !infeasible(child))
        .collect())
}

/// Partition by the first separator holding at most `⌊k/p⌋` pattern vertices.
pub fn reduce_disjoint_separators(sub: &Subproblem, sets: &[VSet]) -> Result<Plan, ReductionError> {
    let parts = separator_children(sub, sets)?.into_iter().map(|(_, child)| Plan::leaf(child)).collect();
    Ok(Plan::Partition { sub: sub.clone(), parts })
}
