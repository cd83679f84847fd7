use counting_kernel::{Monitor, MonitorRole, MonitorSet, Subproblem};
use planar_core::VSet;

/// `sub` with the monitors of `extra` appended.
pub fn extended(sub: &Subproblem, extra: Vec<Monitor>) -> Subproblem {
    let mut monitors = sub.monitors.clone();
    for m in extra {
        monitors.push(m);
    }
    sub.on(sub.verts.clone(), sub.boundary.clone(), monitors)
}

/// Monitor ranges that no map can meet: a range that is empty or asks for more vertices
/// than its set has, a lower bound beaten by the upper bounds of one or two covering sets,
/// or disjoint lower bounds inside one set adding up past its upper bound.
pub fn infeasible(sub: &Subproblem) -> bool {
    let ms: Vec<&Monitor> = sub.monitors.iter().collect();
    let sizes: Vec<usize> = ms.iter().map(|m| m.set.intersection_count(&sub.verts)).collect();
    if ms.iter().zip(&sizes).any(|(m, &size)| m.low > m.upp || m.low > size) {
        return true;
    }
    let mut by_low: Vec<&Monitor> = ms.iter().copied().filter(|m| m.low > 0).collect();
    by_low.sort_by_key(|m| std::cmp::Reverse(m.low));
    let packed = |within: Option<&VSet>| -> usize {
        let mut used = VSet::empty(sub.universe());
        let mut total = 0;
        for m in &by_low {
            let inner = m.set.intersection(&sub.verts);
            if within.is_some_and(|w| !inner.is_subset(w)) || !inner.is_disjoint(&used) {
                continue;
            }
            used.union_with(&inner);
            total += m.low;
        }
        total
    };
    if packed(None) > sub.k() || ms.iter().any(|b| packed(Some(&b.set)) > b.upp) {
        return true;
    }
    for (i, a) in ms.iter().enumerate() {
        if a.low == 0 {
            continue;
        }
        let inner = a.set.intersection(&sub.verts);
        for (j, b) in ms.iter().enumerate() {
            if j == i {
                continue;
            }
            if inner.is_subset(&b.set) && b.upp < a.low {
                return true;
            }
            for c in &ms[j + 1..] {
                if inner.is_subset(&b.set.union(&c.set)) && b.upp + c.upp < a.low {
                    return true;
                }
            }
        }
    }
    false
}

/// The three families "first set reaches `t`", "only the second does", "neither does".
pub fn threshold_families(first: &VSet, second: &VSet, t: usize, k: usize, role: MonitorRole) -> Vec<Vec<Monitor>> {
    if t == 0 {
        return vec![Vec::new()];
    }
    let at_least = |s: &VSet| Monitor::new(s.clone(), t, k, role);
    let below = |s: &VSet| Monitor::new(s.clone(), 0, t - 1, role);
    vec![
        vec![at_least(first)],
        vec![below(first), at_least(second)],
        vec![below(first), below(second)],
    ]
}

/// Monitors of `sub` cut down to `verts`, lower bounds dropped.
pub fn restricted(monitors: &MonitorSet, verts: &VSet) -> MonitorSet {
    MonitorSet::new(monitors.iter().map(|m| Monitor::new(m.set.intersection(verts), 0, m.upp, m.role)).collect())
}
