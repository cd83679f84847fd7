use counting_kernel::{Monitor, MonitorRole, Subproblem};
use planar_core::{Cycle, VSet};
use separator_engine::enumerate_alignments_by_pattern_quantiles;

use crate::families::{extended, infeasible, threshold_families};
use crate::geometry::Geometry;
use crate::plan::{AnnotatedCycle, Plan};
use crate::sparsify::{Selection, Sparsifier};
use crate::{ReductionError, ReductionParams};

/// Balanced cycle `C` for `V \ B`, then a partition of the maps by how they meet `C`.
///
/// Maps with at most `4⌊θ/4⌋` vertices on `C` go to a split along `C`. The others are sorted
/// by their quantile alignment of `C` (arc monitors plus a pin on each cut vertex), then by
/// the side of `C` holding enough of them; that side goes through the duality and
/// the resulting children carry the split cycle they were assigned, annotated all heavy.
pub fn acquire_balance(sub: &Subproblem, params: &ReductionParams) -> Result<(Geometry, Plan), ReductionError> {
    params.check()?;
    let geo = Geometry::new(sub)?;
    let c = geo.balanced_cycle(&sub.interior())?;
    let plan = balance_on_cycle(sub, params, &geo, &c)?;
    Ok((geo, plan))
}

/// The partition of [`acquire_balance`] for a given cycle of the triangulation.
pub fn balance_on_cycle(sub: &Subproblem, params: &ReductionParams, geo: &Geometry, c: &Cycle) -> Result<Plan, ReductionError> {
    params.check()?;
    let on_cycle = geo.vset(c.vertices().iter().copied());
    let sides = geo.sides(c)?;
    let k = sub.k();
    let quota = params.theta / 4;
    let n = sub.universe();

    let sparse = extended(sub, vec![Monitor::new(on_cycle.clone(), 0, 4 * quota, MonitorRole::Small)]);
    let mut parts = vec![Plan::split(&sparse, sides.interior.union(&on_cycle), sides.exterior.union(&on_cycle))?];

    let ann = AnnotatedCycle::fresh(geo.globals(c), n);
    let core = Sparsifier::new(
        geo,
        params,
        Selection::Monitored { side: params.balance_side_threshold, cycle: params.balance_cycle_threshold },
    );
    for alignment in enumerate_alignments_by_pattern_quantiles(c, params.theta)? {
        let arcs = alignment.arcs().map(|arc| geo.vset(arc.iter().copied()));
        let mut fam: Vec<Monitor> = arcs[..3].iter().map(|a| Monitor::new(a.clone(), quota, quota, MonitorRole::Small)).collect();
        fam.push(Monitor::new(arcs[3].clone(), quota + 1, k, MonitorRole::Small));
        for end in alignment.arc_ends() {
            fam.push(Monitor::new(VSet::from_iter_in(n, [geo.global(end)]), 1, 1, MonitorRole::Small));
        }
        let aligned = extended(sub, fam);
        if infeasible(&aligned) {
            continue;
        }
        let fams = threshold_families(&sides.interior, &sides.exterior, params.balance_side_threshold, k, MonitorRole::Large);
        parts.push(core.side_partition(&aligned, c, &ann, &alignment, fams, true));
    }
    Ok(Plan::Partition { sub: sub.clone(), parts })
}
