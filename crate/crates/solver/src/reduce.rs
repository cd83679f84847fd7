use counting_kernel::{MonitorRole, Subproblem};
use planar_core::VSet;
use reduction_suite::{
    acquire_balance, log_four_thirds, AnnotatedCycle, Geometry, Leaf, Plan, ReductionError, ReductionKind,
    ReductionOutput, ReductionParams, Selection, Sparsifier,
};

/// A child is easy when its interior shrank to three quarters or its budget dropped by `⌈√k⌉`.
pub fn is_easy(parent: &Subproblem, child: &Subproblem) -> bool {
    let before = parent.interior().len();
    let after = child.interior().len();
    let dropped = parent.upp(&parent.verts).saturating_sub(child.upp(&child.verts));
    4 * after <= 3 * before || dropped >= reduction_suite::ceil_sqrt(parent.k())
}

/// Balance on a cycle, then sparsify every child that is not already easy.
pub fn main_reduce(sub: &Subproblem, params: &ReductionParams) -> Result<ReductionOutput, ReductionError> {
    let (geo, plan) = acquire_balance(sub, params)?;
    let core = Sparsifier::new(
        &geo,
        params,
        Selection::Monitored { side: params.side_threshold, cycle: params.cycle_threshold },
    );
    let plan = plan.map_leaves(&mut |leaf: Leaf| match &leaf.cycle {
        Some(_) if is_easy(sub, &leaf.sub) => Plan::leaf(leaf.sub),
        Some(_) => core.run(leaf, params.rounds),
        None => Plan::Leaf(leaf),
    });
    Ok(ReductionOutput { kind: ReductionKind::Balance, plan })
}

/// Monitors created on cycles, separators and arcs.
pub fn small_monitors(sub: &Subproblem) -> usize {
    sub.monitors.iter().filter(|m| m.role == MonitorRole::Small && m.upp > 0).count()
}

/// The set a clean-up step balances: boundary plus the sets of small monitors.
pub fn clean_up_mass(sub: &Subproblem) -> VSet {
    sub.monitors
        .iter()
        .filter(|m| m.role == MonitorRole::Small && m.upp > 0)
        .fold(sub.boundary.clone(), |acc, m| acc.union(&m.set))
        .intersection(&sub.verts)
}

/// One clean-up step: a cycle balanced for `mass`, sparsified towards the heavier side.
pub fn clean_step(sub: &Subproblem, mass: &VSet, params: &ReductionParams) -> Result<ReductionOutput, ReductionError> {
    let mass = mass.intersection(&sub.verts);
    if mass.len() < 4 {
        return Err(ReductionError::NotApplicable(format!("mass {} is too small to balance", mass.len())));
    }
    let geo = Geometry::new(sub)?;
    let c = geo.balanced_cycle(&mass)?;
    let leaf = Leaf { sub: sub.clone(), cycle: Some(AnnotatedCycle::fresh(geo.globals(&c), sub.universe())) };
    let plan = Sparsifier::new(&geo, params, Selection::Mass(mass)).run(leaf, params.rounds);
    Ok(ReductionOutput { kind: ReductionKind::CleanUp, plan })
}

/// Repeated clean-up steps, `log_{4/3}|mass|` deep, each on the share of `mass` a child keeps
/// off its new boundary.
pub fn clean_up(sub: &Subproblem, mass: &VSet, params: &ReductionParams) -> Result<ReductionOutput, ReductionError> {
    let depth = log_four_thirds(mass.len().max(2));
    let mut plan = clean_step(sub, mass, params)?.plan;
    for _ in 1..depth {
        let mut changed = false;
        plan = plan.map_leaves(&mut |leaf: Leaf| {
            let child = &leaf.sub;
            if child.verts == sub.verts {
                return Plan::Leaf(leaf);
            }
            let fresh = child.boundary.difference(&sub.boundary);
            let share = mass.intersection(&child.verts).difference(&fresh);
            match clean_step(child, &share, params) {
                Ok(out) => {
                    changed = true;
                    out.plan
                }
                Err(_) => Plan::Leaf(leaf),
            }
        });
        if !changed {
            break;
        }
    }
    Ok(ReductionOutput { kind: ReductionKind::CleanUp, plan })
}
