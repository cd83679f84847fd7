use std::collections::{BTreeMap, BTreeSet, VecDeque};

use counting_kernel::{MonitorRole, Subproblem};
use planar_core::{Cycle, VSet};
use separator_engine::{align, apex_graph, menger_plus, reach, split_cycle, Alignment, Direction, MengerOutcome};

use crate::chain::{reduce_nearly_disjoint_paths, NestedCycle};
use crate::families::{extended, infeasible, threshold_families};
use crate::geometry::{Geometry, Side, SideGraph};
use crate::plan::{AnnotatedCycle, Leaf, Plan};
use crate::separators::separator_children;
use crate::{ReductionError, ReductionParams};

/// How a round picks the side of a cycle and the cycle through a separator.
#[derive(Clone, Debug)]
pub enum Selection {
    /// Partition by monitors: a side holding at least `side` pattern vertices, then the
    /// split cycle whose interior holds at least `cycle`, with a third child for neither.
    Monitored { side: usize, cycle: usize },
    /// Follow the larger share of a fixed vertex set; no monitors are added.
    Mass(VSet),
}

/// Annotated-cycle sparsification on partition children of one subproblem. All plans share
/// the vertex set of the subproblem the geometry was built from.
pub struct Sparsifier<'a> {
    geo: &'a Geometry,
    params: &'a ReductionParams,
    selection: Selection,
}

impl<'a> Sparsifier<'a> {
    pub fn new(geo: &'a Geometry, params: &'a ReductionParams, selection: Selection) -> Self {
        Sparsifier { geo, params, selection }
    }

    /// `rounds` rounds on every leaf carrying a cycle, then a split on each remaining cycle.
    pub fn run(&self, leaf: Leaf, rounds: usize) -> Plan {
        let mut plan = Plan::Leaf(leaf);
        for _ in 0..rounds {
            plan = plan.map_leaves(&mut |l| if l.cycle.is_some() { self.round(l) } else { Plan::Leaf(l) });
        }
        plan.map_leaves(&mut |l| if l.cycle.is_some() { self.finish(l) } else { Plan::Leaf(l) })
    }

    /// Split of the leaf's subproblem along its cycle; the leaf, without cycle, if that fails.
    pub fn finish(&self, leaf: Leaf) -> Plan {
        let Some(ann) = &leaf.cycle else { return Plan::Leaf(leaf) };
        let split = || -> Result<Plan, ReductionError> {
            let c = self.geo.cycle(&ann.verts)?;
            let sides = self.geo.sides(&c)?;
            let on = ann.vertex_set();
            Plan::split(&leaf.sub, sides.interior.union(&on), sides.exterior.union(&on))
        };
        split().unwrap_or_else(|_| Plan::leaf(leaf.sub.clone()))
    }

    /// One round: align by heavy vertices, pick a side, run the duality on it and dispatch.
    pub fn round(&self, leaf: Leaf) -> Plan {
        let Some(ann) = leaf.cycle.clone() else { return Plan::Leaf(leaf) };
        let Ok(c) = self.geo.cycle(&ann.verts) else { return self.finish(leaf) };
        let heavy = |v: usize| ann.heavy.contains(self.geo.global(v));
        let Ok(alignment) = align(&c, heavy) else { return self.finish(leaf) };
        let Ok(sides) = self.geo.sides(&c) else { return self.finish(leaf) };
        match &self.selection {
            Selection::Monitored { side, .. } => {
                let fams = threshold_families(&sides.interior, &sides.exterior, *side, leaf.sub.k(), MonitorRole::Large);
                self.side_partition(&leaf.sub, &c, &ann, &alignment, fams, false)
            }
            Selection::Mass(mass) => {
                let side = if mass.intersection_count(&sides.interior) >= mass.intersection_count(&sides.exterior) {
                    Side::Interior
                } else {
                    Side::Exterior
                };
                self.branch(&leaf.sub, &c, &ann, &alignment, side, false)
            }
        }
    }

    /// Children for "interior heavy", "exterior heavy" and "neither", from three families.
    pub(crate) fn side_partition(
        &self,
        sub: &Subproblem,
        c: &Cycle,
        ann: &AnnotatedCycle,
        alignment: &Alignment,
        fams: Vec<Vec<counting_kernel::Monitor>>,
        fresh: bool,
    ) -> Plan {
        let sides = [Some(Side::Interior), Some(Side::Exterior), None];
        let parts = fams
            .into_iter()
            .zip(sides)
            .map(|(fam, side)| (extended(sub, fam), side))
            .filter(|(child, _)| !infeasible(child))
            .map(|(child, side)| match side {
                Some(side) => self.branch(&child, c, ann, alignment, side, fresh),
                None => Plan::leaf(child),
            })
            .collect();
        Plan::Partition { sub: sub.clone(), parts }
    }

    /// The duality on one side of `c`: a separator partition with split cycles, the nested
    /// chain, or the plain split when neither applies.
    pub(crate) fn branch(
        &self,
        sub: &Subproblem,
        c: &Cycle,
        ann: &AnnotatedCycle,
        alignment: &Alignment,
        side: Side,
        fresh: bool,
    ) -> Plan {
        let fallback = || self.finish(Leaf { sub: sub.clone(), cycle: Some(ann.clone()) });
        let Ok(sg) = self.geo.side_graph(c, side) else { return fallback() };
        let Ok(local) = sg.aligned(alignment) else { return fallback() };
        match menger_plus(&sg.plane, &local, self.params.p, self.params.q) {
            Ok(MengerOutcome::DisjointSeparators(chain)) => {
                let sets: Vec<VSet> = chain.sets.iter().map(|s| self.geo.vset(sg.tri_path(&s.iter().copied().collect::<Vec<_>>()))).collect();
                let Ok(children) = separator_children(sub, &sets) else { return fallback() };
                let parts = children
                    .into_iter()
                    .map(|(i, child)| self.cycle_split(child, c, ann, &sg, &chain.sets[i], &sets[i], fresh))
                    .collect();
                Plan::Partition { sub: sub.clone(), parts }
            }
            Ok(MengerOutcome::NearlyDisjointPaths { paths, .. }) => {
                self.nested(sub, &sg, &local, &paths).unwrap_or_else(|_| fallback())
            }
            Err(_) => fallback(),
        }
    }

    /// Splits `c` by a path through the separator and selects one of the two cycles.
    #[allow(clippy::too_many_arguments)]
    fn cycle_split(
        &self,
        child: Subproblem,
        c: &Cycle,
        ann: &AnnotatedCycle,
        sg: &SideGraph,
        separator: &BTreeSet<usize>,
        separator_global: &VSet,
        fresh: bool,
    ) -> Plan {
        let keep = Leaf { sub: child.clone(), cycle: Some(ann.clone()) };
        let Some(path) = path_through(sg, separator) else { return self.finish(keep) };
        let Ok((ccw, cw)) = split_cycle(&self.geo.tri, c, &sg.tri_path(&path)) else { return self.finish(keep) };
        let annotate = |alpha: &Cycle| {
            let verts = self.geo.globals(alpha);
            if fresh {
                return AnnotatedCycle::fresh(verts, self.geo.universe());
            }
            let on = VSet::from_iter_in(self.geo.universe(), verts.iter().copied());
            let discarded = ann.discarded.intersection(&on);
            let heavy = ann.heavy.intersection(&on).difference(separator_global).difference(&discarded);
            let light = on.difference(&heavy).difference(&discarded);
            AnnotatedCycle { verts, heavy, light, discarded }
        };
        let (Ok(ccw_sides), Ok(cw_sides)) = (self.geo.sides(&ccw), self.geo.sides(&cw)) else { return self.finish(keep) };
        match &self.selection {
            Selection::Monitored { cycle, .. } => {
                let fams = threshold_families(&ccw_sides.interior, &cw_sides.interior, *cycle, child.k(), MonitorRole::Large);
                let cycles = [Some(&ccw), Some(&cw), None];
                let parts = fams
                    .into_iter()
                    .zip(cycles)
                    .map(|(fam, alpha)| (extended(&child, fam), alpha))
                    .filter(|(sub, _)| !infeasible(sub))
                    .map(|(sub, alpha)| Plan::Leaf(Leaf { sub, cycle: alpha.map(annotate) }))
                    .collect();
                Plan::Partition { sub: child, parts }
            }
            Selection::Mass(mass) => {
                let spread = |s: &crate::geometry::Sides| {
                    mass.intersection_count(&s.interior).max(mass.intersection_count(&s.exterior))
                };
                let alpha = if spread(&ccw_sides) <= spread(&cw_sides) { &ccw } else { &cw };
                Plan::Leaf(Leaf { sub: child, cycle: Some(annotate(alpha)) })
            }
        }
    }

    /// Nested rings from the outermost pairs of the non-crossing paths. Ring `i` is the
    /// pair `P_i, P_{L-1-i}` closed by the stretch of the cycle enclosed between them.
    fn nested(&self, sub: &Subproblem, sg: &SideGraph, a: &Alignment, paths: &[Vec<usize>]) -> Result<Plan, ReductionError> {
        let apexes = apex_graph(&sg.plane, a)?;
        let horizontal = apexes.widened(&[Direction::Down, Direction::Up]);
        let (left, right) = (apexes.apex(Direction::Left), apexes.apex(Direction::Right));
        let inner: Vec<Vec<usize>> =
            paths.iter().map(|p| p.iter().copied().filter(|&v| v < apexes.base).collect()).collect();
        let needed = sub.k().min(sub.upp(&sub.verts)) + 1;
        if inner.len() < 2 * needed {
            return Err(ReductionError::ChainRejected(format!("{} paths, need {}", inner.len(), 2 * needed)));
        }
        let cycle: BTreeSet<usize> = sg.cycle.vertices().iter().copied().collect();
        let last = inner.len() - 1;
        let cycles = (0..needed)
            .map(|i| {
                let mut ring: BTreeSet<usize> = inner[i].iter().chain(&inner[last - i]).copied().collect();
                let from_left = reach(&horizontal, left, &ring);
                let from_right = reach(&horizontal, right, &ring);
                let region: Vec<usize> =
                    (0..apexes.base).filter(|&v| ring.contains(&v) || (!from_left[v] && !from_right[v])).collect();
                ring.extend(region.iter().copied().filter(|v| cycle.contains(v)));
                let ring: Vec<usize> = ring.into_iter().collect();
                NestedCycle { ring: self.geo.vset(sg.tri_path(&ring)), region: self.geo.vset(sg.tri_path(&region)) }
            })
            .collect();
        reduce_nearly_disjoint_paths(sub, cycles)
    }
}

/// A path with both ends on the cycle and inner vertices off it, choosing the pair of ends
/// farthest apart along the cycle. Inner vertices come from the separator when it has any
/// off the cycle; otherwise the path joins two separator vertices on the cycle through the
/// strict side (or by a chord).
fn path_through(sg: &SideGraph, separator: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let g = &sg.plane;
    let cyc = sg.cycle.vertices();
    let len = cyc.len();
    let position: BTreeMap<usize, usize> = cyc.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let spread = |a: usize, b: usize| {
        let gap = (position[&b] + len - position[&a]) % len;
        gap.min(len - gap)
    };
    let mut best: Option<(usize, Vec<usize>)> = None;
    let offer = |best: &mut Option<(usize, Vec<usize>)>, a: usize, b: usize, mid: Option<Vec<usize>>| {
        if let Some(mid) = mid {
            if best.as_ref().is_none_or(|(s, _)| spread(a, b) > *s) {
                let mut path = vec![a];
                path.extend(mid);
                path.push(b);
                *best = Some((spread(a, b), path));
            }
        }
    };
    let inside: BTreeSet<usize> =
        separator.iter().copied().filter(|v| *v < g.n() && !position.contains_key(v)).collect();
    let mut seen = BTreeSet::new();
    for &start in &inside {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.rotation(u) {
                if inside.contains(&w) && seen.insert(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        let ends: BTreeSet<usize> =
            comp.iter().flat_map(|&u| g.rotation(u).iter().copied()).filter(|w| position.contains_key(w)).collect();
        for &a in &ends {
            for &b in ends.range(a + 1..) {
                offer(&mut best, a, b, bfs_between(g, &comp, a, b));
            }
        }
    }
    if best.is_none() {
        let strict: Vec<usize> = (0..g.n()).filter(|v| !position.contains_key(v)).collect();
        let on_cycle: Vec<usize> = separator.iter().copied().filter(|v| position.contains_key(v)).collect();
        for (i, &a) in on_cycle.iter().enumerate() {
            for &b in &on_cycle[i + 1..] {
                let chord = g.has_edge(a, b) && spread(a, b) > 1;
                offer(&mut best, a, b, if chord { Some(Vec::new()) } else { bfs_between(g, &strict, a, b) });
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Shortest path inside `comp` from a neighbour of `a` to a neighbour of `b`.
fn bfs_between(g: &planar_core::PlaneGraph, comp: &[usize], a: usize, b: usize) -> Option<Vec<usize>> {
    let member: BTreeSet<usize> = comp.iter().copied().collect();
    let mut parent: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &u in g.rotation(a) {
        if member.contains(&u) && !parent.contains_key(&u) {
            parent.insert(u, None);
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        if g.has_edge(u, b) {
            let mut path = vec![u];
            let mut cur = u;
            while let Some(Some(p)) = parent.get(&cur) {
                path.push(*p);
                cur = *p;
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.rotation(u) {
            if member.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, Some(u));
                queue.push_back(w);
            }
        }
    }
    None
}
