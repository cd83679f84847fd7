use std::sync::Arc;

use pattern_catalog::{Pattern, SeparationIndex};
use planar_core::{Graph, PlaneGraph, VSet};

use crate::monitor::{Monitor, MonitorRole, MonitorSet};
use crate::KernelError;

/// How pattern edges must be reflected in the host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeRule {
    /// Edges and non-edges both preserved (induced copies).
    Induced,
    /// Pattern edges must map to host edges (subgraph copies).
    Subgraph,
}

impl EdgeRule {
    pub fn allows(self, pattern_edge: bool, host_edge: bool) -> bool {
        match self {
            EdgeRule::Induced => pattern_edge == host_edge,
            EdgeRule::Subgraph => !pattern_edge || host_edge,
        }
    }
}

/// The pattern together with its separation index and the edge rule.
#[derive(Debug)]
pub struct PatternContext {
    pub index: SeparationIndex,
    pub rule: EdgeRule,
}

impl PatternContext {
    pub fn new(pattern: Pattern, rule: EdgeRule) -> Arc<Self> {
        Arc::new(PatternContext { index: SeparationIndex::new(pattern), rule })
    }

    pub fn pattern(&self) -> &Pattern {
        self.index.pattern()
    }

    pub fn k(&self) -> usize {
        self.pattern().k()
    }
}

/// Root host graph with its embedding; subproblems are vertex subsets of it.
#[derive(Debug)]
pub struct Host {
    pub graph: Graph,
    pub plane: PlaneGraph,
}

impl Host {
    pub fn new(plane: PlaneGraph) -> Arc<Self> {
        Arc::new(Host { graph: plane.graph(), plane })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Host subgraph `G[verts]`, boundary and monitors.
#[derive(Clone, Debug)]
pub struct Subproblem {
    pub host: Arc<Host>,
    pub ctx: Arc<PatternContext>,
    pub verts: VSet,
    pub boundary: VSet,
    pub monitors: MonitorSet,
}

/// Exact identity of a subproblem within one host and pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub verts: VSet,
    pub boundary: VSet,
    pub monitors: MonitorSet,
}

impl Subproblem {
    /// `(G, ∅, {(V(G), 0, k)})`.
    pub fn top(host: Arc<Host>, ctx: Arc<PatternContext>) -> Self {
        let n = host.n();
        let k = ctx.k();
        let verts = VSet::full(n);
        let monitors = MonitorSet::new(vec![Monitor::new(verts.clone(), 0, k, MonitorRole::Total)]);
        Subproblem { host, ctx, verts, boundary: VSet::empty(n), monitors }
    }

    pub fn on(&self, verts: VSet, boundary: VSet, monitors: MonitorSet) -> Self {
        Subproblem { host: Arc::clone(&self.host), ctx: Arc::clone(&self.ctx), verts, boundary, monitors }
    }

    pub fn k(&self) -> usize {
        self.ctx.k()
    }

    pub fn universe(&self) -> usize {
        self.host.n()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint { verts: self.verts.clone(), boundary: self.boundary.clone(), monitors: self.monitors.clone() }
    }

    /// Embedded `G[verts]`; local vertex `i` is named by its global id.
    pub fn plane(&self) -> PlaneGraph {
        self.host.plane.induced(&self.verts.to_vec())
    }

    pub fn interior(&self) -> VSet {
        self.verts.difference(&self.boundary)
    }

    pub fn upp(&self, s: &VSet) -> usize {
        self.monitors.upp_of(s, self.k())
    }

    /// Checks boundary and monitor containment.
    pub fn check(&self) -> Result<(), KernelError> {
        if !self.boundary.is_subset(&self.verts) {
            return Err(KernelError::BoundaryOutside);
        }
        if self.monitors.iter().any(|m| m.low > m.upp || m.upp > self.k()) {
            return Err(KernelError::BadMonitor);
        }
        Ok(())
    }

    /// Deletes vertices of zero-range monitors and cuts monitor sets down to `verts`.
    pub fn normalized(&self) -> Subproblem {
        let forbidden = self.monitors.forbidden(self.universe());
        let verts = self.verts.difference(&forbidden);
        let boundary = self.boundary.intersection(&verts);
        let monitors = MonitorSet::new(
            self.monitors
                .iter()
                .map(|m| Monitor::new(m.set.intersection(&verts), m.low, m.upp, m.role))
                .collect(),
        );
        self.on(verts, boundary, monitors)
    }

    /// Some monitor demands more vertices than its set has.
    pub fn trivially_empty(&self) -> bool {
        self.monitors.iter().any(|m| m.low > m.set.intersection_count(&self.verts) || m.low > m.upp)
    }

    /// Connected components of `G[verts]`, as global vertex sets.
    pub fn components(&self) -> Vec<VSet> {
        let verts = self.verts.to_vec();
        let local = self.host.graph.induced(&verts);
        local
            .components()
            .into_iter()
            .map(|c| VSet::from_iter_in(self.universe(), c.into_iter().map(|i| verts[i])))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.host.graph.has_edge(u, v)
    }
}
