use std::fmt;

use counting_kernel::{derive_split_subproblems, sparse_separation_combine, AnswerTable, Monitor, Subproblem};
use planar_core::VSet;

use crate::chain::ChainPlan;
use crate::families::{extended, infeasible};
use crate::outerplanarity::LayerPlan;
use crate::ReductionError;

/// A cycle whose vertices are split into heavy, light and discarded ones (global ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedCycle {
    pub verts: Vec<usize>,
    pub heavy: VSet,
    pub light: VSet,
    pub discarded: VSet,
}

impl AnnotatedCycle {
    /// Every vertex heavy.
    pub fn fresh(verts: Vec<usize>, universe: usize) -> Self {
        let heavy = VSet::from_iter_in(universe, verts.iter().copied());
        AnnotatedCycle { verts, heavy, light: VSet::empty(universe), discarded: VSet::empty(universe) }
    }

    pub fn vertex_set(&self) -> VSet {
        self.heavy.union(&self.light).union(&self.discarded)
    }

    /// The partition covers exactly the cycle vertices and its parts are disjoint.
    pub fn is_consistent(&self) -> bool {
        let all = VSet::from_iter_in(self.heavy.universe(), self.verts.iter().copied());
        self.heavy.is_disjoint(&self.light)
            && self.heavy.is_disjoint(&self.discarded)
            && self.light.is_disjoint(&self.discarded)
            && self.vertex_set() == all
    }
}

/// A child subproblem, optionally with the cycle it is associated with.
#[derive(Clone, Debug)]
pub struct Leaf {
    pub sub: Subproblem,
    pub cycle: Option<AnnotatedCycle>,
}

impl Leaf {
    pub fn plain(sub: Subproblem) -> Self {
        Leaf { sub, cycle: None }
    }
}

/// How the table of `sub()` is assembled from the tables of the leaves.
#[derive(Clone, Debug)]
pub enum Plan {
    Leaf(Leaf),
    /// The parts carry extra monitors whose predicates partition the maps of `sub`; their
    /// tables are cut back to the monitors of `sub` and added.
    Partition { sub: Subproblem, parts: Vec<Plan> },
    /// Sparse separation `(left_verts, right_verts)` of `sub`.
    Split { sub: Subproblem, left_verts: VSet, right_verts: VSet, left: Box<Plan>, right: Box<Plan> },
    Chain(Box<ChainPlan>),
    Layers(Box<LayerPlan>),
}

impl Plan {
    pub fn leaf(sub: Subproblem) -> Plan {
        Plan::Leaf(Leaf::plain(sub))
    }

    /// The subproblem whose table this plan computes.
    pub fn sub(&self) -> &Subproblem {
        match self {
            Plan::Leaf(l) => &l.sub,
            Plan::Partition { sub, .. } | Plan::Split { sub, .. } => sub,
            Plan::Chain(c) => &c.sub,
            Plan::Layers(l) => &l.sub,
        }
    }

    /// Split of `sub` into two leaves.
    pub fn split(sub: &Subproblem, left: VSet, right: VSet) -> Result<Plan, ReductionError> {
        let (a, b) = derive_split_subproblems(sub, &left, &right)?;
        Ok(Plan::Split {
            sub: sub.clone(),
            left_verts: left,
            right_verts: right,
            left: Box::new(Plan::leaf(a)),
            right: Box::new(Plan::leaf(b)),
        })
    }

    /// One leaf per monitor family, skipping families no map can satisfy.
    pub fn partition(sub: &Subproblem, families: Vec<Vec<Monitor>>) -> Plan {
        let parts = families
            .into_iter()
            .map(|fam| extended(sub, fam))
            .filter(|child| !infeasible(child))
            .map(Plan::leaf)
            .collect();
        Plan::Partition { sub: sub.clone(), parts }
    }

    pub fn leaves(&self) -> Vec<&Leaf> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a Leaf>) {
        match self {
            Plan::Leaf(l) => out.push(l),
            Plan::Partition { parts, .. } => parts.iter().for_each(|p| p.collect(out)),
            Plan::Split { left, right, .. } => {
                left.collect(out);
                right.collect(out);
            }
            Plan::Chain(c) => c.pieces().for_each(|p| p.collect(out)),
            Plan::Layers(l) => l.pieces().for_each(|p| p.collect(out)),
        }
    }

    /// Replaces every leaf by a plan for the same subproblem.
    pub fn map_leaves(self, f: &mut dyn FnMut(Leaf) -> Plan) -> Plan {
        match self {
            Plan::Leaf(l) => f(l),
            Plan::Partition { sub, parts } => {
                Plan::Partition { sub, parts: parts.into_iter().map(|p| p.map_leaves(f)).collect() }
            }
            Plan::Split { sub, left_verts, right_verts, left, right } => Plan::Split {
                sub,
                left_verts,
                right_verts,
                left: Box::new(left.map_leaves(f)),
                right: Box::new(right.map_leaves(f)),
            },
            Plan::Chain(c) => Plan::Chain(Box::new(c.map_pieces(f))),
            Plan::Layers(l) => Plan::Layers(Box::new(l.map_pieces(f))),
        }
    }

    /// Table of `sub()` given a table for every leaf subproblem.
    pub fn eval(&self, solve: &dyn Fn(&Subproblem) -> AnswerTable) -> AnswerTable {
        match self {
            Plan::Leaf(l) => solve(&l.sub),
            Plan::Partition { sub, parts } => {
                let mut out = AnswerTable::new();
                for part in parts {
                    out.merge(part.eval(solve).truncated(sub.monitors.len()));
                }
                out
            }
            Plan::Split { sub, left_verts, right_verts, left, right } => {
                sparse_separation_combine(sub, left_verts, right_verts, &left.eval(solve), &right.eval(solve))
            }
            Plan::Chain(c) => c.eval(solve),
            Plan::Layers(l) => l.eval(solve),
        }
    }

    /// Number of inner nodes of each kind, for traces.
    pub fn shape(&self) -> PlanShape {
        let mut shape = PlanShape::default();
        self.count(&mut shape);
        shape
    }

    fn count(&self, s: &mut PlanShape) {
        match self {
            Plan::Leaf(_) => s.leaves += 1,
            Plan::Partition { parts, .. } => {
                s.partitions += 1;
                parts.iter().for_each(|p| p.count(s));
            }
            Plan::Split { left, right, .. } => {
                s.splits += 1;
                left.count(s);
                right.count(s);
            }
            Plan::Chain(c) => {
                s.chains += 1;
                c.pieces().for_each(|p| p.count(s));
            }
            Plan::Layers(l) => {
                s.layers += 1;
                l.pieces().for_each(|p| p.count(s));
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PlanShape {
    pub leaves: usize,
    pub partitions: usize,
    pub splits: usize,
    pub chains: usize,
    pub layers: usize,
}

impl fmt::Display for PlanShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "leaves={} partitions={} splits={} chains={} layers={}",
            self.leaves, self.partitions, self.splits, self.chains, self.layers
        )
    }
}
