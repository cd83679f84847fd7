//! Structural reductions of counting subproblems.
//!
//! A reduction turns one subproblem into a [`Plan`]: a tree whose leaves are child
//! subproblems and whose inner nodes recombine child answer tables exactly. Inner nodes are
//! monitor partitions, sparse splits, the nested-cycle chain and the layer decomposition;
//! planar geometry only decides which of them to build.

mod balance;
mod chain;
mod families;
mod geometry;
mod outerplanarity;
mod plan;
mod separators;
mod sparsify;

use std::collections::HashMap;

use counting_kernel::{AnswerTable, Fingerprint, KernelError, Subproblem};
use planar_core::EmbedError;
use separator_engine::SeparatorError;
use thiserror::Error;

pub use balance::{acquire_balance, balance_on_cycle};
pub use chain::{reduce_nearly_disjoint_paths, ChainPlan, NestedCycle};
pub use families::{extended, infeasible, restricted, threshold_families};
pub use geometry::{Geometry, Side, SideGraph, Sides};
pub use outerplanarity::{reduce_outerplanarity, LayerPlan, Layering};
pub use plan::{AnnotatedCycle, Leaf, Plan, PlanShape};
pub use separators::reduce_disjoint_separators;
pub use sparsify::{Selection, Sparsifier};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("subproblem graph is disconnected")]
    Disconnected,
    #[error("subproblem has only {0} vertices")]
    TooSmall(usize),
    #[error("separator sets overlap")]
    NotDisjoint,
    #[error("nested cycles rejected: {0}")]
    ChainRejected(String),
    #[error("reduction not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
}

/// Thresholds shared by the reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionParams {
    /// A balancing cycle is aligned for maps with more than `theta` vertices on it.
    pub theta: usize,
    /// Number of disjoint separators asked from the duality.
    pub p: usize,
    /// Number of paths asked from the duality.
    pub q: usize,
    /// Side-selection threshold of the balancing partition (`θ/2` by default).
    pub balance_side_threshold: usize,
    /// Split-cycle threshold of the balancing partition (`θ/4` by default).
    pub balance_cycle_threshold: usize,
    /// Side-selection threshold of the sparsification rounds.
    pub side_threshold: usize,
    /// Split-cycle threshold of the sparsification rounds.
    pub cycle_threshold: usize,
    /// Sparsification rounds per cycle.
    pub rounds: usize,
}

impl ReductionParams {
    /// Literal constants for pattern size `k`.
    pub fn literal(k: usize) -> Self {
        let root = ceil_sqrt(k);
        let log = log_four_thirds(k);
        let theta = (100 * root * log).max(4);
        ReductionParams {
            theta,
            balance_side_threshold: theta / 2,
            balance_cycle_threshold: theta / 4,
            p: root.max(1),
            q: 3 * k.pow(3),
            side_threshold: 4 * root,
            cycle_threshold: 2 * root,
            rounds: log,
        }
    }

    /// Scaled-down constants under which every branch is reachable for small `k`.
    pub fn desk(k: usize) -> Self {
        ReductionParams {
            theta: 4,
            balance_side_threshold: 2,
            balance_cycle_threshold: 1,
            p: 2,
            q: 2 * k + 2,
            side_threshold: (k / 2).max(1),
            cycle_threshold: (k / 4).max(1),
            rounds: 2,
        }
    }

    pub fn check(&self) -> Result<(), ReductionError> {
        if self.theta < 4 {
            return Err(ReductionError::BadParameters(format!("theta {} is below 4", self.theta)));
        }
        if self.p == 0 || self.q == 0 {
            return Err(ReductionError::BadParameters("duality sizes must be positive".into()));
        }
        Ok(())
    }
}

pub fn ceil_sqrt(k: usize) -> usize {
    let mut r = (k as f64).sqrt() as usize;
    while r * r < k {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= k {
        r -= 1;
    }
    r
}

/// `⌈log_{4/3} k⌉`, at least 1.
pub fn log_four_thirds(k: usize) -> usize {
    let mut rounds = 1;
    let mut reach = 4.0 / 3.0;
    while reach < k as f64 {
        reach *= 4.0 / 3.0;
        rounds += 1;
    }
    rounds
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Split,
    Balance,
    DisjointSeparators,
    NearlyDisjointPaths,
    Outerplanarity,
    Sparsify,
    CleanUp,
}

/// A plan tagged with the reduction that built it.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub plan: Plan,
}

impl ReductionOutput {
    pub fn children(&self) -> Vec<&Subproblem> {
        self.plan.leaves().into_iter().map(|l| &l.sub).collect()
    }

    /// Parent table from child tables looked up by fingerprint.
    pub fn combine(&self, tables: &HashMap<Fingerprint, AnswerTable>) -> AnswerTable {
        self.plan.eval(&|s| tables.get(&s.fingerprint()).cloned().expect("table for every child"))
    }
}
