use std::time::Instant;

use counting_kernel::{base_case_solve, EdgeRule, Host, PatternContext, Subproblem};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use pattern_catalog::{PatSet, Pattern};
use planar_core::{embed, outerplanarity_index, Graph};
use serde::Serialize;

use crate::backtrack::{automorphisms, count_maps};
use crate::config::{Mode, SolverConfig, SubgraphMethod};
use crate::engine::{Solver, Stats};
use crate::gadget::{arc_gadget, edge_gadget, falling_factorial, Digraph};
use crate::SolverError;

/// Largest gadget pattern still handed to the table-based engines; bigger ones are counted by
/// backtracking, whatever the configured mode.
pub const GADGET_TABLE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Induced,
    Subgraph,
    Directed,
    /// Vertex sets spanning an induced copy.
    InducedSubsets,
    /// Vertex sets spanning a (not necessarily induced) copy.
    SubgraphSubsets,
    DirectedSubsets,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountResult {
    #[serde(serialize_with = "decimal")]
    pub count: BigUint,
    pub semantics: Semantics,
    pub stats: Stats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub ms: u128,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

impl CountResult {
    fn zero(semantics: Semantics, note: &str) -> Self {
        CountResult { count: BigUint::zero(), semantics, stats: Stats::default(), note: Some(note.into()), ms: 0 }
    }

    /// Number of vertex sets carrying a copy, given the number of automorphisms of the pattern.
    pub fn into_subsets(mut self, automorphisms: &BigUint) -> Result<CountResult, SolverError> {
        let (q, r) = (&self.count / automorphisms, &self.count % automorphisms);
        if !r.is_zero() {
            return Err(SolverError::Indivisible(self.count.to_string(), automorphisms.to_string()));
        }
        self.count = q;
        self.semantics = match self.semantics {
            Semantics::Induced | Semantics::InducedSubsets => Semantics::InducedSubsets,
            Semantics::Subgraph | Semantics::SubgraphSubsets => Semantics::SubgraphSubsets,
            Semantics::Directed | Semantics::DirectedSubsets => Semantics::DirectedSubsets,
        };
        Ok(self)
    }
}

/// `|ind(P, G)|` for a planar host.
pub fn count_ind(pattern: &Pattern, host: &Graph, cfg: &SolverConfig) -> Result<CountResult, SolverError> {
    count_rule(pattern, host, EdgeRule::Induced, cfg)
}

/// `|sub(P, G)|` for a planar host, directly or through the edge gadget.
pub fn count_sub(pattern: &Pattern, host: &Graph, cfg: &SolverConfig) -> Result<CountResult, SolverError> {
    match cfg.subgraph_method {
        SubgraphMethod::Direct => count_rule(pattern, host, EdgeRule::Subgraph, cfg),
        SubgraphMethod::Gadget => count_sub_gadget(pattern, host, cfg),
    }
}

fn count_sub_gadget(pattern: &Pattern, host: &Graph, cfg: &SolverConfig) -> Result<CountResult, SolverError> {
    let start = Instant::now();
    check_host(host)?;
    let isolated = pattern.isolated();
    let core = pattern.induced(pattern.all().minus(isolated));
    let shifted = Pattern::from_graph(&edge_gadget(&core.to_graph()))?;
    let inner = gadget_config(cfg, shifted.k());
    let mut res = count_rule(&shifted, &edge_gadget(host), EdgeRule::Induced, &inner)?;
    let scale = BigUint::one() << core.edge_count();
    res.count = exact_div(&res.count, &scale)? * falling_factorial(host.n().saturating_sub(core.k()), isolated.len());
    res.semantics = Semantics::Subgraph;
    res.ms = start.elapsed().as_millis();
    Ok(res)
}

/// Number of injective maps preserving arcs, through the arc gadget.
pub fn count_directed(pattern: &Digraph, host: &Digraph, cfg: &SolverConfig) -> Result<CountResult, SolverError> {
    let start = Instant::now();
    check_host(&host.underlying())?;
    let isolated = pattern.isolated();
    let kept: Vec<usize> = (0..pattern.n()).filter(|v| !isolated.contains(v)).collect();
    let core = pattern.induced(&kept);
    let shifted = Pattern::from_graph(&arc_gadget(&core))?;
    let inner = SolverConfig { subgraph_method: SubgraphMethod::Direct, ..gadget_config(cfg, shifted.k()) };
    let mut res = count_sub(&shifted, &arc_gadget(host), &inner)?;
    let scale = BigUint::from(6u32).pow(core.n() as u32);
    res.count = exact_div(&res.count, &scale)? * falling_factorial(host.n().saturating_sub(core.n()), isolated.len());
    res.semantics = Semantics::Directed;
    res.ms = start.elapsed().as_millis();
    Ok(res)
}

/// Automorphisms of a digraph: its arc-preserving injective self-maps.
pub fn directed_automorphisms(d: &Digraph) -> Result<BigUint, SolverError> {
    count_directed(d, d, &SolverConfig::default().with_mode(Mode::Brute)).map(|r| r.count)
}

/// Automorphisms of an undirected pattern.
pub fn pattern_automorphisms(pattern: &Pattern) -> BigUint {
    automorphisms(pattern)
}

fn gadget_config(cfg: &SolverConfig, k: usize) -> SolverConfig {
    let mut inner = cfg.clone();
    if k > GADGET_TABLE_LIMIT {
        inner.mode = Mode::Brute;
    }
    inner
}

fn exact_div(a: &BigUint, b: &BigUint) -> Result<BigUint, SolverError> {
    if !(a % b).is_zero() {
        return Err(SolverError::Indivisible(a.to_string(), b.to_string()));
    }
    Ok(a / b)
}

fn check_host(host: &Graph) -> Result<(), SolverError> {
    embed(host).map(|_| ()).map_err(|_| SolverError::NonPlanarHost)
}

fn semantics_of(rule: EdgeRule) -> Semantics {
    match rule {
        EdgeRule::Induced => Semantics::Induced,
        EdgeRule::Subgraph => Semantics::Subgraph,
    }
}

/// The mode `Auto` resolves to for this input.
pub fn resolve_mode(cfg: &SolverConfig, k: usize, host: &Graph, index: impl FnOnce() -> usize) -> Mode {
    match cfg.mode {
        Mode::Auto => {
            let n = host.n();
            if k <= 3 || n < k || (n as f64).powi(k as i32) <= cfg.brute_budget {
                Mode::Brute
            } else if index() <= cfg.treewidth_index {
                Mode::Treewidth
            } else {
                Mode::Full
            }
        }
        m => m,
    }
}

fn count_rule(pattern: &Pattern, host: &Graph, rule: EdgeRule, cfg: &SolverConfig) -> Result<CountResult, SolverError> {
    let start = Instant::now();
    let plane = embed(host).map_err(|_| SolverError::NonPlanarHost)?;
    let semantics = semantics_of(rule);
    if embed(&pattern.to_graph()).is_err() {
        return Ok(CountResult::zero(semantics, "pattern is not planar, so a planar host has no copy"));
    }
    if pattern.k() > host.n() {
        return Ok(CountResult::zero(semantics, "pattern has more vertices than the host"));
    }
    let mode = resolve_mode(cfg, pattern.k(), host, || outerplanarity_index(&plane));
    let (count, mut stats) = match mode {
        Mode::Brute => (count_maps(pattern, host, rule), Stats::default()),
        _ if host.n() == 0 => (count_maps(pattern, host, rule), Stats::default()),
        Mode::Treewidth => {
            let top = Subproblem::top(Host::new(plane), PatternContext::new(pattern.clone(), rule));
            let table = base_case_solve(&top);
            let stats = Stats { subproblems: 1, base_cases: 1, max_table: table.len(), ..Stats::default() };
            (table.class_total(&top.ctx.index, pattern.all(), PatSet::EMPTY), stats)
        }
        Mode::Full | Mode::Auto => {
            let top = Subproblem::top(Host::new(plane), PatternContext::new(pattern.clone(), rule));
            let solver = Solver::new(cfg, pattern.k());
            let table = solver.solve(&top)?;
            (table.class_total(&top.ctx.index, pattern.all(), PatSet::EMPTY), solver.stats())
        }
    };
    stats.mode = format!("{mode:?}").to_lowercase();
    Ok(CountResult { count, semantics, stats, note: None, ms: start.elapsed().as_millis() })
}
