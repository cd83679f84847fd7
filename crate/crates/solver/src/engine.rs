use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use counting_kernel::{base_case_solve, brute_table, AnswerTable, Fingerprint, Subproblem};
use planar_core::outerplanarity_index;
use reduction_suite::{reduce_outerplanarity, Plan, ReductionKind, ReductionOutput, ReductionParams};
use serde::Serialize;

use crate::config::SolverConfig;
use crate::reduce::{clean_up, clean_up_mass, main_reduce, small_monitors};
use crate::SolverError;

/// Counters gathered while solving.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Stats {
    pub mode: String,
    pub subproblems: usize,
    pub base_cases: usize,
    pub memo_hits: usize,
    pub max_table: usize,
    pub max_depth: usize,
    pub reductions: BTreeMap<String, usize>,
    /// Reductions that failed and fell back to the base case.
    pub fallbacks: usize,
    /// Children whose interior or budget grew.
    pub strictness_violations: usize,
    /// Broken structural invariants of reduction plans.
    pub audit_violations: Vec<String>,
    pub trace: Vec<String>,
}

#[derive(Default)]
struct Counters {
    subproblems: AtomicUsize,
    base_cases: AtomicUsize,
    memo_hits: AtomicUsize,
    max_table: AtomicUsize,
    max_depth: AtomicUsize,
    fallbacks: AtomicUsize,
    strictness: AtomicUsize,
    reductions: Mutex<BTreeMap<String, usize>>,
    audit: Mutex<Vec<String>>,
    trace: Mutex<Vec<String>>,
}

/// Recursive solver for one pattern context. Memoizes tables by fingerprint.
pub struct Solver<'a> {
    cfg: &'a SolverConfig,
    params: ReductionParams,
    base_threshold: usize,
    boundary_trigger: usize,
    clean_trigger: usize,
    memo: Mutex<HashMap<Fingerprint, AnswerTable>>,
    counters: Counters,
}

/// Size measure that every child must not exceed: interior size and budget on the vertex set.
fn measure(sub: &Subproblem) -> (usize, usize) {
    (sub.interior().len(), sub.upp(&sub.verts))
}

impl<'a> Solver<'a> {
    pub fn new(cfg: &'a SolverConfig, k: usize) -> Self {
        Solver {
            cfg,
            params: cfg.params_for(k),
            base_threshold: cfg.base_threshold_for(k),
            boundary_trigger: cfg.boundary_trigger_for(k),
            clean_trigger: cfg.clean_trigger_for(k),
            memo: Mutex::new(HashMap::new()),
            counters: Counters::default(),
        }
    }

    pub fn stats(&self) -> Stats {
        let c = &self.counters;
        let mut trace = c.trace.lock().expect("trace lock").clone();
        trace.sort();
        Stats {
            mode: String::new(),
            subproblems: c.subproblems.load(Ordering::Relaxed),
            base_cases: c.base_cases.load(Ordering::Relaxed),
            memo_hits: c.memo_hits.load(Ordering::Relaxed),
            max_table: c.max_table.load(Ordering::Relaxed),
            max_depth: c.max_depth.load(Ordering::Relaxed),
            reductions: c.reductions.lock().expect("reduction lock").clone(),
            fallbacks: c.fallbacks.load(Ordering::Relaxed),
            strictness_violations: c.strictness.load(Ordering::Relaxed),
            audit_violations: c.audit.lock().expect("audit lock").clone(),
            trace,
        }
    }

    pub fn solve(&self, sub: &Subproblem) -> Result<AnswerTable, SolverError> {
        self.solve_at(sub, 0)
    }

    /// Table of a plan whose leaves are solved recursively.
    pub fn solve_plan(&self, sub: &Subproblem, out: ReductionOutput) -> Result<AnswerTable, SolverError> {
        self.run(sub, out, 0)
    }

    fn solve_at(&self, sub: &Subproblem, depth: usize) -> Result<AnswerTable, SolverError> {
        let sub = sub.normalized();
        self.counters.subproblems.fetch_add(1, Ordering::Relaxed);
        self.counters.max_depth.fetch_max(depth, Ordering::Relaxed);
        if sub.trivially_empty() {
            return Ok(AnswerTable::new());
        }
        let key = sub.fingerprint();
        if self.cfg.memoize {
            if let Some(t) = self.memo.lock().expect("memo lock").get(&key) {
                self.counters.memo_hits.fetch_add(1, Ordering::Relaxed);
                return Ok(t.clone());
            }
        }
        let table = self.compute(&sub, depth)?;
        self.counters.max_table.fetch_max(table.len(), Ordering::Relaxed);
        if self.cfg.memoize {
            self.memo.lock().expect("memo lock").entry(key).or_insert_with(|| table.clone());
        }
        Ok(table)
    }

    fn base(&self, sub: &Subproblem) -> AnswerTable {
        self.counters.base_cases.fetch_add(1, Ordering::Relaxed);
        if sub.verts.is_empty() {
            brute_table(sub)
        } else {
            base_case_solve(sub)
        }
    }

    fn compute(&self, sub: &Subproblem, depth: usize) -> Result<AnswerTable, SolverError> {
        if sub.verts.is_empty() {
            return Ok(self.base(sub));
        }
        let comps = sub.components();
        if comps.len() > 1 {
            let first = comps[0].clone();
            let rest = sub.verts.difference(&first);
            let plan = Plan::split(sub, first, rest)?;
            return self.run(sub, ReductionOutput { kind: ReductionKind::Split, plan }, depth);
        }
        if sub.boundary.is_empty() && outerplanarity_index(&sub.plane()) > sub.k() {
            if let Ok(plan) = reduce_outerplanarity(sub) {
                return self.run(sub, ReductionOutput { kind: ReductionKind::Outerplanarity, plan }, depth);
            }
        }
        let (interior, budget) = measure(sub);
        if interior.min(budget) <= self.base_threshold {
            return Ok(self.base(sub));
        }
        if depth >= self.cfg.max_depth {
            return Err(SolverError::DepthExceeded(depth));
        }
        let mass = clean_up_mass(sub);
        let small = small_monitors(sub);
        let needs_clean = sub.boundary.len() >= self.boundary_trigger || sub.upp(&sub.boundary) + small >= self.clean_trigger;
        let out = if needs_clean { clean_up(sub, &mass, &self.params) } else { main_reduce(sub, &self.params) };
        match out {
            Ok(out) => self.run(sub, out, depth),
            Err(_) => {
                self.counters.fallbacks.fetch_add(1, Ordering::Relaxed);
                Ok(self.base(sub))
            }
        }
    }

    fn run(&self, sub: &Subproblem, out: ReductionOutput, depth: usize) -> Result<AnswerTable, SolverError> {
        let name = format!("{:?}", out.kind);
        *self.counters.reductions.lock().expect("reduction lock").entry(name.clone()).or_default() += 1;
        let problems = audit(&out.plan, self.params.p.max(7));
        if !problems.is_empty() {
            self.counters.audit.lock().expect("audit lock").extend(problems);
        }
        if self.cfg.trace {
            let line = format!("depth={depth} kind={name} n={} b={} {}", sub.verts.len(), sub.boundary.len(), out.plan.shape());
            self.counters.trace.lock().expect("trace lock").push(line);
        }

        let mut children: Vec<&Subproblem> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for child in out.children() {
            if seen.insert(child.fingerprint()) {
                children.push(child);
            }
        }
        let parent = measure(sub);
        let solved = self.solve_children(&children, |child| {
            let own = measure(child);
            if own.0 > parent.0 || own.1 > parent.1 {
                self.counters.strictness.fetch_add(1, Ordering::Relaxed);
                return Ok(self.base(&child.normalized()));
            }
            if own == parent && child.verts == sub.verts {
                // No progress: same graph, only more monitors.
                let child = child.normalized();
                if child.trivially_empty() {
                    return Ok(AnswerTable::new());
                }
                return Ok(self.base(&child));
            }
            self.solve_at(child, depth + 1)
        })?;
        let tables: HashMap<Fingerprint, AnswerTable> =
            children.iter().map(|c| c.fingerprint()).zip(solved).collect();
        Ok(out.combine(&tables))
    }

    fn solve_children<F>(&self, children: &[&Subproblem], solve: F) -> Result<Vec<AnswerTable>, SolverError>
    where
        F: Fn(&Subproblem) -> Result<AnswerTable, SolverError> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.cfg.parallel && children.len() > 1 {
            use rayon::prelude::*;
            return children.par_iter().map(|c| solve(c)).collect();
        }
        children.iter().map(|c| solve(c)).collect()
    }
}

/// Structural invariants of a plan: partitions keep the graph and extend the monitor list by
/// at most `max_added`, splits give each side the old boundary plus the shared vertices, and
/// chain and layer pieces stay inside their parent.
pub fn audit(plan: &Plan, max_added: usize) -> Vec<String> {
    let mut out = Vec::new();
    audit_into(plan, max_added, &mut out);
    out
}

fn audit_into(plan: &Plan, max_added: usize, out: &mut Vec<String>) {
    match plan {
        Plan::Leaf(_) => {}
        Plan::Partition { sub, parts } => {
            for part in parts {
                let child = part.sub();
                if child.verts != sub.verts || child.boundary != sub.boundary {
                    out.push("partition part changes the graph or boundary".into());
                }
                let m = sub.monitors.len();
                if child.monitors.len() < m || child.monitors.0[..m] != sub.monitors.0[..] {
                    out.push("partition part drops parent monitors".into());
                } else if child.monitors.len() - m > max_added {
                    out.push(format!("partition part adds {} monitors", child.monitors.len() - m));
                }
                audit_into(part, max_added, out);
            }
        }
        Plan::Split { sub, left_verts, right_verts, left, right } => {
            let shared = left_verts.intersection(right_verts);
            for (verts, child) in [(left_verts, left), (right_verts, right)] {
                let c = child.sub();
                let expected = sub.boundary.intersection(verts).union(&shared);
                if c.verts != *verts || c.boundary != expected {
                    out.push("split side has the wrong vertices or boundary".into());
                }
                if c.interior().len() > sub.interior().len() {
                    out.push("split side has a larger interior".into());
                }
                audit_into(child, max_added, out);
            }
        }
        Plan::Chain(chain) => {
            let public = (0..chain.cycles.len()).fold(chain.sub.boundary.clone(), |acc, z| acc.union(chain.public(z)));
            for piece in chain.pieces() {
                let c = piece.sub();
                if !c.verts.is_subset(&chain.sub.verts) || !c.boundary.is_subset(&public) {
                    out.push("chain piece leaves its parent or has a private boundary vertex".into());
                }
                audit_into(piece, max_added, out);
            }
        }
        Plan::Layers(layers) => {
            for piece in layers.pieces() {
                let c = piece.sub();
                if !c.verts.is_subset(&layers.sub.verts) {
                    out.push("layer piece leaves its parent".into());
                }
                audit_into(piece, max_added, out);
            }
        }
    }
}
