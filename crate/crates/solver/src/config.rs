use reduction_suite::ReductionParams;
use serde::Serialize;

/// Which engine answers the top-level subproblem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Pick by size: brute force, then tree decomposition, then the full pipeline.
    Auto,
    /// Backtracking over complete maps.
    Brute,
    /// Tree-decomposition dynamic programming over the whole host.
    Treewidth,
    /// Layer decomposition and recursive reductions.
    Full,
}

/// How subgraph counts are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgraphMethod {
    /// Edge condition "pattern edge implies host edge" throughout.
    Direct,
    /// Induced count of edge-gadget graphs.
    Gadget,
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub mode: Mode,
    pub subgraph_method: SubgraphMethod,
    /// Clean-up trigger factor on `upp(B) + |small monitors|` (times `√k·log⁵k`).
    pub clean_factor: f64,
    /// Base-case factor (times `√k·log⁵k`).
    pub base_factor: f64,
    /// Overrides of the derived thresholds; `None` uses the formula.
    pub base_threshold: Option<usize>,
    pub boundary_trigger: Option<usize>,
    pub clean_trigger: Option<usize>,
    /// Reduction thresholds; `None` uses the literal constants for the pattern size.
    pub reduction: Option<ReductionParams>,
    /// Scale every threshold down so that all reductions run on small inputs.
    pub desk: bool,
    pub memoize: bool,
    /// Solve independent children on the thread pool (needs the `parallel` feature).
    pub parallel: bool,
    pub max_depth: usize,
    /// `Auto` brute-forces while `n^k` stays below this.
    pub brute_budget: f64,
    /// `Auto` runs the tree decomposition while the outerplanarity index is at most this.
    pub treewidth_index: usize,
    /// Record one line per reduction.
    pub trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            mode: Mode::Auto,
            subgraph_method: SubgraphMethod::Direct,
            clean_factor: 1.0,
            base_factor: 1.0,
            base_threshold: None,
            boundary_trigger: None,
            clean_trigger: None,
            reduction: None,
            desk: false,
            memoize: true,
            parallel: true,
            max_depth: 64,
            brute_budget: 2e6,
            treewidth_index: 4,
            trace: false,
        }
    }
}

impl SolverConfig {
    /// Literal thresholds in the full pipeline.
    pub fn literal() -> Self {
        SolverConfig { mode: Mode::Full, ..Default::default() }
    }

    /// Full pipeline with thresholds scaled down for small inputs.
    pub fn desk() -> Self {
        SolverConfig {
            mode: Mode::Full,
            desk: true,
            base_threshold: Some(2),
            boundary_trigger: Some(6),
            clean_trigger: Some(6),
            ..Default::default()
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    fn poly_log(k: usize) -> f64 {
        let k = k.max(2) as f64;
        k.sqrt() * k.log2().powi(5)
    }

    pub fn base_threshold_for(&self, k: usize) -> usize {
        self.base_threshold.unwrap_or_else(|| (self.base_factor * Self::poly_log(k)).ceil() as usize)
    }

    pub fn boundary_trigger_for(&self, k: usize) -> usize {
        self.boundary_trigger.unwrap_or(k.pow(4))
    }

    pub fn clean_trigger_for(&self, k: usize) -> usize {
        self.clean_trigger.unwrap_or_else(|| (self.clean_factor * Self::poly_log(k)).ceil() as usize)
    }

    pub fn params_for(&self, k: usize) -> ReductionParams {
        match &self.reduction {
            Some(p) => p.clone(),
            None if self.desk => ReductionParams::desk(k),
            None => ReductionParams::literal(k),
        }
    }
}
