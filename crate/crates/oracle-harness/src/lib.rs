//! Ground truth for the counting pipeline: enumeration oracles, a transfer-matrix count of
//! independent sets in grids, seeded planar instance generators and a differential suite that
//! compares every solver mode with the oracle.

mod generators;
mod grid;
mod oracle;
mod suite;

pub use generators::{host, pattern, validate_host, HostKind, InstanceSpec, PatternKind};
pub use grid::{grid_independent_sets, grid_independent_sets_enumerated};
pub use oracle::{enumeration_cost, oracle_count, oracle_count_directed, oracle_count_within, Constraints, DEFAULT_BUDGET};
pub use suite::{cases, ground_truth, run_suite, CaseReport, Profile, Report, SuiteOptions};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("enumeration cost {0:.3e} exceeds the budget")]
    Budget(f64),
    #[error("generator produced an invalid host: {0}")]
    Generator(String),
    #[error(transparent)]
    Solver(#[from] solver::SolverError),
}
