//! Monitors, subproblems and answer tables; the split join, the tree-decomposition base case
//! and the sum-product evaluators used by the inclusion-exclusion combiners.

mod basecase;
mod brute;
mod ie;
mod join;
mod monitor;
mod subproblem;
mod table;

use thiserror::Error;

pub use basecase::{base_case_solve, decomposition};
pub use brute::brute_table;
pub use ie::{closed_walks, ie_sum_product, ie_sum_product_wrap, Transfer};
pub use join::{derive_split_subproblems, forget, join, sparse_separation_combine};
pub use monitor::{FeasibleVectors, Monitor, MonitorRole, MonitorSet};
pub use subproblem::{EdgeRule, Fingerprint, Host, PatternContext, Subproblem};
pub use table::{AnswerTable, Key};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("walk length {0} is below 2")]
    WalkTooShort(usize),
    #[error("boundary is not inside the vertex set")]
    BoundaryOutside,
    #[error("monitor range is empty or exceeds the pattern size")]
    BadMonitor,
    #[error("not a separation of the host: {0}")]
    NotASeparation(String),
}
