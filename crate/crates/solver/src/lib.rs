//! Recursive counting of pattern maps into planar hosts.
//!
//! [`Solver`] drives a subproblem to its answer table: small instances go to the
//! tree-decomposition base case, others are reduced (balance and sparsification, or clean-up
//! when the boundary grows) and the children are solved recursively. [`count_ind`],
//! [`count_sub`] and [`count_directed`] are the entry points for whole graphs.

mod backtrack;
mod config;
mod count;
mod engine;
mod gadget;
mod reduce;

pub use backtrack::{automorphisms, count_maps};
pub use config::{Mode, SolverConfig, SubgraphMethod};
pub use count::{
    count_directed, count_ind, count_sub, directed_automorphisms, pattern_automorphisms, resolve_mode, CountResult,
    Semantics, GADGET_TABLE_LIMIT,
};
pub use engine::{audit, Solver, Stats};
pub use gadget::{arc_gadget, edge_gadget, falling_factorial, Digraph};
pub use reduce::{clean_step, clean_up, clean_up_mass, is_easy, small_monitors, main_reduce};

use pattern_catalog::CatalogError;
use reduction_suite::ReductionError;

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("host graph is not planar")]
    NonPlanarHost,
    #[error("recursion depth {0} exceeded the configured guard")]
    DepthExceeded(usize),
    #[error("{0} is not divisible by {1}")]
    Indivisible(String, String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
