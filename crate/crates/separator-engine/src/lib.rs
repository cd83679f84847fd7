//! Separators on embedded planar graphs: balanced fundamental-cycle separators under exact
//! rational weights, alignments of cycles, separator chains versus nearly disjoint path
//! systems, and non-crossing ordering of paths with shared endpoints.

mod alignment;
mod apex;
mod balanced;
mod chain;
mod dump;
mod menger;
mod noncrossing;
mod split;
mod weights;

use planar_core::EmbedError;
use thiserror::Error;

pub use alignment::{align, enumerate_alignments, enumerate_alignments_by_pattern_quantiles, Alignment, Direction};
pub use apex::{apex_graph, boundary_walk, menger_plus, ApexGraph};
pub use balanced::{balanced_cycle_separator, balanced_for_set, is_triangulated, strict_side_weights};
pub use chain::{reach, SeparatorChain};
pub use dump::{dump_separators, Role};
pub use menger::{menger_duality, validate_outcome, MengerOutcome};
pub use noncrossing::sort_noncrossing;
pub use split::split_cycle;
pub use weights::WeightAssignment;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("invalid weights: {0}")]
    BadWeights(String),
    #[error("weight assignment is not 1/4-proper")]
    NotProper,
    #[error("graph is not triangulated")]
    NotTriangulated,
    #[error("no fundamental cycle is balanced")]
    NoBalancedCycle,
    #[error("quota too small: {found} marked cycle vertices, need at least {need}")]
    QuotaTooSmall { found: usize, need: usize },
    #[error("invalid alignment: {0}")]
    BadAlignment(String),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("alignment cycle is not a face boundary of the graph")]
    NotOnBoundary,
    #[error("paths do not share the endpoints {0} and {1}")]
    EndpointMismatch(usize, usize),
    #[error("paths contain a directed cycle")]
    CyclicPaths,
    #[error("neither outcome validates: {0}")]
    NoOutcome(String),
    #[error("separator chain violated: {0}")]
    ChainViolation(String),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}
